"""API routes tests."""