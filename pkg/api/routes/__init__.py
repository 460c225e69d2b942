"""API routes."""