"""API tests package."""