"""Infrastructure config tests."""
