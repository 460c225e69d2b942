"""Order domain services."""
