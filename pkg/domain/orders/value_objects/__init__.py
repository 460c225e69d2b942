"""Order value objects."""
