"""Order entities."""
