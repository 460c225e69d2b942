"""Infrastructure services."""