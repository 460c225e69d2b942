"""Infrastructure services tests."""