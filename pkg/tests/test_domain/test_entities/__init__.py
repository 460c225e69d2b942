"""Domain entities tests."""