"""Domain services tests."""