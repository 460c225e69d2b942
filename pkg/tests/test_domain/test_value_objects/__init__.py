"""Domain value objects tests."""