"""Domain tests package."""