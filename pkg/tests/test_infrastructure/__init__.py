"""Infrastructure tests package."""