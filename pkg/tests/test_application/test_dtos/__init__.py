"""Application DTOs tests package."""