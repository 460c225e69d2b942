"""Application layer tests package."""