"""Application use cases tests."""