"""Application commands tests."""