"""Application commands."""