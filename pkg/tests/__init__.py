"""Test package for the scattered order toolkit."""
