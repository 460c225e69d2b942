"""Spec codec tests."""
