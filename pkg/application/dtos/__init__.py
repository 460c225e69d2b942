"""Data Transfer Objects for Application Layer"""
