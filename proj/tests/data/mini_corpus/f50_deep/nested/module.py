"""Deeply nested module used to verify traversal order."""
