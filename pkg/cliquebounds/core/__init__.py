"""Exact arithmetic: binomials, cascade representations and bound functions."""
