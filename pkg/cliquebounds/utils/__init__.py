"""Utility modules for output rendering."""
