"""Exact Meyer signature cocycle and Meyer functions on handlebody groups."""
