"""Locally irregular total colorings of graphs."""
