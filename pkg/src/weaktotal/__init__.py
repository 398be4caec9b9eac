"""Exact weak total resolvability parameters of small graphs."""
