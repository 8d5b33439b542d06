"""Exact representations of triplet groups and their virtual and welded extensions."""

__version__ = "0.1.0"
