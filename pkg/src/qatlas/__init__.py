"""Exact enumeration and table arithmetic for the classical structures on plane quartics."""

__version__ = "0.1.0"
