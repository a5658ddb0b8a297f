"""Exact construction and verification of self-orthogonal codes from vectorial dual-bent functions."""

__version__ = "0.1.0"
