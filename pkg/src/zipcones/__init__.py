"""Exact combinatorics of weight cones attached to Hasse invariants on
stacks of G-zips, for GL_n of signature (r, s) and Sp(2n)."""

__version__ = "0.1.0"
