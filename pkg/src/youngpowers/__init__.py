"""Symmetric and exterior powers of Young permutation modules in characteristic p."""
