"""Exact lattice distributions of GKP circuit measurements."""
