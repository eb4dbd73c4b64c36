"""Exact computations with the free abelian torus of SL_n(Z[t]), the building
of SL_n(Q((1/t))) and the sphere cycles built from root-group wall elements."""

__version__ = "0.1.0"
