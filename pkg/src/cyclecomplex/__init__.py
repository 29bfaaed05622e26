"""Oriented multicurves on triangulated surfaces and their cycle complexes."""

from .surface import (
    CombinatorialSurface,
    build_surface,
    genus,
    homology_basis,
    one_vertex_torus,
    standard_surface,
)

__all__ = [
    "CombinatorialSurface",
    "build_surface",
    "genus",
    "homology_basis",
    "one_vertex_torus",
    "standard_surface",
]
