"""Refined torsion of 3-manifolds: manifests, catalog entries and sweeps."""

from ._ntor import (
    PreconditionError,
    ValidationError,
    alexander_polynomial,
    canonical_class,
    catalog,
    catalog_manifest,
    fox_derivative,
    reduce_word,
    render,
    run_manifest,
    sweep,
)

__all__ = [
    "PreconditionError",
    "ValidationError",
    "alexander_polynomial",
    "canonical_class",
    "catalog",
    "catalog_manifest",
    "fox_derivative",
    "reduce_word",
    "render",
    "run_manifest",
    "sweep",
]
