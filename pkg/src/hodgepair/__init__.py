"""Exact verification of Hodge-type identities for pairs of nested Hilbert complexes."""

from .complexes import HilbertComplex, cohomology, dual, hodge_decompose, laplacian
from .linalg import InnerProductSpace, RatMatrix, Subspace
from .pairs import ComplexPair, build_P, harmonic_complexes, make_pair, quotient_morphisms
from .relations import LinearRelation, adjoint, compose, relation_from_matrix

__version__ = "0.1.0"

__all__ = [
    "ComplexPair", "HilbertComplex", "InnerProductSpace", "LinearRelation", "RatMatrix", "Subspace",
    "adjoint", "build_P", "cohomology", "compose", "dual", "harmonic_complexes", "hodge_decompose",
    "laplacian", "make_pair", "quotient_morphisms", "relation_from_matrix",
]
