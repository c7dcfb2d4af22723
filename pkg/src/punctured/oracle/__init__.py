"""Brute-force verifiers that share no formulas with the closed-form modules."""

from .cover import cover_crossing, maximal_compatible_sets, oracle_enumerate_maximal_compatible
from .gf import PRIMES
from .homological import (
    ext1_dims,
    oracle_hom_graded,
    oracle_omega_graded,
    oracle_stable_and_ext,
    stable_dims,
    theta_projective,
)
from .lattice import LatticeModule, TruncatedRing, are_isomorphic, relation_defects, syzygy
from .modules import edge_ideal_column, graded_module, theta_module

__all__ = [
    "PRIMES",
    "LatticeModule",
    "TruncatedRing",
    "are_isomorphic",
    "cover_crossing",
    "edge_ideal_column",
    "ext1_dims",
    "graded_module",
    "maximal_compatible_sets",
    "oracle_enumerate_maximal_compatible",
    "oracle_hom_graded",
    "oracle_omega_graded",
    "oracle_stable_and_ext",
    "relation_defects",
    "stable_dims",
    "syzygy",
    "theta_module",
    "theta_projective",
]
