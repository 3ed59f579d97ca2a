"""Exact Clifford correspondence for split semisimple algebras over GF(p)."""

from .algebra import Algebra, Subalgebra, certify, wedderburn
from .clifford import correspond, induce, is_normal_subring, is_stable, rieffel_stabilizers
from .errors import CliffordError, HypothesesNotMet, InvalidInput, TheoremCheckFailed
from .module import Module

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "Subalgebra",
    "Module",
    "certify",
    "wedderburn",
    "induce",
    "is_stable",
    "is_normal_subring",
    "rieffel_stabilizers",
    "correspond",
    "CliffordError",
    "InvalidInput",
    "HypothesesNotMet",
    "TheoremCheckFailed",
]
