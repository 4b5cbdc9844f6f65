"""Canonical bases of level-d Fock spaces and decomposition matrices of
Ariki-Koike algebras whose parameters are powers of one root of unity."""

from .afun import a1, a_compare
from .canonical import CanonicalBasis, build_A, compute_basis, reduce
from .decomp import DecompositionMatrix, assemble, serialize
from .flotw import a_sequence, enumerate_flotw, is_flotw, peel_step
from .fock import FockVector, apply_e, apply_f, apply_f_divided
from .laurent import LaurentPoly, bar_symmetric_completion, q_factorial, q_int
from .mpart import Multipartition, Node, ParamSet, enumerate_dpartitions

__all__ = [
    "CanonicalBasis",
    "DecompositionMatrix",
    "FockVector",
    "LaurentPoly",
    "Multipartition",
    "Node",
    "ParamSet",
    "a1",
    "a_compare",
    "a_sequence",
    "apply_e",
    "apply_f",
    "apply_f_divided",
    "assemble",
    "bar_symmetric_completion",
    "build_A",
    "compute_basis",
    "enumerate_dpartitions",
    "enumerate_flotw",
    "is_flotw",
    "peel_step",
    "q_factorial",
    "q_int",
    "reduce",
    "serialize",
]
