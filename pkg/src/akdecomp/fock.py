"""Sparse vectors of the level-d Fock space and the U_q(sl_e^) action on them."""

from __future__ import annotations

from typing import Iterable, Mapping

from .laurent import ONE, ZERO, LaurentPoly, exact_div, q_factorial
from .mpart import (
    Multipartition,
    ParamSet,
    above_key,
    addable_nodes,
    n_stat_total,
    n_stat_zero_nodes,
    removable_nodes,
)


class FockVector:
    """Finitely supported map Multipartition -> LaurentPoly, all of one rank.

    Zero coefficients are never stored. Iteration and rendering follow the
    canonical multipartition order.
    """

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Mapping[Multipartition, LaurentPoly] | None = None):
        self.rank = rank
        self.terms: dict[Multipartition, LaurentPoly] = {}
        for mp, c in (terms or {}).items():
            if mp.rank != rank:
                raise ValueError(f"{mp} has rank {mp.rank}, vector has rank {rank}")
            if c:
                self.terms[mp] = c

    @classmethod
    def unit(cls, mp: Multipartition) -> FockVector:
        return cls(mp.rank, {mp: ONE})

    def __getitem__(self, mp: Multipartition) -> LaurentPoly:
        return self.terms.get(mp, ZERO)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.support())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def support(self) -> list[Multipartition]:
        return sorted(self.terms, key=Multipartition.sort_key)

    def items(self) -> list[tuple[Multipartition, LaurentPoly]]:
        return [(mp, self.terms[mp]) for mp in self.support()]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FockVector):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        return self.rank == other.rank and self.terms == other.terms

    def __add__(self, other: FockVector) -> FockVector:
        return add_vectors(self, other)

    def __neg__(self) -> FockVector:
        return scale(self, LaurentPoly.constant(-1))

    def __sub__(self, other: FockVector) -> FockVector:
        return add_vectors(self, -other)

    def __rmul__(self, c) -> FockVector:
        if isinstance(c, int):
            c = LaurentPoly.constant(c)
        return scale(self, c)

    def __str__(self) -> str:
        return "\n".join(f"{mp} : {c}" for mp, c in self.items())

    def __repr__(self) -> str:
        body = ", ".join(f"{mp}: {c}" for mp, c in self.items())
        return f"FockVector({{{body}}})"


def add_vectors(x: FockVector, y: FockVector) -> FockVector:
    if x.terms and y.terms and x.rank != y.rank:
        raise ValueError(f"rank mismatch: {x.rank} vs {y.rank}")
    rank = x.rank if x.terms else y.rank
    out = dict(x.terms)
    for mp, c in y.terms.items():
        out[mp] = out.get(mp, ZERO) + c
    return FockVector(rank, out)


def scale(v: FockVector, c: LaurentPoly) -> FockVector:
    return FockVector(v.rank, {mp: c * t for mp, t in v.terms.items()})


def _accumulate(rank: int, pieces: Iterable[tuple[Multipartition, LaurentPoly]]) -> FockVector:
    out: dict[Multipartition, LaurentPoly] = {}
    for mp, c in pieces:
        out[mp] = out.get(mp, ZERO) + c
    return FockVector(rank, out)


def _f_on_basis(i: int, lam: Multipartition, p: ParamSet):
    """Yield (mu, exponent) for f_i lam = sum q^{N_b(lam, mu)} mu."""
    addable = addable_nodes(lam, i, p)
    for gamma in addable:
        mu = lam.add_node(gamma, check=False)
        g = above_key(gamma, p)
        below = sum(above_key(n, p) > g for n in addable) - sum(
            above_key(n, p) > g for n in removable_nodes(mu, i, p)
        )
        yield mu, below


def _e_on_basis(i: int, lam: Multipartition, p: ParamSet):
    """Yield (mu, exponent) for e_i lam = sum q^{-N_a(mu, lam)} mu."""
    removable = removable_nodes(lam, i, p)
    for gamma in removable:
        mu = lam.remove_node(gamma, check=False)
        g = above_key(gamma, p)
        above = sum(above_key(n, p) < g for n in addable_nodes(mu, i, p)) - sum(
            above_key(n, p) < g for n in removable
        )
        yield mu, -above


def apply_f(i: int, v: FockVector, p: ParamSet) -> FockVector:
    pieces = (
        (mu, c * LaurentPoly.monomial(exp))
        for lam, c in v.terms.items()
        for mu, exp in _f_on_basis(i, lam, p)
    )
    return _accumulate(v.rank + 1, pieces)


def apply_e(i: int, v: FockVector, p: ParamSet) -> FockVector:
    pieces = (
        (mu, c * LaurentPoly.monomial(exp))
        for lam, c in v.terms.items()
        for mu, exp in _e_on_basis(i, lam, p)
    )
    return _accumulate(max(v.rank - 1, 0), pieces)


def apply_f_divided(i: int, r: int, v: FockVector, p: ParamSet) -> FockVector:
    """f_i^(r) v = f_i^r v / [r]!, divided exactly coefficient by coefficient."""
    if r < 1:
        raise ValueError(f"divided power needs r >= 1, got {r}")
    w = v
    for _ in range(r):
        w = apply_f(i, w, p)
    if r == 1:
        return w
    denom = q_factorial(r)
    return FockVector(w.rank, {mp: exact_div(c, denom) for mp, c in w.terms.items()})


def weight_k(i: int, mp: Multipartition, p: ParamSet) -> LaurentPoly:
    """Eigenvalue of k_{h_i} on mp."""
    return LaurentPoly.monomial(n_stat_total(mp, i, p))


def weight_kd(mp: Multipartition, p: ParamSet) -> LaurentPoly:
    """Eigenvalue of k_d on mp."""
    return LaurentPoly.monomial(-n_stat_zero_nodes(mp, p))
