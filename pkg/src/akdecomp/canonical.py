"""Canonical basis of the submodule generated by the empty multipartition.

For each FLOTW multipartition ``lam`` we build the bar-invariant monomial
vector ``A(lam)`` from divided powers along its a-sequence, then subtract
bar-invariant multiples of already-known ``G(nu)`` (larger a_1) until every
off-diagonal coefficient lies in qZ[q].
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial

from .afun import a1
from .errors import InvariantError
from .flotw import a_sequence, enumerate_flotw, is_flotw, runs
from .fock import FockVector, apply_f_divided, scale
from .laurent import ONE, bar_symmetric_completion
from .mpart import Multipartition, ParamSet

log = logging.getLogger(__name__)


@dataclass
class CanonicalBasis:
    params: ParamSet
    rank: int
    entries: dict[Multipartition, FockVector] = field(default_factory=dict)
    order: list[Multipartition] = field(default_factory=list)

    def __getitem__(self, lam: Multipartition) -> FockVector:
        return self.entries[lam]

    def __contains__(self, lam: Multipartition) -> bool:
        return lam in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def labels(self) -> list[Multipartition]:
        """FLOTW labels by decreasing a_1, canonical order among ties."""
        return sorted(self.entries, key=lambda mp: (-a1(mp, self.params), mp.sort_key()))

    def dump(self) -> str:
        blocks = [f"G({lam})\n{self.entries[lam]}" for lam in self.labels()]
        return "\n\n".join(blocks) + "\n"


def _check_triangular(v: FockVector, lam: Multipartition, p: ParamSet, what: str) -> None:
    if v[lam] != ONE:
        raise InvariantError(f"{what}({lam}) has coefficient {v[lam]} at {lam}, expected 1")
    a_lam = a1(lam, p)
    for mu in v.terms:
        if mu != lam and a1(mu, p) <= a_lam:
            raise InvariantError(
                f"{what}({lam}) has {mu} in its support with a1 {a1(mu, p)} <= {a_lam}"
            )


def build_A(lam: Multipartition, p: ParamSet, scan: str = "increasing") -> FockVector:
    """Apply f_{i_s}^{(a_s)} ... f_{i_1}^{(a_1)} to the empty multipartition."""
    v = FockVector.unit(Multipartition.empty(p.d))
    for i, r in runs(a_sequence(lam, p, scan)):
        v = apply_f_divided(i, r, v, p)
    _check_triangular(v, lam, p, "A")
    return v


def reduce(
    A: FockVector,
    lam: Multipartition,
    known: dict[Multipartition, FockVector] | CanonicalBasis,
    p: ParamSet,
    reverse_ties: bool = False,
) -> FockVector:
    """Subtract bar-invariant multiples of known G(nu) until A = lam mod qZ[q]."""
    a_lam = a1(lam, p)
    v = A
    while True:
        offenders = [mu for mu, c in v.terms.items() if mu != lam and not c.in_qZq()]
        if not offenders:
            return v
        ties = sorted(offenders, key=Multipartition.sort_key, reverse=reverse_ties)
        nu = min(ties, key=lambda mu: a1(mu, p))
        if a1(nu, p) <= a_lam:
            raise InvariantError(f"offending {nu} below {lam} in a1 while reducing")
        if nu not in known:
            if not is_flotw(nu, p):
                raise InvariantError(f"offending {nu} is not FLOTW while reducing {lam}")
            raise InvariantError(f"G({nu}) needed for {lam} has not been computed")
        alpha = bar_symmetric_completion(v[nu])
        v = v - scale(known[nu], alpha)


def compute_basis(
    n: int,
    p: ParamSet,
    scan: str = "increasing",
    reverse_ties: bool = False,
    jobs: int = 1,
) -> CanonicalBasis:
    labels = enumerate_flotw(n, p)
    order = sorted(
        labels,
        key=lambda mp: (-a1(mp, p), mp.sort_key()),
    )
    if reverse_ties:
        order = sorted(
            reversed(labels),
            key=lambda mp: -a1(mp, p),
        )
    if jobs > 1 and len(labels) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            built = list(pool.map(partial(build_A, p=p, scan=scan), order, chunksize=4))
    else:
        built = [build_A(lam, p, scan) for lam in order]

    basis = CanonicalBasis(p, n, order=order)
    for lam, A in zip(order, built):
        G = reduce(A, lam, basis.entries, p, reverse_ties)
        _check_triangular(G, lam, p, "G")
        for mu, c in G.terms.items():
            if mu != lam and not c.in_qZq():
                raise InvariantError(f"G({lam}) has coefficient {c} at {mu} outside qZ[q]")
        basis.entries[lam] = G
        log.debug("G(%s): %d terms", lam, len(G))
    return basis
