"""FLOTW multipartitions and their a-sequences of residues."""

from __future__ import annotations

from typing import NamedTuple

from .errors import InvariantError
from .mpart import Multipartition, ParamSet, enumerate_dpartitions, residue


def is_flotw(mp: Multipartition, p: ParamSet) -> bool:
    if mp.d != p.d:
        return False
    d, v = p.d, p.v
    # cyclic dominance between neighbouring components
    for j in range(d):
        if j < d - 1:
            nxt, shift = j + 1, v[j + 1] - v[j]
        else:
            nxt, shift = 0, p.e + v[0] - v[d - 1]
        for i in range(1, len(mp.components[nxt]) - shift + 1):
            if mp.part(j, i) < mp.part(nxt, i + shift):
                return False
    # for each row length, some residue is missing at the right ends
    ends: dict[int, set[int]] = {}
    for c, part in enumerate(mp.components):
        for a, length in enumerate(part, 1):
            ends.setdefault(length, set()).add((length - a + v[c]) % p.e)
    return all(len(res) < p.e for res in ends.values())


def enumerate_flotw(n: int, p: ParamSet) -> list[Multipartition]:
    return [mp for mp in enumerate_dpartitions(n, p.d) if is_flotw(mp, p)]


class PeelStep(NamedTuple):
    k: int
    s: int
    rest: Multipartition


def _right_ends(mp: Multipartition, p: ParamSet):
    """(length, residue) of the right-end node of every nonempty row."""
    for c, part in enumerate(mp.components):
        for a, length in enumerate(part, 1):
            yield length, (length - a + p.v[c]) % p.e


def peel_step(mp: Multipartition, p: ParamSet, scan: str = "increasing") -> PeelStep:
    """Strip the last block k,...,k off the a-sequence of a FLOTW multipartition.

    ``scan`` picks among several admissible residues k: the smallest
    ("increasing") or largest ("decreasing").
    """
    if mp.rank == 0:
        raise ValueError("cannot peel the empty multipartition")
    if not is_flotw(mp, p):
        raise ValueError(f"{mp} is not FLOTW for {p}")
    ends = list(_right_ends(mp, p))
    lmax = max(length for length, _ in ends)
    top_residues = {r for length, r in ends if length == lmax}
    removable = list(mp.removable())

    candidates = sorted(
        {residue(n, p) for n in removable if n.b == lmax},
        reverse=(scan == "decreasing"),
    )
    k = next((r for r in candidates if (r - 1) % p.e not in top_residues), None)
    if k is None:
        raise InvariantError(f"no admissible residue to peel from {mp} for {p}")

    threshold = max((length for length, r in ends if r == (k - 1) % p.e), default=0)
    xi = [n for n in removable if n.b > threshold and residue(n, p) == k]
    rest = mp
    # remove bottom rows first so earlier indices stay valid
    for n in sorted(xi, key=lambda n: (n.c, -n.a)):
        rest = rest.remove_node(n)
    return PeelStep(k, len(xi), rest)


def a_sequence(mp: Multipartition, p: ParamSet, scan: str = "increasing") -> list[int]:
    """Residues in application order: the first entry is applied first to the empty vector."""
    blocks = []
    while mp.rank:
        step = peel_step(mp, p, scan)
        blocks.append([step.k] * step.s)
        mp = step.rest
    return [k for block in reversed(blocks) for k in block]


def runs(seq: list[int]) -> list[tuple[int, int]]:
    """Group a residue sequence into maximal (residue, multiplicity) runs."""
    out: list[tuple[int, int]] = []
    for k in seq:
        if out and out[-1][0] == k:
            out[-1] = (k, out[-1][1] + 1)
        else:
            out.append((k, 1))
    return out


def format_sequence(seq: list[int]) -> str:
    return ",".join(map(str, seq))
