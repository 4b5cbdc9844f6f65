"""Partitions, multipartitions, nodes and residues.

A multipartition is a tuple of ``d`` partitions, each a weakly decreasing
tuple of positive ints. Nodes ``(a, b, c)`` are 1-based row ``a`` and column
``b`` in component ``c``. The ambient datum ``{e; v_0, ..., v_{d-1}}`` lives in
:class:`ParamSet`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple

from .errors import DiagramError


@dataclass(frozen=True)
class ParamSet:
    e: int
    v: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "v", tuple(int(x) for x in self.v))
        if self.e < 1:
            raise ValueError(f"e must be >= 1, got {self.e}")
        if not self.v:
            raise ValueError("v must have at least one entry (d >= 1)")
        v = self.v
        if not (0 <= v[0] and all(x <= y for x, y in zip(v, v[1:])) and v[-1] < self.e):
            raise ValueError(
                f"need 0 <= v_0 <= ... <= v_(d-1) < e, got e={self.e}, v={list(v)}"
            )

    @property
    def d(self) -> int:
        return len(self.v)

    def __str__(self) -> str:
        return "{%d; %s}" % (self.e, ",".join(map(str, self.v)))


class Node(NamedTuple):
    a: int
    b: int
    c: int


def validate_partition(parts) -> tuple[int, ...]:
    parts = tuple(int(x) for x in parts)
    if any(x <= 0 for x in parts):
        raise DiagramError(f"partition parts must be positive: {parts}")
    if any(x < y for x, y in zip(parts, parts[1:])):
        raise DiagramError(f"partition parts must be weakly decreasing: {parts}")
    return parts


@dataclass(frozen=True, eq=False)
class Multipartition:
    components: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        comps = tuple(validate_partition(p) for p in self.components)
        object.__setattr__(self, "components", comps)

    @classmethod
    def _trusted(cls, comps: tuple[tuple[int, ...], ...]) -> Multipartition:
        self = object.__new__(cls)
        object.__setattr__(self, "components", comps)
        return self

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multipartition):
            return NotImplemented
        return self is other or self.components == other.components

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash(self.components)

    @classmethod
    def empty(cls, d: int) -> Multipartition:
        return cls(((),) * d)

    @classmethod
    def parse(cls, text: str) -> Multipartition:
        """Read the ``1|3.1|2.1.1`` notation; ``-`` is an empty component."""
        comps = []
        for chunk in text.strip().split("|"):
            chunk = chunk.strip()
            if chunk == "-":
                comps.append(())
                continue
            try:
                comps.append(tuple(int(x) for x in chunk.split(".")))
            except ValueError:
                raise DiagramError(f"malformed multipartition {text!r}") from None
        return cls(tuple(comps))

    def __str__(self) -> str:
        return "|".join(".".join(map(str, p)) if p else "-" for p in self.components)

    def __repr__(self) -> str:
        return f"Multipartition({str(self)!r})"

    @property
    def d(self) -> int:
        return len(self.components)

    @cached_property
    def rank(self) -> int:
        return sum(sum(p) for p in self.components)

    def part(self, c: int, a: int) -> int:
        """Length of row ``a`` (1-based) of component ``c``; 0 past the end."""
        p = self.components[c]
        return p[a - 1] if a <= len(p) else 0

    def nodes(self) -> Iterator[Node]:
        for c, p in enumerate(self.components):
            for a, length in enumerate(p, 1):
                for b in range(1, length + 1):
                    yield Node(a, b, c)

    def contains(self, node: Node) -> bool:
        return 0 <= node.c < self.d and node.a >= 1 and 1 <= node.b <= self.part(node.c, node.a)

    def addable(self) -> Iterator[Node]:
        """All addable nodes, any residue."""
        for c, p in enumerate(self.components):
            for a in range(1, len(p) + 2):
                b = self.part(c, a) + 1
                if a == 1 or self.part(c, a - 1) >= b:
                    yield Node(a, b, c)

    def removable(self) -> Iterator[Node]:
        for c, p in enumerate(self.components):
            for a, length in enumerate(p, 1):
                if a == len(p) or p[a] < length:
                    yield Node(a, length, c)

    def add_node(self, node: Node, check: bool = True) -> Multipartition:
        if check and node not in set(self.addable()):
            raise DiagramError(f"{tuple(node)} is not addable to {self}")
        comps = list(self.components)
        p = list(comps[node.c])
        if node.a > len(p):
            p.append(1)
        else:
            p[node.a - 1] += 1
        comps[node.c] = tuple(p)
        return Multipartition._trusted(tuple(comps))

    def remove_node(self, node: Node, check: bool = True) -> Multipartition:
        if check and node not in set(self.removable()):
            raise DiagramError(f"{tuple(node)} is not removable from {self}")
        comps = list(self.components)
        p = list(comps[node.c])
        p[node.a - 1] -= 1
        if p[node.a - 1] == 0:
            p.pop()
        comps[node.c] = tuple(p)
        return Multipartition._trusted(tuple(comps))

    def sort_key(self):
        """Canonical total order: rank, then components left to right,
        larger partitions (lexicographically) first within a component."""
        return (self.rank, tuple(tuple(-x for x in p) + (0,) for p in self.components))


def rank(mp: Multipartition) -> int:
    return mp.rank


def content(node: Node, p: ParamSet) -> int:
    """Unreduced content b - a + v_c, used for the above/below order."""
    if not 0 <= node.c < p.d:
        raise DiagramError(f"component {node.c} out of range for d={p.d}")
    return node.b - node.a + p.v[node.c]


def residue(node: Node, p: ParamSet) -> int:
    return content(node, p) % p.e


def above_key(node: Node, p: ParamSet) -> tuple[int, int]:
    """Sort key putting nodes higher in the above-order first."""
    return (content(node, p), -node.c)


def is_above(g: Node, g2: Node, p: ParamSet) -> bool:
    return above_key(g, p) < above_key(g2, p)


def addable_nodes(mp: Multipartition, i: int, p: ParamSet) -> list[Node]:
    return sorted(
        (n for n in mp.addable() if residue(n, p) == i), key=lambda n: above_key(n, p)
    )


def removable_nodes(mp: Multipartition, i: int, p: ParamSet) -> list[Node]:
    return sorted(
        (n for n in mp.removable() if residue(n, p) == i), key=lambda n: above_key(n, p)
    )


def added_node(lam: Multipartition, mu: Multipartition) -> Node:
    """The node gamma with [mu] = [lam] + {gamma}."""
    if lam.d != mu.d or mu.rank != lam.rank + 1:
        raise DiagramError(f"{mu} is not {lam} plus one node")
    for node in lam.addable():
        if lam.add_node(node) == mu:
            return node
    raise DiagramError(f"{mu} is not {lam} plus one node")


def _count_split(lam: Multipartition, mu: Multipartition, i: int, p: ParamSet):
    gamma = added_node(lam, mu)
    if residue(gamma, p) != i:
        raise DiagramError(f"{mu} is not {lam} plus an {i}-node")
    g = above_key(gamma, p)
    add = [above_key(n, p) for n in addable_nodes(lam, i, p) if n != gamma]
    rem = [above_key(n, p) for n in removable_nodes(mu, i, p) if n != gamma]
    above = sum(k < g for k in add) - sum(k < g for k in rem)
    below = sum(k > g for k in add) - sum(k > g for k in rem)
    return above, below


def n_stat_above(lam: Multipartition, mu: Multipartition, i: int, p: ParamSet) -> int:
    """Addable i-nodes of lam above gamma minus removable i-nodes of mu above gamma."""
    return _count_split(lam, mu, i, p)[0]


def n_stat_below(lam: Multipartition, mu: Multipartition, i: int, p: ParamSet) -> int:
    return _count_split(lam, mu, i, p)[1]


def n_stat_total(mp: Multipartition, i: int, p: ParamSet) -> int:
    return len(addable_nodes(mp, i, p)) - len(removable_nodes(mp, i, p))


def n_stat_zero_nodes(mp: Multipartition, p: ParamSet) -> int:
    return sum(1 for n in mp.nodes() if residue(n, p) == 0)


def residue_diagram(mp: Multipartition, p: ParamSet) -> list[list[list[int]]]:
    """Residues of every node, as component -> row -> column."""
    return [
        [[(b - a + p.v[c]) % p.e for b in range(1, length + 1)] for a, length in enumerate(part, 1)]
        for c, part in enumerate(mp.components)
    ]


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def _compositions(n: int, d: int) -> Iterator[tuple[int, ...]]:
    if d == 1:
        yield (n,)
        return
    for k in range(n, -1, -1):
        for rest in _compositions(n - k, d - 1):
            yield (k,) + rest


def enumerate_dpartitions(n: int, d: int) -> list[Multipartition]:
    out = []
    for sizes in _compositions(n, d):
        stack: list[tuple[tuple[int, ...], ...]] = [()]
        for size in sizes:
            stack = [prefix + (part,) for prefix in stack for part in partitions(size)]
        out.extend(Multipartition(comps) for comps in stack)
    out.sort(key=Multipartition.sort_key)
    return out
