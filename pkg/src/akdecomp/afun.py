"""The statistic a_1 on multipartitions, computed in exact rationals.

Only a_1 is implemented: the full a-value differs from it by a constant
depending on the rank and parameters, so comparisons within one rank agree.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .mpart import Multipartition, ParamSet


def m_value(i: int, p: ParamSet) -> Fraction:
    if not 0 <= i < p.d:
        raise ValueError(f"component {i} out of range for d={p.d}")
    return p.v[i] - Fraction(i * p.e, p.d) + p.e


def shifted_betas(mp: Multipartition, i: int, p: ParamSet) -> list[Fraction]:
    """B'_p = lambda_p - p + n + m^(i) for p = 1..n, n the rank of mp."""
    n = mp.rank
    m = m_value(i, p)
    return [mp.part(i, k) - k + n + m for k in range(1, n + 1)]


def _capped_sum_scaled(top: int, m_scaled: int, d: int) -> int:
    """d * sum_{k=1}^{top} min(k, m) where m = m_scaled / d."""
    if top <= 0:
        return 0
    # k <= floor(m) contributes k itself, the rest contribute m
    below = min(top, max(m_scaled // d, 0))
    return d * below * (below + 1) // 2 + (top - below) * m_scaled


@lru_cache(maxsize=None)
def a1(mp: Multipartition, p: ParamSet) -> Fraction:
    # everything is carried multiplied by d, where it is an integer
    d, n = p.d, mp.rank
    ms = [d * p.v[i] - i * p.e + d * p.e for i in range(d)]
    betas = [[d * (mp.part(i, k) - k + n) + ms[i] for k in range(1, n + 1)] for i in range(d)]
    pair_sum = 0
    for i in range(d):
        bi = betas[i]
        # strictly decreasing: bi[y] is the smaller of every pair (x, y) with x < y
        pair_sum += sum(y * b for y, b in enumerate(bi))
        for j in range(i + 1, d):
            for a in bi:
                for b in betas[j]:
                    pair_sum += a if a < b else b
    capped = sum(_capped_sum_scaled(a // d, m, d) for bi in betas for a in bi for m in ms)
    return Fraction(pair_sum - capped, d)


def a_compare(x: Multipartition, y: Multipartition, p: ParamSet) -> int:
    """-1, 0 or 1 as a_1(x) is less than, equal to, or greater than a_1(y)."""
    if x.rank != y.rank:
        raise ValueError(f"cannot compare a-values across ranks {x.rank} and {y.rank}")
    ax, ay = a1(x, p), a1(y, p)
    return (ax > ay) - (ax < ay)


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
