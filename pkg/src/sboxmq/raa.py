"""System statistics and the two resistance-against-algebraic-attacks criteria.

Both criteria are reported in log2 space only: the chain system evaluated
with n = 8 reaches 2^22241, far beyond any float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .mqgen import MqSystem


@dataclass(frozen=True)
class SystemStats:
    """r equations, t distinct monomials, n dependent variables, and the
    per-equation monomial-count extrema."""

    r: int
    t: int
    n: int
    min_terms: int
    max_terms: int


def stats(mq: MqSystem, n: int) -> SystemStats:
    """Count equations and distinct monomials; n is caller-supplied (the
    number of dependent variables is a modelling choice, never inferred)."""
    if len(mq) == 0:
        raise ValueError("empty system has no statistics")
    if n < 1:
        raise ValueError("n must be at least 1")
    counts = mq.term_counts()
    return SystemStats(r=len(mq), t=len(mq.monomial_union()), n=n,
                       min_terms=min(counts), max_terms=max(counts))


def gamma(s: SystemStats) -> float:
    """log2 of ((t-r)/n) ** ceil((t-r)/n); requires t > r."""
    if s.t <= s.r:
        raise ValueError("criterion undefined for t <= r")
    base = Fraction(s.t - s.r, s.n)
    return math.ceil(base) * math.log2(base)


def gamma_cp(s: SystemStats) -> float:
    """log2 of (t/n) ** ceil(t/r)."""
    if s.r < 1 or s.t < 1:
        raise ValueError("need r >= 1 and t >= 1")
    return math.ceil(Fraction(s.t, s.r)) * math.log2(Fraction(s.t, s.n))


def rank_gf2(mq: MqSystem) -> int:
    """Rank of the equations-by-monomials GF(2) matrix, by elimination."""
    columns = {m: i for i, m in enumerate(sorted(mq.monomial_union()))}
    pivots: dict = {}  # lowest set bit -> reduced row owning that pivot
    rank = 0
    for e in mq.equations:
        row = 0
        for m in e.masks:
            row |= 1 << columns[m]
        while row:
            low = row & -row
            other = pivots.get(low)
            if other is None:
                pivots[low] = row
                rank += 1
                break
            row ^= other
    return rank
