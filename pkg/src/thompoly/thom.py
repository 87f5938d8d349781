"""Concrete Thom polynomials: binomial determinants, the corank locus of
quadratic forms, and nonnegativity reports for Schur expansions."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .chern import BundleRing, ProductSchurExpansion
from .errors import CorankExceedsRank, LengthOverflow, NonIntegralResult
from .partitions import Partition, partitions_contained_in, staircase
from .polynomial import det

__all__ = [
    "binomial_det",
    "CorankFormulaResult",
    "corank_thom",
    "PositivityReport",
    "check_positivity",
    "d_positivity_table",
    "nonpositive_entries",
]


def _binom(x: int, y: int) -> int:
    if y < 0 or x < 0 or y > x:
        return 0
    return comb(x, y)


def binomial_det(I, J, m: int) -> int:
    """``det( C(i_a + m - a, j_b + m - b) )`` for ``1 <= a, b <= m``."""
    I, J = Partition(I), Partition(J)
    if len(I) > m or len(J) > m:
        raise LengthOverflow(f"{I} or {J} has more than {m} parts")
    ip, jp = I.padded(m), J.padded(m)
    matrix = [[_binom(ip[a] + m - 1 - a, jp[b] + m - 1 - b) for b in range(m)] for a in range(m)]
    return det(matrix, 0, 1)


@dataclass
class CorankFormulaResult:
    q: int
    m: int
    expansion: ProductSchurExpansion
    scale: Fraction
    integral: bool

    @property
    def degree(self) -> int:
        return self.q * (self.q + 1) // 2


def corank_thom(q: int, m: int) -> CorankFormulaResult:
    """Class of the locus where a quadratic form on a rank-``m`` bundle ``E``
    with values in a line bundle ``L`` has corank at least ``q``, expanded in
    ``S_J(E) S_k(L)``.
    """
    if q < 1:
        raise ValueError("corank must be positive")
    if q > m:
        raise CorankExceedsRank(f"corank {q} exceeds rank {m}")
    ring = BundleRing([("E", m), ("L", 1)])
    rho = staircase(q)
    top = q * (q + 1) // 2
    scale = Fraction(1, 2 ** comb(q, 2))
    raw = {}
    for J in partitions_contained_in(rho):
        d = binomial_det(rho, J, m)
        raw[(J, Partition((top - J.weight,)))] = scale * 2 ** J.weight * d
    integral = all(c.denominator == 1 for c in raw.values())
    if not integral:
        bad = {k: c for k, c in raw.items() if c.denominator != 1}
        raise NonIntegralResult(f"non-integral coefficients for q={q}, m={m}: {bad}")
    terms = {k: int(c) for k, c in raw.items()}
    return CorankFormulaResult(q, m, ProductSchurExpansion(ring, (False, False), terms), scale, integral)


@dataclass
class PositivityReport:
    total_terms: int
    negative_terms: dict = field(default_factory=dict)
    coefficient_sum: object = 0

    @property
    def nonnegative(self) -> bool:
        return not self.negative_terms

    @property
    def sum_positive(self) -> bool:
        return self.coefficient_sum > 0

    def __str__(self):
        verdict = "all coefficients nonnegative" if self.nonnegative else f"{len(self.negative_terms)} negative coefficient(s)"
        return f"{verdict}; {self.total_terms} term(s); coefficient sum {self.coefficient_sum}"


def check_positivity(expansion: ProductSchurExpansion) -> PositivityReport:
    negative = {k: c for k, c in expansion.sorted_terms() if c < 0}
    return PositivityReport(
        total_terms=len(expansion.terms),
        negative_terms=negative,
        coefficient_sum=sum(expansion.terms.values()),
    )


def d_positivity_table(q_max: int, extra_rank: int = 0) -> list[tuple[int, int, Partition, int]]:
    """Rows ``(q, m, J, d_{rho_q, J})`` for ``J`` inside the staircase, at size
    ``m = q + extra_rank``. Nonpositive entries are kept, not hidden; see
    :func:`nonpositive_entries`.
    """
    if q_max < 1:
        raise ValueError("q_max must be at least 1")
    rows = []
    for q in range(1, q_max + 1):
        m = q + extra_rank
        rho = staircase(q)
        for J in partitions_contained_in(rho):
            rows.append((q, m, J, binomial_det(rho, J, m)))
    return rows


def nonpositive_entries(table):
    return [row for row in table if row[3] <= 0]
