"""Schur-basis arithmetic: Littlewood-Richardson products, Jacobi-Trudi
determinants, and a brute-force tableau oracle used by the tests."""

from __future__ import annotations

from functools import lru_cache
from typing import Mapping, Sequence

from .errors import InsufficientDegrees, RankMismatch
from .partitions import Partition
from .polynomial import Poly, PolyRing, det

__all__ = [
    "lr_coefficients",
    "SchurVector",
    "schur_multiply",
    "PowerSeriesSlice",
    "jacobi_trudi",
    "monomial_oracle",
    "root_ring",
]


# -- Littlewood-Richardson rule ----------------------------------------------

def _horizontal_strips(shape: tuple[int, ...], size: int, max_rows, max_cols):
    """Yield ``(new_shape, added)`` for every horizontal strip of ``size`` boxes
    added to ``shape``; ``added[r]`` lists the new column indices in row r."""
    rows = len(shape) + 1
    if max_rows is not None:
        rows = min(rows, max_rows)
    padded = list(shape) + [0] * (rows - len(shape))

    def rec(r, left):
        if r == rows:
            if left == 0:
                yield ()
            return
        cap = left
        if r > 0:
            cap = min(cap, padded[r - 1] - padded[r])
        if max_cols is not None:
            cap = min(cap, max_cols - padded[r])
        for k in range(cap, -1, -1):
            for rest in rec(r + 1, left - k):
                yield (k,) + rest

    for extra in rec(0, size):
        new = [p + e for p, e in zip(padded, extra)]
        while new and new[-1] == 0:
            new.pop()
        yield tuple(new), extra


def _lattice_ok(filling: Sequence[Sequence[int]], letter: int) -> bool:
    """Reverse reading word keeps #(letter-1) >= #letter in every prefix."""
    prev = cur = 0
    for row in filling:
        for x in reversed(row):
            if x == letter - 1:
                prev += 1
            elif x == letter:
                cur += 1
                if cur > prev:
                    return False
    return True


@lru_cache(maxsize=65536)
def _lr_cached(I: Partition, J: Partition, max_rows, max_cols) -> tuple:
    counts: dict[tuple[int, ...], int] = {}
    if max_rows is not None and (len(I) > max_rows or len(J) > max_rows):
        return ()
    if max_cols is not None and (I.part(0) > max_cols or J.part(0) > max_cols):
        return ()

    def rec(letter, shape, filling):
        if letter > len(J):
            key = tuple(p for p in shape if p)
            counts[key] = counts.get(key, 0) + 1
            return
        for new_shape, extra in _horizontal_strips(shape, J[letter - 1], max_rows, max_cols):
            rows = [list(r) for r in filling] + [[] for _ in range(len(new_shape) - len(filling))]
            del rows[len(new_shape):]
            for r, k in enumerate(extra):
                if not k:
                    continue
                rows[r].extend([letter] * k)
            if letter > 1 and not _lattice_ok(rows, letter):
                continue
            rec(letter + 1, new_shape, rows)

    rec(1, tuple(I), [[] for _ in I])
    return tuple(sorted((Partition(k), v) for k, v in counts.items()))


def lr_coefficients(I, J, max_rows: int | None = None, max_cols: int | None = None) -> dict[Partition, int]:
    """Map ``K -> c^K_{IJ}`` over all ``K`` with a nonzero coefficient.

    Enumerates LR skew tableaux of shape ``K/I`` and content ``J``. Optional
    bounds discard any ``K`` with more than ``max_rows`` rows or more than
    ``max_cols`` columns while enumerating (never changes surviving values).
    """
    I, J = Partition(I), Partition(J)
    # c^K_{IJ} = c^K_{JI}; fewer content letters means a shallower search.
    if (len(J), J.weight) > (len(I), I.weight):
        I, J = J, I
    return dict(_lr_cached(I, J, max_rows, max_cols))


# -- Schur vectors ------------------------------------------------------------

class SchurVector:
    """Integer combination of Schur functions in ``nvars`` variables.

    ``nvars=None`` is the free ring of symmetric functions; otherwise every
    ``S_I`` with more than ``nvars`` parts is identically zero and dropped.
    """

    __slots__ = ("terms", "nvars")

    def __init__(self, terms: Mapping | None = None, nvars: int | None = None):
        self.nvars = nvars
        out: dict[Partition, int] = {}
        for key, c in (terms or {}).items():
            key = Partition(key)
            if nvars is not None and len(key) > nvars:
                continue
            out[key] = out.get(key, 0) + c
        self.terms = {k: c for k, c in out.items() if c != 0}

    @classmethod
    def basis(cls, I, nvars=None) -> "SchurVector":
        return cls({Partition(I): 1}, nvars)

    @classmethod
    def unit(cls, nvars=None) -> "SchurVector":
        return cls({Partition(): 1}, nvars)

    def _check(self, other: "SchurVector"):
        if self.nvars != other.nvars:
            raise RankMismatch(f"truncation ranks differ: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return SchurVector(out, self.nvars)

    def __neg__(self):
        return SchurVector({k: -c for k, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SchurVector({k: c * other for k, c in self.terms.items()}, self.nvars)
        return schur_multiply(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, SchurVector) and self.nvars == other.nvars and self.terms == other.terms

    def __repr__(self):
        body = ", ".join(f"{k}: {c}" for k, c in sorted(self.terms.items(), key=lambda kc: kc[0].sort_key()))
        return f"SchurVector({{{body}}}, nvars={self.nvars})"


def schur_multiply(a: SchurVector, b: SchurVector) -> SchurVector:
    a._check(b)
    out: dict[Partition, int] = {}
    for I, x in a.terms.items():
        for J, y in b.terms.items():
            for K, c in lr_coefficients(I, J, max_rows=a.nvars).items():
                out[K] = out.get(K, 0) + x * y * c
    return SchurVector(out, a.nvars)


# -- Jacobi-Trudi ---------------------------------------------------------------

class PowerSeriesSlice:
    """Coefficients ``s_0, s_1, ..., s_N`` of a series truncated at degree N.

    Entries are exact ring elements (ints, :class:`Poly`, ...). Reading a
    negative index gives zero; reading past N raises
    :class:`InsufficientDegrees`.
    """

    def __init__(self, coefficients: Sequence):
        if not coefficients:
            raise ValueError("a series slice needs at least its constant term")
        self.coefficients = tuple(coefficients)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def zero(self):
        return self.coefficients[0] * 0

    def one(self):
        return self.coefficients[0] * 0 + 1

    def __getitem__(self, k: int):
        if k < 0:
            return self.zero()
        if k > self.degree:
            raise InsufficientDegrees(f"series known up to degree {self.degree}, need {k}")
        return self.coefficients[k]

    def __len__(self):
        return len(self.coefficients)

    def __repr__(self):
        return f"PowerSeriesSlice({list(self.coefficients)!r})"


def jacobi_trudi(I, s: PowerSeriesSlice):
    """``det(s_{i_p - p + q})`` over the rows of ``I``."""
    I = Partition(I)
    n = len(I)
    need = I.part(0) + n - 1 if n else 0
    if need > s.degree:
        raise InsufficientDegrees(f"{I} needs series terms up to degree {need}, have {s.degree}")
    matrix = [[s[I[p] - p + q] for q in range(n)] for p in range(n)]
    return det(matrix, s.zero(), s.one())


# -- tableau oracle ---------------------------------------------------------------

def root_ring(d: int, prefix: str = "x") -> PolyRing:
    return PolyRing([f"{prefix}{k + 1}" for k in range(d)])


def monomial_oracle(I, d: int, ring: PolyRing | None = None) -> Poly:
    """Schur polynomial ``s_I(x_1..x_d)`` as a sum over semistandard tableaux.

    Brute force on purpose: fills cells in row-major order, checking weak
    increase along rows and strict increase down columns.
    """
    I = Partition(I)
    ring = ring or root_ring(d)
    if d < 1:
        raise ValueError("need at least one variable")
    if len(I) > d:
        return ring.zero()
    cells = [(r, c) for r, length in enumerate(I) for c in range(length)]
    grid: dict[tuple[int, int], int] = {}
    terms: dict[tuple, int] = {}
    expo = [0] * ring.nvars

    def fill(k):
        if k == len(cells):
            key = tuple(expo)
            terms[key] = terms.get(key, 0) + 1
            return
        r, c = cells[k]
        lo = 1
        if c > 0:
            lo = max(lo, grid[(r, c - 1)])
        if r > 0:
            lo = max(lo, grid[(r - 1, c)] + 1)
        for v in range(lo, d + 1):
            grid[(r, c)] = v
            expo[v - 1] += 1
            fill(k + 1)
            expo[v - 1] -= 1
        grid.pop((r, c), None)

    fill(0)
    return Poly(ring, terms)
