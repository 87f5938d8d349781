"""Sparse multivariate polynomials with exact coefficients.

Monomials are exponent tuples aligned with the ring's variable list; each
variable carries a grading weight (Chern class ``c_i`` has weight ``i``).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence


class PolyRing:
    def __init__(self, names: Sequence[str], weights: Sequence[int] | None = None):
        self.names = tuple(names)
        self.weights = tuple(weights) if weights is not None else (1,) * len(self.names)
        if len(self.weights) != len(self.names):
            raise ValueError("one weight per variable")
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.index = {name: k for k, name in enumerate(self.names)}
        self.nvars = len(self.names)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.names == other.names and self.weights == other.weights

    def __hash__(self):
        return hash((self.names, self.weights))

    def __repr__(self):
        return f"PolyRing({list(self.names)})"

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.const(1)

    def const(self, c) -> "Poly":
        return Poly(self, {(0,) * self.nvars: c} if c else {})

    def var(self, name: str | int) -> "Poly":
        k = self.index[name] if isinstance(name, str) else name
        expo = [0] * self.nvars
        expo[k] = 1
        return Poly(self, {tuple(expo): 1})

    def gens(self) -> list["Poly"]:
        return [self.var(k) for k in range(self.nvars)]

    def degree_of(self, expo: Sequence[int]) -> int:
        return sum(e * w for e, w in zip(expo, self.weights))


class Poly:
    """Immutable once built; arithmetic returns new objects."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: Mapping[tuple, object]):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if c != 0}

    # -- construction helpers -------------------------------------------------
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    # -- arithmetic -------------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(self.ring, {m: c * other for m, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple, object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result, base = self.ring.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- inspection -------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {self.ring.degree_of(m) for m in self.terms}

    def degree(self) -> int:
        """Top weighted degree; -1 for the zero polynomial."""
        return max(self.degrees(), default=-1)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_part(self, d: int) -> "Poly":
        return Poly(self.ring, {m: c for m, c in self.terms.items() if self.ring.degree_of(m) == d})

    def truncate(self, d: int) -> "Poly":
        """Drop every monomial of weighted degree above ``d``."""
        return Poly(self.ring, {m: c for m, c in self.terms.items() if self.ring.degree_of(m) <= d})

    def substitute(self, images: Sequence, one) -> object:
        """Evaluate with variable ``k`` sent to ``images[k]`` in any commutative ring.

        ``one`` is the unit of the target ring; integer coefficients scale it.
        """
        total = None
        powers: dict[tuple[int, int], object] = {}

        def power(k, e):
            key = (k, e)
            if key not in powers:
                powers[key] = one if e == 0 else power(k, e - 1) * images[k]
            return powers[key]

        for m, c in self.terms.items():
            term = one * c
            for k, e in enumerate(m):
                if e:
                    term = term * power(k, e)
            total = term if total is None else total + term
        return one * 0 if total is None else total

    def sorted_terms(self):
        """Terms ordered by degree, then by exponent vector."""
        return sorted(self.terms.items(), key=lambda mc: (self.ring.degree_of(mc[0]), mc[0]))

    def __repr__(self):
        return format_poly(self)


def format_poly(p: Poly, names: Sequence[str] | None = None) -> str:
    names = names or p.ring.names
    if not p.terms:
        return "0"
    pieces = []
    for m, c in p.sorted_terms():
        factors = []
        for k, e in enumerate(m):
            if e == 1:
                factors.append(names[k])
            elif e > 1:
                factors.append(f"{names[k]}^{e}")
        mag = abs(c)
        body = "*".join(factors)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        pieces.append(("-" if c < 0 else "+", text))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, text in pieces[1:]:
        out += f" {sign} {text}"
    return out


def elementary(polys: Sequence, k: int, one):
    """k-th elementary symmetric function of ``polys`` (ring elements)."""
    if k == 0:
        return one
    if k > len(polys):
        return one * 0
    # Coefficient extraction from prod(1 + t*x) avoids enumerating all k-subsets.
    e = [one] + [one * 0] * k
    for x in polys:
        for j in range(k, 0, -1):
            e[j] = e[j] + e[j - 1] * x
    return e[k]


def det(matrix: Sequence[Sequence], zero, one):
    """Determinant over a commutative ring by Laplace expansion along rows.

    Minors are memoized by the set of remaining columns, so the cost is
    ``O(2^n * n)`` ring operations. ``zero``/``one`` fix the result type for
    the empty matrix and for structurally zero entries.
    """
    n = len(matrix)
    if n == 0:
        return one
    memo: dict[tuple[int, ...], object] = {}

    def minor(row: int, cols: tuple[int, ...]):
        if row == n:
            return one
        if cols in memo:
            return memo[cols]
        total = zero
        for pos, col in enumerate(cols):
            entry = matrix[row][col]
            if _is_zero(entry):
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1:])
            if _is_zero(sub):
                continue
            term = entry * sub
            total = total - term if pos % 2 else total + term
        memo[cols] = total
        return total

    return minor(0, tuple(range(n)))


def _is_zero(x) -> bool:
    if isinstance(x, (int, Fraction)):
        return x == 0
    is_zero = getattr(x, "is_zero", None)
    return is_zero() if callable(is_zero) else not x
