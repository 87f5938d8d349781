"""Cohomology of products of Grassmannians in the Schubert basis.

Factor ``k`` is the Grassmannian of ``m_k``-planes in ``C^(m_k + n_k)``; its
Schubert classes are indexed by partitions in the ``m_k x n_k`` box, and the
tautological quotient bundle ``Q_k`` has rank ``n_k`` with
``c_i(Q_k) = sigma_(i)``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .chern import BundleRing
from .errors import BoxOverflow, BoxTooSmall, RingMismatch
from .partitions import Partition, box_complement, conjugate, fits_box
from .polynomial import Poly, det
from .symmetric import lr_coefficients

__all__ = [
    "GrassmannRing",
    "GrassmannClass",
    "schubert_multiply",
    "integrate",
    "giambelli",
    "quotient_chern_class",
    "chern_polynomial_class",
    "extract_coefficient",
    "extract_all",
]


class GrassmannRing:
    def __init__(self, factors: Iterable[tuple[int, int]]):
        self.factors = tuple((int(m), int(n)) for m, n in factors)
        if not self.factors:
            raise ValueError("need at least one Grassmannian factor")
        for m, n in self.factors:
            if m < 0 or n < 0:
                raise ValueError(f"invalid box {m}x{n}")

    def __eq__(self, other):
        return isinstance(other, GrassmannRing) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        return "GrassmannRing(" + ";".join(f"({m},{n})" for m, n in self.factors) + ")"

    @property
    def dimension(self) -> int:
        return sum(m * n for m, n in self.factors)

    def top_key(self) -> tuple[Partition, ...]:
        return tuple(Partition((n,) * m) if n else Partition() for m, n in self.factors)

    def schubert(self, *partitions) -> "GrassmannClass":
        """``sigma_{I_1} x ... x sigma_{I_p}``; omitted trailing factors get the unit."""
        key = [Partition(p) for p in partitions]
        key += [Partition()] * (len(self.factors) - len(key))
        if len(key) != len(self.factors):
            raise RingMismatch(f"{len(key)} partitions for {len(self.factors)} factors")
        for I, (m, n) in zip(key, self.factors):
            if not fits_box(I, m, n):
                raise BoxOverflow(f"{I} does not fit the {m}x{n} box")
        return GrassmannClass(self, {tuple(key): 1})

    def unit(self) -> "GrassmannClass":
        return self.schubert()

    def zero(self) -> "GrassmannClass":
        return GrassmannClass(self, {})


class GrassmannClass:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: GrassmannRing, terms: Mapping):
        self.ring = ring
        out = {}
        for key, c in terms.items():
            key = tuple(Partition(k) for k in key)
            if all(fits_box(I, m, n) for I, (m, n) in zip(key, ring.factors)):
                out[key] = out.get(key, 0) + c
        self.terms = {k: c for k, c in out.items() if c}

    def _check(self, other):
        if not isinstance(other, GrassmannClass) or other.ring != self.ring:
            raise RingMismatch("classes live in different rings")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.unit() * other
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return GrassmannClass(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GrassmannClass(self.ring, {k: c * other for k, c in self.terms.items()})
        return schubert_multiply(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, GrassmannClass) and self.ring == other.ring and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, *partitions) -> int:
        key = tuple(Partition(p) for p in partitions)
        return self.terms.get(key, 0)

    def sorted_terms(self):
        return sorted(
            self.terms.items(),
            key=lambda kc: (sum(I.weight for I in kc[0]), tuple(I.sort_key() for I in kc[0])),
        )

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for key, c in self.sorted_terms():
            name = " x ".join(f"s{I}" for I in key)
            parts.append(f"{c}*{name}")
        return " + ".join(parts)


def schubert_multiply(a: GrassmannClass, b: GrassmannClass) -> GrassmannClass:
    a._check(b)
    out: dict[tuple, int] = {}
    for k1, c1 in a.terms.items():
        for k2, c2 in b.terms.items():
            partial = {(): c1 * c2}
            for I, J, (m, n) in zip(k1, k2, a.ring.factors):
                lr = lr_coefficients(I, J, max_rows=m, max_cols=n)
                partial = {key + (K,): c * v for key, c in partial.items() for K, v in lr.items()}
                if not partial:
                    break
            for key, c in partial.items():
                out[key] = out.get(key, 0) + c
    return GrassmannClass(a.ring, out)


def integrate(a: GrassmannClass) -> int:
    """Degree map: the coefficient of the point class."""
    return a.terms.get(a.ring.top_key(), 0)


def quotient_chern_class(ring: GrassmannRing, factor: int, i: int) -> GrassmannClass:
    """``c_i(Q)`` of the given factor, i.e. ``sigma_(i)``; zero above the rank."""
    m, n = ring.factors[factor]
    if i < 0 or i > n or (i > 0 and m == 0):
        return ring.zero()
    key = [Partition()] * len(ring.factors)
    key[factor] = Partition((i,))
    return GrassmannClass(ring, {tuple(key): 1})


def giambelli(I, ring: GrassmannRing, factor: int = 0) -> GrassmannClass:
    """Evaluate ``det(c_{i_p - p + q}(Q))_{1 <= p, q <= m}`` inside the ring."""
    I = Partition(I)
    m, n = ring.factors[factor]
    if not fits_box(I, m, n):
        raise BoxOverflow(f"{I} does not fit the {m}x{n} box")
    rows = I.padded(m)
    matrix = [[quotient_chern_class(ring, factor, rows[p] - p + q) for q in range(m)] for p in range(m)]
    return det(matrix, ring.zero(), ring.unit())


@lru_cache(maxsize=1024)
def chern_polynomial_class(T: Poly, ring: GrassmannRing) -> GrassmannClass:
    """Substitute ``c_i(E_k) -> c_i(Q_k)`` into a Chern polynomial."""
    bring = T.ring
    if not isinstance(bring, BundleRing):
        raise TypeError("expected a polynomial over a BundleRing")
    if len(bring.slots) != len(ring.factors):
        raise RingMismatch(f"{len(bring.slots)} slots vs {len(ring.factors)} Grassmannian factors")
    images = []
    for name in bring.names:
        i = int(name[1:name.index("(")])
        slot = name[name.index("(") + 1:-1]
        images.append(quotient_chern_class(ring, bring.slot_names.index(slot), i))
    return T.substitute(images, ring.unit())


def _ring_for(T: Poly, heights: Sequence[int] | int | None) -> GrassmannRing:
    bring = T.ring
    degree = max(T.degree(), 0)
    if heights is None:
        heights = [degree] * len(bring.slots)
    elif isinstance(heights, int):
        heights = [heights] * len(bring.slots)
    if len(heights) != len(bring.slots):
        raise RingMismatch("one box height per slot")
    for (name, _), h in zip(bring.slots, heights):
        if h < degree:
            raise BoxTooSmall(f"box height {h} for slot {name} is below the degree {degree}")
    return GrassmannRing((h, rank) for h, (_, rank) in zip(heights, bring.slots))


def extract_coefficient(T: Poly, partitions: Sequence, heights: Sequence[int] | int | None = None) -> int:
    """Coefficient of ``prod_k S_{I_k}(E_k)`` in ``T``, computed geometrically.

    Slot ``E_k`` becomes the quotient bundle on a Grassmannian with box
    ``heights[k] x rank(E_k)``; the coefficient is the degree of ``T`` times
    the class complementary to ``sigma`` of the conjugate of ``I_k``.
    Heights default to the degree of ``T`` and may not be smaller.
    """
    ring = _ring_for(T, heights)
    key = tuple(Partition(I) for I in partitions)
    if len(key) != len(ring.factors):
        raise RingMismatch(f"{len(key)} partitions for {len(ring.factors)} slots")
    cls = chern_polynomial_class(T, ring)
    return _pair(cls, key)


def _pair(cls: GrassmannClass, key) -> int:
    ring = cls.ring
    complements = []
    for I, (m, n) in zip(key, ring.factors):
        sigma = conjugate(I)
        if not fits_box(sigma, m, n):
            raise BoxOverflow(f"S{I} does not fit the {m}x{n} box")
        complements.append(box_complement(sigma, m, n))
    return integrate(cls * ring.schubert(*complements))


def extract_all(T: Poly, heights: Sequence[int] | int | None = None) -> dict[tuple, int]:
    """Every nonzero geometric coefficient of ``T`` of matching degree."""
    from itertools import product
    from .partitions import partitions_of

    ring = _ring_for(T, heights)
    cls = chern_polynomial_class(T, ring)
    out = {}
    for d in sorted(T.degrees()):
        for split in _compositions(d, len(ring.factors)):
            choices = [
                [I for I in partitions_of(w) if fits_box(conjugate(I), m, n)]
                for w, (m, n) in zip(split, ring.factors)
            ]
            for key in product(*choices):
                v = _pair(cls, key)
                if v:
                    out[key] = v
    return out


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest
