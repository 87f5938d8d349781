"""Formal vector bundles, Chern and Segre classes, and Schur-basis expansions.

Everything is formal: a primitive bundle of rank ``n`` is a block of ``n``
Chern roots, and derived bundles (duals, sums, symmetric powers, jets, ...)
are lists of integer linear forms in those roots. Symmetric expressions in
the roots are rewritten in the primitive Chern classes ``c_i(B)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Mapping, Sequence

from .errors import DegreeOverflow, DomainError, NotSupersymmetric, RankOrder, UnknownBundle
from .partitions import Partition, conjugate, partitions_of
from .polynomial import Poly, PolyRing, det, elementary
from .symmetric import PowerSeriesSlice, jacobi_trudi, lr_coefficients

__all__ = [
    "BundleRing",
    "FormalBundle",
    "dual",
    "direct_sum",
    "tensor",
    "tensor_line",
    "sym_power",
    "jets",
    "ZERO",
    "chern_class",
    "chern_series",
    "virtual_chern_class",
    "segre_series",
    "super_schur",
    "giambelli_chern",
    "ProductSchurExpansion",
    "expand_product_schur",
    "StableExpansion",
    "stable_expand",
    "a1_thom",
    "a1_thom_segre_side",
    "verify_a1_identity",
]

GradedPolynomial = Poly


class BundleRing(PolyRing):
    """Polynomial ring in the Chern classes ``c_i(B)``, ``1 <= i <= rank(B)``,
    of an ordered list of primitive bundles. ``c_i`` has degree ``i``.

    ``degree`` is an optional working-degree bound; series requests beyond it
    are rejected.
    """

    def __init__(self, slots: Iterable[tuple[str, int]], degree: int | None = None):
        slots = [(str(name), int(rank)) for name, rank in slots]
        names = [s for s, _ in slots]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate slot names in {names}")
        for name, rank in slots:
            if rank < 0:
                raise ValueError(f"slot {name} has negative rank")
        self.slots = tuple(slots)
        self.ranks = {name: rank for name, rank in slots}
        self.working_degree = degree
        variables, weights = [], []
        for name, rank in slots:
            for i in range(1, rank + 1):
                variables.append(f"c{i}({name})")
                weights.append(i)
        super().__init__(variables, weights)
        root_names = [f"{name}_{j}" for name, rank in slots for j in range(1, rank + 1)]
        self.roots = PolyRing(root_names)
        self._root_offset = {}
        offset = 0
        for name, rank in slots:
            self._root_offset[name] = offset
            offset += rank

    def __repr__(self):
        return "BundleRing(" + ",".join(f"{n}:{r}" for n, r in self.slots) + ")"

    @property
    def slot_names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.slots)

    def bundle(self, name: str) -> "FormalBundle":
        if name not in self.ranks:
            raise UnknownBundle(f"no slot named {name!r} in {self!r}")
        return FormalBundle("slot", (name,), self.ranks[name])

    def c(self, i: int, name: str) -> Poly:
        """The generator ``c_i(name)``; ``c_0`` is 1 and ``c_i`` vanishes above the rank."""
        rank = self.ranks.get(name)
        if rank is None:
            raise UnknownBundle(f"no slot named {name!r} in {self!r}")
        if i == 0:
            return self.one()
        if i < 0 or i > rank:
            return self.zero()
        return self.var(f"c{i}({name})")

    def check_degree(self, d: int):
        if self.working_degree is not None and d > self.working_degree:
            raise DegreeOverflow(f"degree {d} exceeds working degree {self.working_degree}")


# -- formal bundles ---------------------------------------------------------------

@dataclass(frozen=True)
class FormalBundle:
    op: str
    args: tuple
    rank: int

    def __repr__(self):
        if self.op == "slot":
            return self.args[0]
        if self.op == "zero":
            return "0"
        if self.op == "dual":
            return f"{self.args[0]!r}~"
        inner = ", ".join(repr(a) for a in self.args)
        return f"{self.op}({inner})"


ZERO = FormalBundle("zero", (), 0)


def dual(B: FormalBundle) -> FormalBundle:
    return FormalBundle("dual", (B,), B.rank)


def direct_sum(*bundles: FormalBundle) -> FormalBundle:
    if len(bundles) == 1:
        return bundles[0]
    return FormalBundle("sum", tuple(bundles), sum(b.rank for b in bundles))


def tensor(A: FormalBundle, B: FormalBundle) -> FormalBundle:
    return FormalBundle("tensor", (A, B), A.rank * B.rank)


def tensor_line(B: FormalBundle, L: FormalBundle) -> FormalBundle:
    if L.rank != 1:
        raise DomainError(f"tensor_line needs a line bundle, got rank {L.rank}")
    return FormalBundle("tensor_line", (B, L), B.rank)


def sym_power(B: FormalBundle, k: int) -> FormalBundle:
    if k < 0:
        raise ValueError("negative symmetric power")
    return FormalBundle("sym", (B, k), comb(B.rank + k - 1, k))


def jets(B: FormalBundle, F: FormalBundle, k: int) -> FormalBundle:
    """``(Sym^1 B* + ... + Sym^k B*) (x) F``."""
    if k < 1:
        raise ValueError("jet order must be positive")
    rank = F.rank * sum(comb(B.rank + i - 1, i) for i in range(1, k + 1))
    return FormalBundle("jets", (B, F, k), rank)


def _roots(B: FormalBundle, ring: BundleRing) -> tuple[tuple[int, ...], ...]:
    """Chern roots of ``B`` as integer linear forms in the ring's root variables."""
    size = ring.roots.nvars
    op = B.op
    if op == "zero":
        return ()
    if op == "slot":
        name = B.args[0]
        if name not in ring.ranks:
            raise UnknownBundle(f"no slot named {name!r} in {ring!r}")
        if ring.ranks[name] != B.rank:
            raise DomainError(f"slot {name} has rank {ring.ranks[name]} in {ring!r}, bundle says {B.rank}")
        start = ring._root_offset[name]
        out = []
        for j in range(B.rank):
            v = [0] * size
            v[start + j] = 1
            out.append(tuple(v))
        return tuple(out)
    if op == "dual":
        return tuple(tuple(-x for x in r) for r in _roots(B.args[0], ring))
    if op == "sum":
        return tuple(r for part in B.args for r in _roots(part, ring))
    if op in ("tensor", "tensor_line"):
        left, right = (_roots(a, ring) for a in B.args)
        return tuple(tuple(x + y for x, y in zip(a, b)) for a in left for b in right)
    if op == "sym":
        base, k = B.args
        base_roots = _roots(base, ring)
        return tuple(
            tuple(sum(col) for col in zip(*choice)) if k else (0,) * size
            for choice in combinations_with_replacement(base_roots, k)
        )
    if op == "jets":
        base, target, k = B.args
        cotangent = dual(base)
        parts = [sym_power(cotangent, i) for i in range(1, k + 1)]
        return _roots(tensor(direct_sum(*parts), target), ring)
    raise ValueError(f"unknown bundle constructor {op!r}")


def _linear(ring: BundleRing, form: Sequence[int]) -> Poly:
    terms = {}
    for k, x in enumerate(form):
        if x:
            expo = [0] * ring.roots.nvars
            expo[k] = 1
            terms[tuple(expo)] = x
    return Poly(ring.roots, terms)


@lru_cache(maxsize=None)
def _elementary_in_block(ring: BundleRing, name: str, j: int) -> Poly:
    start = ring._root_offset[name]
    gens = ring.roots.gens()[start:start + ring.ranks[name]]
    return elementary(gens, j, ring.roots.one())


def roots_to_chern(ring: BundleRing, p: Poly) -> Poly:
    """Rewrite a polynomial in Chern roots, symmetric within each slot, in the
    primitive Chern classes.

    Repeatedly strips the lex-leading monomial ``x^lambda`` (blockwise a
    partition) against ``prod_k prod_j e_j(block k)^(lambda_j - lambda_{j+1})``.
    """
    if p.ring != ring.roots:
        raise ValueError("polynomial is not over this ring's Chern roots")
    result: dict[tuple, object] = {}
    remaining = dict(p.terms)
    while remaining:
        lead = max(remaining)
        coeff = remaining[lead]
        chern_expo = [0] * ring.nvars
        product = ring.roots.one()
        pos = 0
        for name, rank in ring.slots:
            block = lead[pos:pos + rank] + (0,)
            for j in range(rank):
                step = block[j] - block[j + 1]
                if step < 0:
                    raise ValueError("polynomial is not symmetric in the roots of " + name)
                if step:
                    chern_expo[ring.index[f"c{j + 1}({name})"]] += step
                    product = product * _elementary_in_block(ring, name, j + 1) ** step
            pos += rank
        for m, c in product.terms.items():
            v = remaining.get(m, 0) - coeff * c
            if v:
                remaining[m] = v
            else:
                remaining.pop(m, None)
        key = tuple(chern_expo)
        result[key] = result.get(key, 0) + coeff
    return Poly(ring, result)


@lru_cache(maxsize=4096)
def chern_series(B: FormalBundle, ring: BundleRing, up_to: int) -> tuple[Poly, ...]:
    """``(c_0(B), ..., c_up_to(B))``; entries above the rank are zero."""
    ring.check_degree(up_to)
    if B.op == "slot":
        return tuple(ring.c(i, B.args[0]) for i in range(up_to + 1))
    top = min(up_to, B.rank)
    one = ring.roots.one()
    e = [one] + [ring.roots.zero()] * top
    for r in _roots(B, ring):
        x = _linear(ring, r)
        if x.is_zero():
            continue
        for j in range(top, 0, -1):
            e[j] = e[j] + e[j - 1] * x
    out = [roots_to_chern(ring, ej) for ej in e]
    out += [ring.zero()] * (up_to - top)
    return tuple(out)


def chern_class(B: FormalBundle, i: int, ring: BundleRing) -> Poly:
    if i < 0:
        raise ValueError("negative Chern class index")
    if i > B.rank:
        raise DegreeOverflow(f"c_{i} requested for a bundle of rank {B.rank}")
    return chern_series(B, ring, i)[i]


def _series_inverse(s: Sequence[Poly], up_to: int) -> list[Poly]:
    inv = [s[0] * 0 + 1]
    for k in range(1, up_to + 1):
        acc = s[0] * 0
        for j in range(1, min(k, len(s) - 1) + 1):
            acc = acc + s[j] * inv[k - j]
        inv.append(-acc)
    return inv


def _series_product(a: Sequence[Poly], b: Sequence[Poly], up_to: int) -> list[Poly]:
    out = []
    for k in range(up_to + 1):
        acc = a[0] * 0
        for j in range(k + 1):
            if j < len(a) and k - j < len(b):
                acc = acc + a[j] * b[k - j]
        out.append(acc)
    return out


def virtual_chern_class(A: FormalBundle, B: FormalBundle, i: int, ring: BundleRing) -> Poly:
    """Degree-``i`` part of ``c(A) / c(B)``, the Chern class of ``A - B``."""
    if i < 0:
        raise ValueError("negative Chern class index")
    num = chern_series(A, ring, i)
    den = chern_series(B, ring, i)
    return _series_product(num, _series_inverse(den, i), i)[i]


@lru_cache(maxsize=4096)
def segre_series(E: FormalBundle, F: FormalBundle, ring: BundleRing, up_to: int) -> PowerSeriesSlice:
    """Coefficients of ``prod_b (1 - b) / prod_a (1 - a)`` through degree ``up_to``,
    where the ``a`` are roots of ``E`` and the ``b`` roots of ``F``.

    ``prod (1 - b)`` is the total Chern class of ``F*``, so this is
    ``c(F*) / c(E*)``.
    """
    if up_to < 0:
        raise ValueError("up_to must be nonnegative")
    num = chern_series(dual(F), ring, up_to)
    den = chern_series(dual(E), ring, up_to)
    return PowerSeriesSlice(_series_product(num, _series_inverse(den, up_to), up_to))


@lru_cache(maxsize=16384)
def super_schur(I, E: FormalBundle, F: FormalBundle, ring: BundleRing) -> Poly:
    """``S_I(E - F)`` as the determinant of Segre coefficients."""
    I = Partition(I)
    if not I:
        return ring.one()
    series = segre_series(E, F, ring, I[0] + len(I) - 1)
    return jacobi_trudi(I, series)


def giambelli_chern(I, B: FormalBundle, ring: BundleRing) -> Poly:
    """``S_I(B)`` as ``det(c_{k_p - p + q}(B))`` with ``k`` the conjugate of ``I``."""
    K = conjugate(Partition(I))
    n = len(K)
    if n == 0:
        return ring.one()
    top = K[0] + n - 1
    c = chern_series(B, ring, top)
    entry = lambda k: c[k] if k >= 0 else ring.zero()
    return det([[entry(K[p] - p + q) for q in range(n)] for p in range(n)], ring.zero(), ring.one())


# -- Schur-basis expansions ------------------------------------------------------

SlotKey = tuple  # tuple of Partition, one per slot


class ProductSchurExpansion:
    """Linear combination of products ``S_{I_1}(B_1) ... S_{I_p}(B_p)``.

    ``duals[k]`` says whether slot ``k`` enters as its dual bundle. Keys whose
    ``k``-th partition is longer than the slot rank vanish and are dropped.
    Coefficients are ints, or Fractions in intermediate results.
    """

    __slots__ = ("ring", "duals", "terms")

    def __init__(self, ring: BundleRing, duals: Sequence[bool], terms: Mapping | None = None):
        self.ring = ring
        self.duals = tuple(bool(d) for d in duals)
        if len(self.duals) != len(ring.slots):
            raise ValueError("one variance flag per slot")
        out: dict[SlotKey, object] = {}
        for key, c in (terms or {}).items():
            key = tuple(Partition(k) for k in key)
            if len(key) != len(ring.slots):
                raise ValueError(f"key {key} does not match {len(ring.slots)} slots")
            if any(len(I) > rank for I, (_, rank) in zip(key, ring.slots)):
                continue
            out[key] = out.get(key, 0) + c
        self.terms = {k: c for k, c in out.items() if c != 0}

    @classmethod
    def unit(cls, ring, duals):
        return cls(ring, duals, {tuple(Partition() for _ in ring.slots): 1})

    def _same(self, other):
        if not isinstance(other, ProductSchurExpansion):
            raise TypeError(f"cannot combine with {type(other).__name__}")
        if self.ring != other.ring or self.duals != other.duals:
            raise ValueError("expansions live over different slot declarations")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ProductSchurExpansion.unit(self.ring, self.duals) * other
        self._same(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return ProductSchurExpansion(self.ring, self.duals, out)

    __radd__ = __add__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ProductSchurExpansion(self.ring, self.duals, {k: c * other for k, c in self.terms.items()})
        self._same(other)
        ranks = [rank for _, rank in self.ring.slots]
        out: dict[SlotKey, object] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                partial = {(): c1 * c2}
                for I, J, rank in zip(k1, k2, ranks):
                    lr = lr_coefficients(I, J, max_rows=rank)
                    partial = {
                        key + (K,): c * v for key, c in partial.items() for K, v in lr.items()
                    }
                for key, c in partial.items():
                    out[key] = out.get(key, 0) + c
        return ProductSchurExpansion(self.ring, self.duals, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, ProductSchurExpansion)
            and self.ring == other.ring
            and self.duals == other.duals
            and self.terms == other.terms
        )

    def __len__(self):
        return len(self.terms)

    def coefficient(self, key) -> object:
        return self.terms.get(tuple(Partition(k) for k in key), 0)

    def degree_of(self, key) -> int:
        return sum(I.weight for I in key)

    def is_homogeneous(self) -> bool:
        return len({self.degree_of(k) for k in self.terms}) <= 1

    def sorted_terms(self):
        """Deterministic order: total degree, then lexicographic on the key tuple."""
        return sorted(
            self.terms.items(),
            key=lambda kc: (self.degree_of(kc[0]), tuple(I.sort_key() for I in kc[0])),
        )

    def slot_bundles(self) -> list[FormalBundle]:
        return [dual(self.ring.bundle(n)) if d else self.ring.bundle(n) for n, d in zip(self.ring.slot_names, self.duals)]

    def evaluate(self) -> Poly:
        """Re-evaluate term by term through :func:`super_schur`."""
        bundles = self.slot_bundles()
        total = self.ring.zero()
        for key, c in self.terms.items():
            term = self.ring.one() * c
            for I, B in zip(key, bundles):
                if I:
                    term = term * super_schur(I, B, ZERO, self.ring)
            total = total + term
        return total

    def format_term(self, key) -> str:
        factors = []
        for I, name, d in zip(key, self.ring.slot_names, self.duals):
            if I:
                factors.append(f"S[{I}]({name}{'~' if d else ''})")
        return "*".join(factors) if factors else "1"

    def __repr__(self):
        if not self.terms:
            return "0"
        out = []
        for key, c in self.sorted_terms():
            body = self.format_term(key)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            text = body if mag == 1 and body != "1" else (str(mag) if body == "1" else f"{mag}*{body}")
            out.append((sign, text))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, text in out[1:]:
            s += f" {sign} {text}"
        return s


def _duals_tuple(ring: BundleRing, variance) -> tuple[bool, ...]:
    if variance is None:
        return (False,) * len(ring.slots)
    if isinstance(variance, Mapping):
        unknown = set(variance) - set(ring.slot_names)
        if unknown:
            raise UnknownBundle(f"unknown slots {sorted(unknown)}")
        return tuple(bool(variance.get(n, False)) for n in ring.slot_names)
    if isinstance(variance, (set, frozenset)) or (variance and isinstance(next(iter(variance)), str)):
        names = set(variance)
        unknown = names - set(ring.slot_names)
        if unknown:
            raise UnknownBundle(f"unknown slots {sorted(unknown)}")
        return tuple(n in names for n in ring.slot_names)
    flags = tuple(bool(v) for v in variance)
    if len(flags) != len(ring.slots):
        raise ValueError("one variance flag per slot")
    return flags


def expand_product_schur(P: Poly, variance=None) -> ProductSchurExpansion:
    """Unique expansion of ``P`` in products of Schur functions of the slots.

    ``variance`` picks ``S_I(B)`` or ``S_I(B*)`` per slot: a sequence of
    flags, a mapping ``name -> bool``, or a set of slot names to dualize.
    Uses ``c_i(B) = S_{1^i}(B) = (-1)^i S_{1^i}(B*)`` and LR products.
    """
    ring = P.ring
    if not isinstance(ring, BundleRing):
        raise TypeError("expected a polynomial over a BundleRing")
    duals = _duals_tuple(ring, variance)
    unit = ProductSchurExpansion.unit(ring, duals)
    images = []
    for name in ring.names:
        i = int(name[1:name.index("(")])
        slot = name[name.index("(") + 1:-1]
        k = ring.slot_names.index(slot)
        key = [Partition()] * len(ring.slots)
        key[k] = Partition((1,) * i)
        sign = -1 if duals[k] and i % 2 else 1
        images.append(ProductSchurExpansion(ring, duals, {tuple(key): sign}))
    return P.substitute(images, unit)


class StableExpansion:
    """Coefficients ``alpha_I`` of ``sum_I alpha_I S_I(E* - F*)``."""

    def __init__(self, ring: BundleRing, e_slot: str, f_slot: str, terms: Mapping):
        self.ring = ring
        self.e_slot = e_slot
        self.f_slot = f_slot
        self.terms = {Partition(k): c for k, c in terms.items() if c != 0}

    def __eq__(self, other):
        if isinstance(other, Mapping):
            return self.terms == {Partition(k): c for k, c in other.items()}
        return (
            isinstance(other, StableExpansion)
            and (self.ring, self.e_slot, self.f_slot) == (other.ring, other.e_slot, other.f_slot)
            and self.terms == other.terms
        )

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kc: kc[0].sort_key())

    def evaluate(self) -> Poly:
        E = dual(self.ring.bundle(self.e_slot))
        F = dual(self.ring.bundle(self.f_slot))
        total = self.ring.zero()
        for I, c in self.terms.items():
            total = total + super_schur(I, E, F, self.ring) * c
        return total

    def __repr__(self):
        if not self.terms:
            return "0"
        out = ""
        for I, c in self.sorted_terms():
            body = f"S[{I}]({self.e_slot}~ - {self.f_slot}~)"
            text = body if abs(c) == 1 else f"{abs(c)}*{body}"
            if not out:
                out = ("-" if c < 0 else "") + text
            else:
                out += f" {'-' if c < 0 else '+'} {text}"
        return out


def stable_expand(P: Poly, e_slot: str = "E", f_slot: str = "F") -> StableExpansion:
    """Expand ``P`` in the supersymmetric basis ``S_I(E* - F*)``.

    The coefficients are read off the mixed expansion in ``S_I(E*) S_J(F)``:
    ``alpha_I`` is the coefficient at ``J = ()``. Partitions too long for
    ``E`` are read at ``I = ()``, ``J = conjugate``, instead. The result is
    re-evaluated and :class:`NotSupersymmetric` raised if it misses ``P``.
    """
    ring = P.ring
    if not isinstance(ring, BundleRing):
        raise TypeError("expected a polynomial over a BundleRing")
    for s in (e_slot, f_slot):
        if s not in ring.ranks:
            raise UnknownBundle(f"no slot named {s!r} in {ring!r}")
    if not P.is_homogeneous():
        raise DomainError("stable expansion needs a homogeneous polynomial")
    m, n = ring.ranks[e_slot], ring.ranks[f_slot]
    beta = expand_product_schur(P, {e_slot})
    ie, jf = ring.slot_names.index(e_slot), ring.slot_names.index(f_slot)
    others = [k for k in range(len(ring.slots)) if k not in (ie, jf)]
    alpha: dict[Partition, object] = {}
    for key, c in beta.terms.items():
        if any(key[k] for k in others):
            continue
        I, J = key[ie], key[jf]
        if not J:
            alpha[I] = c
        elif not I and len(J) <= n:
            K = conjugate(J)
            if len(K) > m:
                alpha[K] = c
    result = StableExpansion(ring, e_slot, f_slot, alpha)
    residual = P - result.evaluate()
    if residual:
        # Hook partitions with more than m rows and more than n columns are
        # invisible to both readings; solve for them directly.
        extra = _solve_hook_remainder(residual, e_slot, f_slot, m, n)
        if extra is None:
            raise NotSupersymmetric(
                f"{P!r} is not a polynomial in the difference {e_slot}* - {f_slot}*"
            )
        alpha.update(extra)
        result = StableExpansion(ring, e_slot, f_slot, alpha)
        if result.evaluate() != P:
            raise NotSupersymmetric(f"reconstruction of {P!r} failed")
    return result


def _solve_hook_remainder(R: Poly, e_slot, f_slot, m, n):
    ring = R.ring
    d = R.degree()
    E, F = dual(ring.bundle(e_slot)), dual(ring.bundle(f_slot))
    candidates = [
        K for K in partitions_of(d)
        if len(K) > m and K[0] > n and K.part(m) <= n
    ]
    if not candidates:
        return None
    columns = [super_schur(K, E, F, ring) for K in candidates]
    monomials = sorted(set(R.terms).union(*(c.terms for c in columns)))
    rows = [[Fraction(c.terms.get(mono, 0)) for c in columns] + [Fraction(R.terms.get(mono, 0))] for mono in monomials]
    solution = _solve_exact(rows, len(candidates))
    if solution is None or any(x.denominator != 1 for x in solution):
        return None
    return {K: int(x) for K, x in zip(candidates, solution) if x}


def _solve_exact(rows, nunknowns):
    """Gauss-Jordan over the rationals; None when inconsistent or underdetermined."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for col in range(nunknowns):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            return None
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][col]
        rows[r] = [x / p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    if any(row[-1] != 0 for row in rows[r:]):
        return None
    return [rows[i][-1] for i in range(nunknowns)]


# -- first-order Thom polynomial ----------------------------------------------------

def _a1_ring(m: int, n: int) -> BundleRing:
    if n < m:
        raise RankOrder(f"need n >= m, got m={m}, n={n}")
    return BundleRing([("E", m), ("F", n)])


def a1_thom(m: int, n: int, ring: BundleRing | None = None) -> Poly:
    """``c_{n-m+1}(F - E)`` for source rank ``m`` and target rank ``n``."""
    ring = ring or _a1_ring(m, n)
    if n < m:
        raise RankOrder(f"need n >= m, got m={m}, n={n}")
    return virtual_chern_class(ring.bundle("F"), ring.bundle("E"), n - m + 1, ring)


def a1_thom_segre_side(m: int, n: int, ring: BundleRing | None = None) -> Poly:
    """``sum_i S_{n-m+1-i}(E*) c_i(F)``."""
    ring = ring or _a1_ring(m, n)
    k = n - m + 1
    E, F = ring.bundle("E"), ring.bundle("F")
    total = ring.zero()
    for i in range(0, min(k, n) + 1):
        total = total + super_schur((k - i,), dual(E), ZERO, ring) * chern_class(F, i, ring)
    return total


def verify_a1_identity(m: int, n: int) -> bool:
    ring = _a1_ring(m, n)
    return a1_thom(m, n, ring) == a1_thom_segre_side(m, n, ring)
