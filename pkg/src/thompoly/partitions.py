"""Integer partitions and the small amount of Young-diagram combinatorics we need."""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable

from .errors import BoxOverflow, ExprSyntaxError

__all__ = [
    "Partition",
    "conjugate",
    "contains",
    "box_complement",
    "staircase",
    "partitions_in_box",
    "partitions_contained_in",
    "partitions_of",
    "parse_partition",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0)) ==
    Partition((2, 1))`` and both hash alike. Use :meth:`padded` to get an
    explicit fixed-length view.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        if isinstance(parts, Partition):
            return parts
        parts = [int(p) for p in parts]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be nonnegative: {parts}")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self) > n:
            raise ValueError(f"{self} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def part(self, k: int) -> int:
        """0-based part access, returning 0 past the end."""
        return self[k] if k < len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def sort_key(self):
        """Weight first, then reverse lexicographic: (2) before (1,1)."""
        return (self.weight, tuple(-p for p in self))

    def __repr__(self):
        return "(" + ",".join(map(str, self)) + ")"

    __str__ = __repr__


EMPTY = Partition()


@lru_cache(maxsize=4096)
def conjugate(I: Partition) -> Partition:
    I = Partition(I)
    if not I:
        return EMPTY
    return Partition(sum(1 for p in I if p > c) for c in range(I[0]))


def contains(I, J) -> bool:
    """True iff the diagram of ``J`` fits inside the diagram of ``I``."""
    I, J = Partition(I), Partition(J)
    if len(J) > len(I):
        return False
    return all(j <= i for i, j in zip(I, J))


def fits_box(I, m: int, n: int) -> bool:
    """``I`` has at most ``m`` rows and at most ``n`` columns."""
    I = Partition(I)
    return len(I) <= m and (not I or I[0] <= n)


def box_complement(I, m: int, n: int) -> Partition:
    """``(n - i_m, ..., n - i_1)``: the partition filling the rest of the m x n box."""
    I = Partition(I)
    if not fits_box(I, m, n):
        raise BoxOverflow(f"{I} does not fit in a {m}x{n} box")
    return Partition(n - i for i in reversed(I.padded(m)))


def staircase(q: int) -> Partition:
    if q < 0:
        raise ValueError("q must be nonnegative")
    return Partition(range(q, 0, -1))


def _bounded(weight: int, max_len: int, max_part: int):
    """Partitions of ``weight`` with at most ``max_len`` parts, each at most ``max_part``."""
    if weight == 0:
        yield ()
        return
    if max_len == 0 or max_part == 0:
        return
    for first in range(min(weight, max_part), 0, -1):
        for rest in _bounded(weight - first, max_len - 1, first):
            yield (first,) + rest


def partitions_of(weight: int, max_len: int | None = None, max_part: int | None = None) -> list[Partition]:
    """All partitions of ``weight``, optionally bounded, largest first in
    lexicographic order."""
    max_len = weight if max_len is None else max_len
    max_part = weight if max_part is None else max_part
    return [Partition(p) for p in _bounded(weight, max_len, max_part)]


def partitions_in_box(m: int, n: int) -> list[Partition]:
    """Every partition fitting an m x n box, in :meth:`Partition.sort_key` order."""
    return [p for w in range(m * n + 1) for p in partitions_of(w, m, n)]


def partitions_contained_in(I) -> list[Partition]:
    I = Partition(I)

    def rec(k, bound):
        if k == len(I):
            yield ()
            return
        for v in range(min(I[k], bound), -1, -1):
            if v == 0:
                yield ()
            else:
                for rest in rec(k + 1, v):
                    yield (v,) + rest

    return sorted((Partition(p) for p in rec(0, I.part(0))), key=Partition.sort_key)


_PARTITION_RE = re.compile(r"\s*\(\s*(\d+(?:\s*,\s*\d+)*)?\s*\)\s*$")


def parse_partition(text: str) -> Partition:
    """Parse ``"(3,1)"``, ``"( 2, 2 )"`` or ``"()"``."""
    match = _PARTITION_RE.match(text)
    if not match:
        raise ExprSyntaxError(f"malformed partition {text!r}", pos=0, source=text)
    body = match.group(1)
    parts = [int(x) for x in body.split(",")] if body else []
    try:
        return Partition(parts)
    except ValueError as exc:
        raise ExprSyntaxError(str(exc), pos=0, source=text) from None
