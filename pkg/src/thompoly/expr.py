"""Parser for ring declarations and Chern-class expressions.

Grammar (whitespace-insensitive)::

    expr      := term (('+' | '-') term)*
    term      := ['-'] factor ('*' factor)*
    factor    := atom ('^' uint)?
    atom      := int | chern | schur | '(' expr ')'
    chern     := 'c' uint '(' vbundle ')'
    schur     := 'S' '[' partition ']' '(' vbundle ')'
    vbundle   := bundle ('-' bundle)?
    bundle    := name '~'?
    partition := '(' (uint (',' uint)*)? ')'

A leading ``-`` on a term is accepted so printed expansions parse back.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .chern import ZERO, BundleRing, FormalBundle, chern_class, dual, super_schur, virtual_chern_class
from .errors import DegreeOverflow, ExprSyntaxError, UnknownBundle
from .partitions import Partition
from .polynomial import Poly

__all__ = ["parse_ring", "parse_expr", "evaluate", "parse_and_evaluate"]

_SLOT_RE = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*:\s*(\d+)\s*$")


def parse_ring(text: str, degree: int | None = None) -> BundleRing:
    """``"E:2,L:1"`` -> ring with slots E (rank 2) and L (rank 1)."""
    slots = []
    offset = 0
    for chunk in text.split(","):
        match = _SLOT_RE.match(chunk)
        if not match:
            raise ExprSyntaxError(f"bad slot declaration {chunk.strip()!r}", pos=offset, source=text)
        slots.append((match.group(1), int(match.group(2))))
        offset += len(chunk) + 1
    names = [n for n, _ in slots]
    if len(set(names)) != len(names):
        raise ExprSyntaxError(f"duplicate slot names in {text!r}", pos=0, source=text)
    return BundleRing(slots, degree=degree)


# -- AST ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class BundleRef:
    name: str
    dual: bool


@dataclass(frozen=True)
class VBundle:
    plus: BundleRef
    minus: BundleRef | None


@dataclass(frozen=True)
class Chern:
    index: int
    bundle: VBundle


@dataclass(frozen=True)
class Schur:
    partition: Partition
    bundle: VBundle


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


# -- tokenizer ----------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(src: str):
    tokens = []
    pos = 0
    while pos < len(src):
        match = _TOKEN_RE.match(src, pos)
        if match.group(1) is not None:
            tokens.append(("int", match.group(1), match.start(1)))
        elif match.group(2) is not None:
            tokens.append(("name", match.group(2), match.start(2)))
        elif match.group(3) is not None:
            tokens.append(("op", match.group(3), match.start(3)))
        pos = match.end()
    tokens.append(("eof", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str, ring: BundleRing):
        self.src = src
        self.ring = ring
        self.tokens = _tokenize(src)
        self.i = 0

    def peek(self, k=0):
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return ExprSyntaxError(message, pos=tok[2], source=self.src)

    def expect(self, value):
        tok = self.next()
        if tok[0] != "op" or tok[1] != value:
            shown = tok[1] or "end of input"
            raise self.error(f"expected {value!r}, found {shown!r}", tok)
        return tok

    def at(self, value):
        tok = self.peek()
        return tok[0] == "op" and tok[1] == value

    def uint(self):
        tok = self.next()
        if tok[0] != "int":
            raise self.error(f"expected an unsigned integer, found {tok[1] or 'end of input'!r}", tok)
        return int(tok[1])

    # grammar rules
    def parse(self):
        node = self.expr()
        if self.peek()[0] != "eof":
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return node

    def expr(self):
        node = self.term()
        while self.at("+") or self.at("-"):
            op = self.next()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        negate = False
        if self.at("-"):
            self.next()
            negate = True
        node = self.factor()
        while self.at("*"):
            self.next()
            node = BinOp("*", node, self.factor())
        return Neg(node) if negate else node

    def factor(self):
        node = self.atom()
        if self.at("^"):
            self.next()
            node = Pow(node, self.uint())
        return node

    def atom(self):
        tok = self.peek()
        if tok[0] == "int":
            self.next()
            return Num(int(tok[1]))
        if self.at("("):
            self.next()
            node = self.expr()
            self.expect(")")
            return node
        if tok[0] == "name":
            match = re.fullmatch(r"c(\d+)", tok[1])
            if match and self.peek(1)[1] == "(":
                self.next()
                self.expect("(")
                vb = self.vbundle()
                self.expect(")")
                index = int(match.group(1))
                if vb.minus is None:
                    rank = self.ring.ranks[vb.plus.name]
                    if index > rank:
                        raise DegreeOverflow(f"c{index}({vb.plus.name}) exceeds rank {rank} (position {tok[2]})")
                return Chern(index, vb)
            if tok[1] == "S" and self.peek(1)[1] == "[":
                self.next()
                self.expect("[")
                partition = self.partition()
                self.expect("]")
                self.expect("(")
                vb = self.vbundle()
                self.expect(")")
                return Schur(partition, vb)
        raise self.error(f"unexpected {tok[1] or 'end of input'!r}", tok)

    def vbundle(self):
        plus = self.bundle()
        minus = None
        if self.at("-"):
            self.next()
            minus = self.bundle()
        return VBundle(plus, minus)

    def bundle(self):
        tok = self.next()
        if tok[0] != "name":
            raise self.error(f"expected a bundle name, found {tok[1] or 'end of input'!r}", tok)
        if tok[1] not in self.ring.ranks:
            raise UnknownBundle(f"unknown bundle {tok[1]!r} at position {tok[2]}")
        is_dual = False
        if self.at("~"):
            self.next()
            is_dual = True
        return BundleRef(tok[1], is_dual)

    def partition(self):
        start = self.expect("(")
        parts = []
        if not self.at(")"):
            parts.append(self.uint())
            while self.at(","):
                self.next()
                parts.append(self.uint())
        self.expect(")")
        try:
            return Partition(parts)
        except ValueError as exc:
            raise self.error(str(exc), start) from None


def parse_expr(src: str, ring: BundleRing):
    return _Parser(src, ring).parse()


def _formal(ref: BundleRef | None, ring: BundleRing) -> FormalBundle:
    if ref is None:
        return ZERO
    b = ring.bundle(ref.name)
    return dual(b) if ref.dual else b


def evaluate(node, ring: BundleRing) -> Poly:
    if isinstance(node, Num):
        return ring.const(node.value)
    if isinstance(node, Neg):
        return -evaluate(node.arg, ring)
    if isinstance(node, BinOp):
        a, b = evaluate(node.left, ring), evaluate(node.right, ring)
        return a + b if node.op == "+" else a - b if node.op == "-" else a * b
    if isinstance(node, Pow):
        return evaluate(node.base, ring) ** node.exponent
    if isinstance(node, Chern):
        plus = _formal(node.bundle.plus, ring)
        if node.bundle.minus is None:
            return chern_class(plus, node.index, ring)
        return virtual_chern_class(plus, _formal(node.bundle.minus, ring), node.index, ring)
    if isinstance(node, Schur):
        return super_schur(node.partition, _formal(node.bundle.plus, ring), _formal(node.bundle.minus, ring), ring)
    raise TypeError(f"unknown node {node!r}")


def parse_and_evaluate(src: str, ring: BundleRing) -> Poly:
    return evaluate(parse_expr(src, ring), ring)
