"""Command-line front end.

Exit status: 0 on success, 1 on domain errors, 2 on syntax errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .chern import (
    ProductSchurExpansion,
    a1_thom,
    a1_thom_segre_side,
    expand_product_schur,
    stable_expand,
    BundleRing,
)
from .errors import DomainError, ExprSyntaxError, ThomError
from .expr import parse_and_evaluate, parse_ring
from .grassmannian import GrassmannRing, giambelli, integrate
from .partitions import parse_partition
from .polynomial import Poly, format_poly
from .symmetric import lr_coefficients
from .thom import binomial_det, check_positivity, corank_thom


def _dec(x) -> str:
    return str(x)


def ring_json(ring: BundleRing):
    return [{"name": n, "rank": r} for n, r in ring.slots]


def poly_json(p: Poly):
    out = []
    for m, c in p.sorted_terms():
        out.append({"monomial": {p.ring.names[k]: e for k, e in enumerate(m) if e}, "coeff": _dec(c)})
    return out


def positivity_json(report, names):
    return {
        "nonnegative": report.nonnegative,
        "sum": _dec(report.coefficient_sum),
        "negative_terms": [
            {"monomial": {n: list(I) for n, I in zip(names, key)}, "coeff": _dec(c)}
            for key, c in report.negative_terms.items()
        ],
    }


def expansion_json(exp: ProductSchurExpansion, degree=None):
    names = exp.ring.slot_names
    if degree is None:
        degree = max((exp.degree_of(k) for k in exp.terms), default=0)
    return {
        "ring": ring_json(exp.ring),
        "degree": degree,
        "terms": [
            {
                "monomial": {n: list(I) for n, I in zip(names, key)},
                "dual": {n: d for n, d in zip(names, exp.duals)},
                "coeff": _dec(c),
            }
            for key, c in exp.sorted_terms()
        ],
        "positivity": positivity_json(check_positivity(exp), names),
    }


def _ring_text(ring: BundleRing) -> str:
    return ",".join(f"{n}:{r}" for n, r in ring.slots)


def _parse_duals(text: str | None):
    if not text:
        return set()
    return {s.strip() for s in text.split(",") if s.strip()}


def _parse_tuple(text: str):
    return [parse_partition(chunk) for chunk in text.split(";")]


def _parse_boxes(text: str):
    boxes = []
    for chunk in text.split(";"):
        body = chunk.strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise ExprSyntaxError(f"bad box {chunk!r}, expected (m,n)", pos=0, source=text)
        try:
            m, n = (int(x) for x in body[1:-1].split(","))
        except ValueError:
            raise ExprSyntaxError(f"bad box {chunk!r}, expected (m,n)", pos=0, source=text) from None
        boxes.append((m, n))
    return boxes


# -- subcommands -------------------------------------------------------------------
# Each returns (text, json_payload, exit_code).

def cmd_expand(args):
    ring = parse_ring(args.ring, degree=args.degree)
    P = parse_and_evaluate(args.expr, ring)
    exp = expand_product_schur(P, _parse_duals(args.dual))
    payload = expansion_json(exp, degree=max(P.degree(), 0))
    report = check_positivity(exp)
    text = "\n".join([
        f"ring: {_ring_text(ring)}",
        f"polynomial: {format_poly(P)}",
        f"expansion: {exp!r}",
        f"positivity: {report}",
    ])
    return text, payload, 0


def cmd_stable_expand(args):
    ring = parse_ring(args.ring, degree=args.degree)
    if len(ring.slots) != 2:
        raise DomainError("stable-expand needs exactly two slots, E then F")
    e_slot, f_slot = ring.slot_names
    P = parse_and_evaluate(args.expr, ring)
    result = stable_expand(P, e_slot, f_slot)
    payload = {
        "ring": ring_json(ring),
        "degree": max(P.degree(), 0),
        "terms": [{"partition": list(I), "coeff": _dec(c)} for I, c in result.sorted_terms()],
    }
    return f"stable expansion: {result!r}", payload, 0


def cmd_lr(args):
    left, right = parse_partition(args.left), parse_partition(args.right)
    coeffs = lr_coefficients(left, right, max_rows=args.rows)
    items = sorted(coeffs.items(), key=lambda kv: kv[0].sort_key())
    text = "{" + ",".join(f"{K}:{v}" for K, v in items) + "}"
    payload = {"left": list(left), "right": list(right), "terms": [{"partition": list(K), "coeff": _dec(v)} for K, v in items]}
    return text, payload, 0


def cmd_giambelli(args):
    I = parse_partition(args.partition)
    ring = GrassmannRing([(args.m, args.n)])
    cls = giambelli(I, ring)
    ok = cls == ring.schubert(I)
    text = (
        f"Giambelli determinant for sigma{I} in G({args.m},{args.m + args.n}): "
        f"{'confirmed' if ok else 'MISMATCH'}\nclass: {cls!r}"
    )
    payload = {
        "partition": list(I),
        "m": args.m,
        "n": args.n,
        "confirmed": ok,
        "class": [{"partition": list(key[0]), "coeff": _dec(c)} for key, c in cls.sorted_terms()],
    }
    return text, payload, 0 if ok else 1


def cmd_pair(args):
    boxes = _parse_boxes(args.boxes)
    ring = GrassmannRing(boxes)
    left, right = _parse_tuple(args.left), _parse_tuple(args.right)
    value = integrate(ring.schubert(*left) * ring.schubert(*right))
    payload = {"boxes": [list(b) for b in boxes], "left": [list(I) for I in left], "right": [list(I) for I in right], "value": _dec(value)}
    return str(value), payload, 0


def cmd_dij(args):
    I, J = parse_partition(args.I), parse_partition(args.J)
    value = binomial_det(I, J, args.m)
    return str(value), {"I": list(I), "J": list(J), "m": args.m, "value": _dec(value)}, 0


def cmd_corank_thom(args):
    result = corank_thom(args.q, args.m)
    exp = result.expansion
    report = check_positivity(exp)
    payload = expansion_json(exp, degree=result.degree)
    payload.update({"q": result.q, "m": result.m, "scale": _dec(result.scale), "integral": result.integral})
    text = "\n".join([
        f"corank >= {result.q} locus, rank {result.m}, degree {result.degree}",
        f"scale: {result.scale}",
        f"expansion: {exp!r}",
        f"positivity: {report}",
    ])
    return text, payload, 0


def cmd_a1(args):
    P = a1_thom(args.m, args.n)
    payload = {"m": args.m, "n": args.n, "ring": ring_json(P.ring), "polynomial": format_poly(P), "terms": poly_json(P)}
    lines = [format_poly(P)]
    code = 0
    if args.verify:
        ok = P == a1_thom_segre_side(args.m, args.n, P.ring)
        payload["verified"] = ok
        lines.append(f"identity holds: {'true' if ok else 'false'}")
        code = 0 if ok else 1
    return "\n".join(lines), payload, code


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--out", help="also write the JSON report to this file")

    parser = argparse.ArgumentParser(prog="thompoly", description="Schur expansions of Thom polynomials")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="expand in products of Schur functions")
    p.add_argument("--ring", required=True, help='slot declarations, e.g. "E:2,F:3"')
    p.add_argument("--expr", required=True)
    p.add_argument("--dual", help="comma-separated slots to expand in the dual bundle")
    p.add_argument("--degree", type=int, help="working-degree bound")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("stable-expand", parents=[common], help="expand in S_I(E* - F*)")
    p.add_argument("--ring", required=True, help='"E:m,F:n"')
    p.add_argument("--expr", required=True)
    p.add_argument("--degree", type=int)
    p.set_defaults(func=cmd_stable_expand)

    p = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson coefficients")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--rows", type=int, help="drop results with more rows")
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("giambelli", parents=[common], help="check the Giambelli determinant")
    p.add_argument("--partition", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_giambelli)

    p = sub.add_parser("pair", parents=[common], help="intersection number on a product of Grassmannians")
    p.add_argument("--boxes", required=True, help='"(m,n);(m,n)"')
    p.add_argument("--left", required=True, help='"(2,1);(1)"')
    p.add_argument("--right", required=True)
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("dIJ", parents=[common], help="binomial determinant d_{I,J}")
    p.add_argument("--I", dest="I", required=True)
    p.add_argument("--J", dest="J", required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_dij)

    p = sub.add_parser("corank-thom", parents=[common], help="corank >= q locus of quadratic forms")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_corank_thom)

    p = sub.add_parser("a1", parents=[common], help="first-order Thom polynomial c_{n-m+1}(F - E)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="check it against the Segre-class sum")
    p.set_defaults(func=cmd_a1)
    return parser


def _emit(args, text, payload):
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=False)
            fh.write("\n")
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, payload, code = args.func(args)
    except ExprSyntaxError as exc:
        return _fail(args, exc, 2)
    except (DomainError, ThomError) as exc:
        return _fail(args, exc, 1)
    _emit(args, text, payload)
    return code


def _fail(args, exc, code):
    error = {"code": exc.code, "message": str(exc)}
    if getattr(exc, "pos", None) is not None:
        error["position"] = exc.pos
    if args.json:
        print(json.dumps({"error": error}, indent=2))
    print(f"error: {exc}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
