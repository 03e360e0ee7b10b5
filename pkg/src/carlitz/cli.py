"""Command-line front end.

Subcommands: table, eval, det, expand, ortho, measure, perm, zeta,
trivzero, angles, gamma, selftest.  Results are emitted as one JSON
document on stdout (sorted keys, so identical runs are byte-identical);
--format text switches to an indented rendering, and selftest prints its
pass/fail table in text mode.

Exit codes: 0 success, 2 domain error (with the originating error name),
3 guard violation, 64 usage.  CARLITZ_THREADS is accepted and recorded;
computation in this build is serial (all values are immutable, so no
contract depends on it).

Polynomial literals use ``t`` for the ring generator (so "t^2+t+1" is a
degree-2 element of A), ``x`` for the function variable in expansion
inputs, and ``p`` for the uniformizer in series literals like "1+p^3".
"""

from __future__ import annotations

import argparse
import ast
import json
import os
import sys
from dataclasses import dataclass

from .basis import CarlitzContext
from .digits import (DigitPermutation, act_kinfty, act_divided_power, act_sinfty,
                     rho_zp)
from .errors import CarlitzDomainError, CarlitzError, CarlitzGuardError
from .expansion import expand, expand_monic, orthogonality_sum
from .lseries import (AnglesSumSpec, DirichletSeriesOnZp, SInfinityPoint,
                      angles_deformed_coefficient, angles_power_sum,
                      extract_zeros, gamma_transform, newton_polygon,
                      sheats_check, trivial_zero_value, zeta_series)
from .measures import (DiracCombination, convolve, dirac_moments, dp_series,
                       wagner_transform)
from .padic import PadicInteger
from .polys import Poly
from .selftest import render_report, run_all
from .serialize import (encode_apoly, encode_padic, encode_ratfunc,
                        encode_series)

USAGE_EXIT = 64


@dataclass
class RunConfig:
    q: int = 2
    prec: int = 32
    dmax: int = 6
    order: int | None = None
    seed: int = 0
    fmt: str = "json"
    threads: int = 1


class CliParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(USAGE_EXIT)


# ---------------------------------------------------------------------------
# literal parsing (tiny safe expression evaluator)


def _safe_eval(node, names, lift):
    if isinstance(node, ast.Expression):
        return _safe_eval(node.body, names, lift)
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return node.value
    if isinstance(node, ast.Name):
        if node.id in names:
            return names[node.id]
        raise CarlitzDomainError(f"unknown symbol {node.id!r}")
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        val = _safe_eval(node.operand, names, lift)
        if isinstance(node.op, ast.UAdd):
            return val
        return -val if isinstance(val, int) else -lift_if_int(val, lift)
    if isinstance(node, ast.BinOp) and isinstance(node.op,
                                                  (ast.Add, ast.Sub, ast.Mult,
                                                   ast.Pow)):
        left = _safe_eval(node.left, names, lift)
        right = _safe_eval(node.right, names, lift)
        if isinstance(node.op, ast.Pow):
            if not isinstance(right, int):
                raise CarlitzDomainError("exponents must be integer literals")
            if isinstance(left, int):
                return left ** right if right >= 0 else left ** right
            return left ** right
        if isinstance(left, int) and isinstance(right, int):
            return {ast.Add: left + right, ast.Sub: left - right,
                    ast.Mult: left * right}[type(node.op)]
        left = lift_if_int(left, lift)
        right = lift_if_int(right, lift)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        return left * right
    raise CarlitzDomainError("unsupported expression syntax")


def lift_if_int(v, lift):
    return lift(v) if isinstance(v, int) else v


def parse_expr(text: str, names: dict, lift):
    text = text.strip().replace("^", "**")
    try:
        tree = ast.parse(text, mode="eval")
    except SyntaxError as exc:
        raise CarlitzDomainError(f"cannot parse {text!r}") from exc
    return lift_if_int(_safe_eval(tree, names, lift), lift)


def parse_apoly(ctx: CarlitzContext, text: str) -> Poly:
    return parse_expr(text, {"t": ctx.theta}, ctx.A.from_int)


def parse_xpoly(ctx: CarlitzContext, text: str) -> Poly:
    names = {"x": ctx.Ax.gen(), "t": ctx.Ax.constant(ctx.theta)}
    return parse_expr(text, names, ctx.Ax.from_int)


def parse_series(ctx: CarlitzContext, text: str):
    return parse_expr(text, {"p": ctx.kinf.uniformizer()}, ctx.kinf.from_int)


# ---------------------------------------------------------------------------
# subcommand handlers (each returns a JSON-ready dict)


def cmd_table(ctx, cfg, args):
    t = ctx.factorials
    t.grow(args.max)
    return {
        "q": ctx.q,
        "brackets": [encode_apoly(t.bracket(i)) for i in range(1, args.max + 1)],
        "D": [encode_apoly(t.D_at(i)) for i in range(args.max + 1)],
        "L": [encode_apoly(t.L_at(i)) for i in range(args.max + 1)],
    }


def cmd_eval(ctx, cfg, args):
    point = parse_apoly(ctx, args.at)
    value = ctx.eval_carlitz(args.family, args.index, point)
    return {
        "family": args.family,
        "index": args.index,
        "at": encode_apoly(point),
        "value": encode_apoly(value),
    }


def cmd_det(ctx, cfg, args):
    det = ctx.vandermonde_factorial(args.m)
    idx = (ctx.q ** args.m - 1) // (ctx.q - 1)
    pi = ctx.carlitz_factorial(idx)
    return {
        "m": args.m,
        "det": encode_apoly(det),
        "factorialIndex": idx,
        "factorial": encode_apoly(pi),
        "equal": det == pi,
    }


def cmd_expand(ctx, cfg, args):
    f = parse_xpoly(ctx, args.f)
    op = expand_monic if args.monic else expand
    ec = op(ctx, f, args.basis, args.m)
    return {
        "basis": args.basis,
        "m": args.m,
        "degree": ec.source_degree,
        "coeffs": [encode_ratfunc(c) for c in ec.coeffs],
    }


def cmd_ortho(ctx, cfg, args):
    value = orthogonality_sum(ctx, args.l, args.j, args.m, args.mode)
    return {"l": args.l, "j": args.j, "m": args.m, "mode": args.mode,
            "value": encode_ratfunc(value)}


def cmd_measure(ctx, cfg, args):
    order = args.order if args.order is not None else ctx.q ** 3
    if args.action == "transform":
        pts = [parse_apoly(ctx, s) for s in args.dirac.split(",")]
        mu = dirac_moments(ctx, DiracCombination(
            tuple((ctx.A.one, pt) for pt in pts)), order)
        dp = wagner_transform(mu)
        return {"kind": "dividedPower", "order": order,
                "moments": [encode_apoly(c) for c in mu.moments],
                "coeffs": [encode_apoly(c) for c in dp.coeffs]}
    if args.action == "conv":
        pts1 = [parse_apoly(ctx, s) for s in args.dirac.split(",")]
        pts2 = [parse_apoly(ctx, s) for s in args.dirac2.split(",")]
        mu = dirac_moments(ctx, DiracCombination(
            tuple((ctx.A.one, pt) for pt in pts1)), order)
        nu = dirac_moments(ctx, DiracCombination(
            tuple((ctx.A.one, pt) for pt in pts2)), order)
        out = convolve(mu, nu)
        return {"kind": "moments", "order": order,
                "moments": [encode_apoly(c) for c in out.moments]}
    raise CarlitzDomainError(f"unknown measure action {args.action!r}")


def cmd_perm(ctx, cfg, args):
    rho = DigitPermutation.parse(args.perm, ctx.q)
    if args.on == "zp":
        y = PadicInteger.from_int(args.y, ctx.q)
        out = rho_zp(rho, y)
        doc = {"on": "zp"}
        if out.is_integer():
            doc["result"] = out.to_int()
        else:
            doc["result"] = encode_padic(out)
        return doc
    if args.on == "kinfty":
        x = parse_series(ctx, args.x)
        return {"on": "kinfty", "result": encode_series(act_kinfty(rho, x))}
    if args.on == "dp":
        coeffs = [int(c) % ctx.q for c in args.dp.split(",")]
        h = dp_series(ctx.field, coeffs)
        out = act_divided_power(rho, h)
        return {"on": "dp", "result": list(out.coeffs)}
    if args.on == "sinfty":
        x = parse_series(ctx, args.x)
        s = SInfinityPoint(x, PadicInteger.from_int(args.y, ctx.q))
        out = act_sinfty(rho, s)
        return {"on": "sinfty",
                "result": {"x": encode_series(out.x), "y": encode_padic(out.y)}}
    raise CarlitzDomainError(f"unknown action target {args.on!r}")


def cmd_zeta(ctx, cfg, args):
    y = PadicInteger.from_int(args.y, ctx.q)
    exact = args.y <= 0
    Z = zeta_series(ctx, y, args.dmax, prec=None if exact else cfg.prec)
    doc = {"q": ctx.q, "y": args.y, "dmax": args.dmax,
           "z": [encode_series(z) for z in Z.coeffs]}
    if args.newton or args.zeros:
        P = newton_polygon(Z)
        doc["newton"] = {
            "vertices": [list(v) for v in P.vertices],
            "slopes": [[s.numerator, s.denominator] for s in P.slopes],
            "runs": [b - a for a, b, _ in P.segments],
            "sheats": sheats_check(P).value,
        }
        if args.zeros:
            zeros = extract_zeros(ctx, Z, P, prec=cfg.prec)
            doc["zeros"] = [{"t": encode_series(z.t), "slope": z.slope,
                             "residualValuation": z.residual_valuation}
                            for z in zeros]
    return doc


def cmd_trivzero(ctx, cfg, args):
    value = trivial_zero_value(ctx, args.i)
    return {"i": args.i, "value": encode_apoly(value), "isZero": value.is_zero()}


def cmd_angles(ctx, cfg, args):
    if args.action == "sum":
        exponents = tuple(int(m) for m in args.m.split(","))
        points = None
        if args.points:
            points = tuple(parse_series(ctx, s) for s in args.points.split(","))
        spec = AnglesSumSpec(args.d, exponents, points)
        out = angles_power_sum(ctx, spec)
        if points is None:
            terms = {",".join(map(str, e)): c for e, c in out.terms.items()}
            return {"d": args.d, "m": list(exponents), "mode": "formal",
                    "terms": dict(sorted(terms.items())), "isZero": out.is_zero()}
        return {"d": args.d, "m": list(exponents), "mode": "points",
                "value": encode_series(out)}
    if args.action == "deformed":
        indices = tuple(int(i) for i in args.indices.split(","))
        y = PadicInteger.from_int(args.y, ctx.q)
        out = angles_deformed_coefficient(ctx, args.d, y, indices,
                                          prec=None if args.y <= 0 else cfg.prec)
        return {"d": args.d, "y": args.y, "indices": list(indices),
                "value": encode_series(out)}
    raise CarlitzDomainError(f"unknown angles action {args.action!r}")


def cmd_gamma(ctx, cfg, args):
    terms = []
    for part in args.points.split(","):
        c_text, _, u_text = part.partition(":")
        terms.append((parse_series(ctx, c_text), parse_series(ctx, u_text)))
    D = DirichletSeriesOnZp(tuple(terms))
    out = gamma_transform(ctx, D, args.y, cfg.prec)
    return {"y": args.y, "value": encode_series(out)}


def cmd_selftest(ctx, cfg, args):
    results = run_all(cfg.seed)
    report = render_report(results, cfg.seed)
    if cfg.fmt == "text":
        sys.stdout.write(report)
        return None if all(r.passed for r in results) else SystemExit(1)
    doc = {"seed": cfg.seed,
           "criteria": [{"number": r.number, "name": r.name,
                         "passed": r.passed, "detail": r.detail}
                        for r in results],
           "passed": all(r.passed for r in results)}
    return doc


# ---------------------------------------------------------------------------


def _add_common(parser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--q", type=int, default=d(2))
    parser.add_argument("--modulus", type=str, default=d(None),
                        help="comma-separated base-p coefficients, ascending")
    parser.add_argument("--prec", type=int, default=d(32))
    parser.add_argument("--seed", type=int, default=d(0))
    parser.add_argument("--format", choices=("json", "text"), default=d("json"))


def build_parser() -> CliParser:
    parser = CliParser(prog="carlitz",
                       description="exact Carlitz calculus over F_q[theta]")
    _add_common(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common, suppress=True)
    sub = parser.add_subparsers(dest="command", parser_class=CliParser)

    p = sub.add_parser("table", help="bracket/factorial tables",
                       parents=[common])
    p.add_argument("--max", type=int, default=3)

    p = sub.add_parser("eval", help="evaluate a family member at an A-point",
                   parents=[common])
    p.add_argument("--family", choices=("e", "g", "G", "ghat", "Ghat"),
                   required=True)
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--at", type=str, required=True)

    p = sub.add_parser("det", help="bracket Vandermonde determinant",
                   parents=[common])
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("expand", help="expansion coefficients of a polynomial",
                   parents=[common])
    p.add_argument("--basis", choices=("g", "ghat", "G", "Ghat"), required=True)
    p.add_argument("--f", type=str, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--monic", action="store_true")

    p = sub.add_parser("ortho", help="orthogonality sums", parents=[common])
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--mode", choices=("below", "monic"), default="below")

    p = sub.add_parser("measure", help="moment sequences and their transform",
                   parents=[common])
    p.add_argument("action", choices=("transform", "conv"))
    p.add_argument("--dirac", type=str, required=True)
    p.add_argument("--dirac2", type=str)
    p.add_argument("--order", type=int, default=None)

    p = sub.add_parser("perm", help="digit-permutation actions",
                   parents=[common])
    p.add_argument("action", choices=("act",))
    p.add_argument("--perm", type=str, required=True)
    p.add_argument("--on", choices=("zp", "kinfty", "dp", "sinfty"),
                   required=True)
    p.add_argument("--y", type=int, default=0)
    p.add_argument("--x", type=str, default="1")
    p.add_argument("--dp", type=str, default="1")

    p = sub.add_parser("zeta", help="zeta coefficients, polygon, zeroes",
                   parents=[common])
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--dmax", type=int, default=6)
    p.add_argument("--newton", action="store_true")
    p.add_argument("--zeros", action="store_true")

    p = sub.add_parser("trivzero", help="exact power-sum value at -i",
                   parents=[common])
    p.add_argument("--i", type=int, required=True)

    p = sub.add_parser("angles", help="multi-variable power sums",
                   parents=[common])
    p.add_argument("action", choices=("sum", "deformed"))
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=str, default="1")
    p.add_argument("--points", type=str, default=None)
    p.add_argument("--y", type=int, default=-1)
    p.add_argument("--indices", type=str, default="0")

    p = sub.add_parser("gamma", help="one-unit power combinations on Z_p",
                   parents=[common])
    p.add_argument("--points", type=str, required=True,
                   help='comma list of "coeff:unit" series literals')
    p.add_argument("--y", type=int, required=True)

    sub.add_parser("selftest", help="run the acceptance suite",
                   parents=[common])
    return parser


_HANDLERS = {
    "table": cmd_table,
    "eval": cmd_eval,
    "det": cmd_det,
    "expand": cmd_expand,
    "ortho": cmd_ortho,
    "measure": cmd_measure,
    "perm": cmd_perm,
    "zeta": cmd_zeta,
    "trivzero": cmd_trivzero,
    "angles": cmd_angles,
    "gamma": cmd_gamma,
    "selftest": cmd_selftest,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return USAGE_EXIT
    try:
        threads = max(1, int(os.environ.get("CARLITZ_THREADS", "1")))
    except ValueError:
        threads = 1
    cfg = RunConfig(q=args.q, prec=args.prec, seed=args.seed, fmt=args.format,
                    threads=threads)
    modulus = None
    if args.modulus:
        modulus = tuple(int(c) for c in args.modulus.split(","))
    try:
        ctx = CarlitzContext(args.q, modulus=modulus)
        doc = _HANDLERS[args.command](ctx, cfg, args)
    except CarlitzGuardError as exc:
        _emit_error(exc)
        return 3
    except CarlitzDomainError as exc:
        _emit_error(exc)
        return 2
    except CarlitzError as exc:
        _emit_error(exc)
        return 2
    if isinstance(doc, SystemExit):
        return doc.code or 0
    if doc is not None:
        if cfg.fmt == "json":
            sys.stdout.write(json.dumps(doc, sort_keys=True,
                                        separators=(",", ":")) + "\n")
        else:
            sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    return 0


def _emit_error(exc: CarlitzError) -> None:
    sys.stderr.write(json.dumps({"error": exc.name, "message": str(exc)},
                                sort_keys=True) + "\n")


if __name__ == "__main__":
    sys.exit(main())
