"""Command-line interface: ``weylfc <command> [options]``.

Exit status is 0 when every check passes, 1 when a verification fails and
2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import ahyp
from .errors import WeylFCError
from .lauricella import characteristic, identities, puiseux, singular
from .lauricella.operators import KINDS, L_prime, ParamSet, ell_prime, groebner_family_T, make_operator
from .parser import parse_operator
from .report import Check, VerificationReport
from .weyl_gb import WeylOrder, is_weyl_groebner, weyl_buchberger

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
SUITES = ("spair", "commutation", "syzygy", "all")


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def _rational_list(text: str) -> list[Fraction]:
    return [_rational(t.strip()) for t in text.split(",") if t.strip()]


def params_from_args(args) -> ParamSet:
    """Symbolic when a, b and c are all omitted; rational when all are given."""
    given = [args.a is not None, args.b is not None, args.ci is not None]
    if not any(given):
        return ParamSet.symbolic(args.m)
    if not all(given):
        raise UsageError("give all of --a, --b and --ci, or none of them")
    if len(args.ci) != args.m:
        raise UsageError(f"--ci needs {args.m} values, got {len(args.ci)}")
    return ParamSet.rational(args.m, args.a, args.b, args.ci)


def _params_meta(P: ParamSet):
    return "symbolic" if P.is_symbolic else {k: str(v) for k, v in P.values().items()}


def _new_report(args, P: ParamSet | None = None, **extra) -> VerificationReport:
    run = {"command": args.command, "m": args.m}
    if P is not None:
        run["params"] = _params_meta(P)
    run.update(extra)
    return VerificationReport(run)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_generate(args) -> VerificationReport:
    P = params_from_args(args)
    rep = _new_report(args, P, kind=args.kind, i=args.i, j=args.j)
    rep.result["operator"] = str(make_operator(args.kind, P, args.i, args.j))
    return rep


def cmd_groebner(args) -> VerificationReport:
    P = params_from_args(args)
    order = WeylOrder.by_name(args.order, args.m)
    if args.expr:
        gens = [parse_operator(e, n=args.m, homogenized=args.order == "km") for e in args.expr]
        family = "expr"
    elif args.order == "km":
        gens, family = groebner_family_T(P), "T"
    else:
        gens, family = [ell_prime(P, i) for i in range(1, args.m + 1)], "ell_prime"
    rep = _new_report(args, P, order=args.order, family=family)
    basis = weyl_buchberger(gens, order)
    rep.result["basis"] = [str(g) for g in basis]
    ok, bad = is_weyl_groebner(basis, order)
    rep.add(Check("all S-pairs reduce to 0", ok, {"unreduced_pairs": bad} if bad else {}))
    if family != "expr":
        rep.add(Check("input is already a Groebner basis", len(basis) == len(gens), {"added": len(basis) - len(gens)}))
    return rep


def cmd_char_ideal(args) -> VerificationReport:
    P = params_from_args(args)
    rep = _new_report(args, P, seed=args.seed)
    gens = characteristic.char_ideal_torus(args.m, P)
    rep.result["torus_generators"] = [str(g) for g in gens]
    expected = [L_prime(args.m, i) for i in range(1, args.m + 1)]
    rep.add(Check("generators are y_i(y_i xi_i)^2 - (sum y_j xi_j)^2", gens == expected))
    draws = characteristic.holonomic_dimension_check(args.m, args.seed)
    for k, d in enumerate(draws, start=1):
        detail = {"params": {n: str(v) for n, v in d.params.items()}, "dimension": d.dimension,
                  "torus_dimension": d.torus_dimension}
        rep.add(Check(f"dim V(<L_i>) == m (draw {k})", d.dimension == args.m and d.symbols_match, detail))
    rep.add(Check("random draws agree", len({d.dimension for d in draws}) == 1))
    if args.m <= 3:
        rep.add(Check("x- and y-chart ideals agree after saturation by x_1...x_m",
                      characteristic.torus_agreement(args.m, P)))
    rep.result["note"] = "dimension is computed at random rational parameters (generic values)"
    return rep


def cmd_sing_locus(args) -> VerificationReport:
    rep = _new_report(args)
    m = args.m
    rep.result["polynomial"] = str(singular.singular_locus_poly(m))
    rep.result["coordinate_component"] = str(singular.coordinate_component(m))
    bad = [e for e in singular.sign_vectors(m) if singular.coeff_matrix_det(m, e) != singular.det_closed_form(m, e)]
    rep.add(Check("det M(eps) == x_1...x_m (1 + sum eps_j sqrt(x_j)) for every eps", not bad,
                  {"failing": [list(e) for e in bad]} if bad else {}))
    if m <= 3:
        rep.add(Check("determinant route gives the same polynomial",
                      singular.singular_locus_via_det(m) == singular.singular_locus_poly(m)))
    return rep


def cmd_point_test(args) -> VerificationReport:
    if args.point is None:
        raise UsageError("point-test needs --point")
    if len(args.point) != args.m:
        raise UsageError(f"--point needs {args.m} coordinates")
    res = singular.singular_point_test(args.m, args.point)
    rep = _new_report(args, point=[str(v) for v in res.point])
    rep.result.update(
        member=res.member, vanishing=res.vanishing, polynomial_value=str(res.polynomial_value)
    )
    return rep


def cmd_verify_identities(args) -> VerificationReport:
    P = params_from_args(args)
    corrected = args.variant == "corrected"
    rep = _new_report(args, P, suite=args.suite, variant=args.variant)
    m = args.m
    if args.suite in ("commutation", "all"):
        if m < 2:
            raise UsageError("the commutation relation needs m >= 2")
        form = "corrected" if corrected else "stated"
        for i, j in combinations(range(1, m + 1), 2):
            rep.add(identities.verify_commutation(m, i, j, P, form=form))
        for i, j in combinations(range(1, m + 1), 2):
            rep.add(identities.y_standard_rep(P, i, j, -1 if corrected else 1))
    if args.suite in ("spair", "all"):
        rep.extend(identities.verify_spair_suite(m, P, completed=corrected))
    if args.suite in ("syzygy", "all"):
        if m < 2:
            raise UsageError("syzygies need m >= 2")
        rep.extend(identities.syzygy_suite(m, P, completed=corrected))
    return rep


def cmd_rank(args) -> VerificationReport:
    rep = _new_report(args)
    m = args.m
    rank = ahyp.rank_via_degree(m)
    rep.result["rank"] = rank
    rep.add(Check("rank == 2^m", rank == 2**m, {"rank": rank}))
    rep.add(Check("I_A is generated by d_j d_-j - d_{m+1} d_-(m+1)", ahyp.toric_matches_generators(m)))
    return rep


def cmd_irreducible(args) -> VerificationReport:
    P = params_from_args(args)
    if P.is_symbolic:
        raise UsageError("irreducible needs rational --a, --b and --ci")
    res = ahyp.irreducibility_check(P)
    rep = _new_report(args, P)
    rep.result["beta"] = [str(v) for v in res.beta]
    rep.result["irreducible"] = res.irreducible
    rep.result["P_J"] = [
        f"J={{{','.join(map(str, sorted(J)))}}}: {v}" for J, v in res.values.items()
    ]
    rep.result["integral_subsets"] = [sorted(J) for J in res.integral_subsets]
    # the displayed eps-form is informational; P_J decides
    rep.result["displayed_form_irreducible"] = res.displayed_irreducible
    rep.result["displayed_form_agrees"] = res.forms_agree
    return rep


def cmd_check_example(args) -> VerificationReport:
    rep = VerificationReport({"command": args.command, "m": 2, "params": {"a": "-1/2", "b": "-2", "c1": "1/2", "c2": "1/2"}})
    rep.extend(puiseux.check_example_solutions())
    return rep


def cmd_parse(args) -> VerificationReport:
    if args.expr is None or len(args.expr) != 1:
        raise UsageError("parse needs exactly one --expr")
    text = args.expr[0]
    homog = True if args.homogenized else None
    p = parse_operator(text, n=args.m_explicit, homogenized=homog)
    rep = _new_report(args, n=p.ctx.n, homogenized=p.ctx.homogenized)
    rep.run["m"] = p.ctx.n
    rep.result["normal_form"] = str(p)
    again = parse_operator(str(p), ctx=p.ctx)
    rep.add(Check("format/parse round trip", again == p))
    return rep


COMMANDS = {
    "generate": cmd_generate,
    "groebner": cmd_groebner,
    "char-ideal": cmd_char_ideal,
    "sing-locus": cmd_sing_locus,
    "point-test": cmd_point_test,
    "verify-identities": cmd_verify_identities,
    "rank": cmd_rank,
    "irreducible": cmd_irreducible,
    "check-example": cmd_check_example,
    "parse": cmd_parse,
}


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, default=None, help="number of variables (default 2)")
    common.add_argument("--a", type=_rational, help="parameter a (exact rational)")
    common.add_argument("--b", type=_rational, help="parameter b (exact rational)")
    common.add_argument("--ci", type=_rational_list, help="comma-separated c_1,...,c_m")
    common.add_argument("--order", choices=("w", "km", "lex"), default="w")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("text", "structured"), default="text")

    parser = argparse.ArgumentParser(prog="weylfc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name == "generate":
            sp.add_argument("--kind", choices=KINDS, required=True)
            sp.add_argument("--i", type=int)
            sp.add_argument("--j", type=int)
        if name in ("groebner", "parse"):
            sp.add_argument("--expr", action="append", help="operator expression (repeatable)")
        if name == "parse":
            sp.add_argument("--homogenized", action="store_true")
        if name == "point-test":
            sp.add_argument("--point", type=_rational_list, help="comma-separated coordinates")
        if name == "verify-identities":
            sp.add_argument("--suite", choices=SUITES, default="all")
            sp.add_argument("--variant", choices=("stated", "corrected"), default="stated")
    return parser


_VALUE_FLAGS = ("--a", "--b", "--ci", "--point", "--expr")


def _join_signed_values(argv: Sequence[str]) -> list[str]:
    """Rewrite ``--a -1/2`` as ``--a=-1/2``; argparse reads "-1/2" as an option."""
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            if nxt is not None and nxt.startswith("-") and not nxt.startswith("--"):
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(tok)
    return out


def run_command(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    argv = _join_signed_values(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    args.m_explicit = args.m
    if args.m is None:
        args.m = 2
    if args.m < 1:
        print("error: --m must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        rep = COMMANDS[args.command](args)
    except (UsageError, WeylFCError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out.write(rep.to_json() if args.format == "structured" else rep.to_text())
    return EXIT_OK if rep.passed else EXIT_FAIL


def main() -> None:
    sys.exit(run_command())
