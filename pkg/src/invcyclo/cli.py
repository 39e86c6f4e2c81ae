"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 overflow or degree
budget exceeded, 4 a verification check found a mismatch.
"""

from __future__ import annotations

import argparse
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from .coeffengine import EvalMethod, c_coeff, c_trivial_case, e_closed, trivial_case_coefficients
from .exceptions import BudgetError, DomainError
from .heightflat import h_witnesses, height_formula, is_flat, moree_bound_1996
from .numtheory import FamilyTriple, decompose_r, make_family_triple, validate_ternary
from .polyoracle import format_sparse, height_of, inverse_cyclotomic
from .search import (
    export,
    family_records,
    family_triples,
    flat_set,
    min_ratio_experiment,
    tp_family,
    trivial_triples,
)

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_BUDGET, EXIT_MISMATCH = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: error: {message}")


def _b(x: bool) -> str:
    return "1" if x else "0"


def _triple_args(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-q", type=int, required=True)
    sp.add_argument("-r", type=int, required=True)


def _cmd_coeff(args, out, err) -> int:
    method = EvalMethod(args.method)
    validate_ternary(args.p, args.q, args.r)
    if args.r > (args.p - 1) * (args.q - 1):
        print("note: r > phi(pq); using the Psi_pq(x^r)*Phi_pq(x) identity", file=err)
        print(c_trivial_case(args.p, args.q, args.r, args.m), file=out)
        return EXIT_OK
    if method is EvalMethod.ORACLE and decompose_r(args.p, args.q, args.r) is None:
        psi = inverse_cyclotomic(args.p * args.q * args.r)
        if not 0 <= args.m <= psi.degree:
            raise DomainError(f"exponent {args.m} outside [0, {psi.degree}]")
        print(psi[args.m], file=out)
        return EXIT_OK
    t = make_family_triple(args.p, args.q, args.r)
    print(c_coeff(t, args.m, method), file=out)
    return EXIT_OK


def _cmd_poly(args, out, err) -> int:
    if args.n is not None:
        if any(v is not None for v in (args.p, args.q, args.r)):
            raise UsageError("poly: give either -n or -p -q -r, not both")
        poly = inverse_cyclotomic(args.n)
    else:
        if any(v is None for v in (args.p, args.q, args.r)):
            raise UsageError("poly: need -n N or all of -p -q -r")
        validate_ternary(args.p, args.q, args.r)
        poly = inverse_cyclotomic(args.p * args.q * args.r)
    if args.dense:
        for c in poly.coeffs:
            print(c, file=out)
    else:
        print(format_sparse(poly), file=out)
    return EXIT_OK


def _cmd_height(args, out, err) -> int:
    t = make_family_triple(args.p, args.q, args.r)
    c = height_formula(t)
    if not args.verify:
        print(f"C={c}", file=out)
        return EXIT_OK
    oracle = height_of(inverse_cyclotomic(t.n))
    if oracle == c:
        print(f"C={c} verified", file=out)
        return EXIT_OK
    print(f"C={c} MISMATCH oracle={oracle}", file=out)
    return EXIT_MISMATCH


def _cmd_flat(args, out, err) -> int:
    v = is_flat(make_family_triple(args.p, args.q, args.r))
    print(f"flat={_b(v.flat)} conditions={','.join(_b(c) for c in v.conditions)}", file=out)
    return EXIT_OK


def _cmd_search(args, out, err) -> int:
    records = family_records(args.p, args.q, oracle=args.oracle) if args.all else flat_set(args.p, args.q, oracle=args.oracle)
    if args.out:
        export(records, args.format, args.out)
        print(f"wrote {len(records)} records to {args.out}", file=err)
    else:
        out.write(export(records, args.format))
    return EXIT_OK


def _cmd_family(args, out, err) -> int:
    if args.limit_t is not None:
        # Last column: p(p-3)/(p-1) * t/log t, the growth rate of #S(p, q) as t grows; not asserted.
        print("t,q,progression_primes,S_size,asymptotic", file=out)
        for t in range(1, args.limit_t + 1):
            q = t * args.p + 1
            try:
                fam = tp_family(args.p, t)
            except DomainError:
                continue
            est = args.p * (args.p - 3) / (args.p - 1) * t / math.log(t)
            print(f"{t},{q},{len(fam.primes())},{len(flat_set(args.p, q))},{est:.1f}", file=out)
        if args.p > 5:
            exp = min_ratio_experiment(args.p, args.limit_t)
            b = exp.best
            print(
                f"min ratio: ({b.p},{b.q},{b.r}) r/phi(pq)={b.ratio_num}/{b.ratio_den} "
                f"< 5/{args.p}: {_b(exp.achieved)}",
                file=out,
            )
        return EXIT_OK
    if args.t is None:
        raise UsageError("family: need -t or --limit-t")
    fam = tp_family(args.p, args.t)
    print(f"p={fam.p} t={fam.t} q={fam.q} start={fam.progression_start} step={fam.step} limit={fam.limit}", file=out)
    for t in fam.triples():
        v = is_flat(t)
        print(f"r={t.r} alpha={t.alpha} beta={t.beta} flat={_b(v.flat)} cond_d={_b(v.cond_d)}", file=out)
    return EXIT_OK


def check_family_triple(t: FamilyTriple) -> list[str]:
    """Cross-engine checks for one family triple; returns human-readable failures."""
    failures = []
    psi = inverse_cyclotomic(t.n)
    if psi.degree != t.deg_psi:
        failures.append(f"({t.p},{t.q},{t.r}) degree {psi.degree} != {t.deg_psi}")
    for m in range(t.deg_psi + 1):
        fast = c_coeff(t, m, EvalMethod.CLOSED_FORM)
        summ = c_coeff(t, m, EvalMethod.SUMMATION)
        if not fast == summ == psi[m]:
            failures.append(f"({t.p},{t.q},{t.r},{m}) fast={fast} sum={summ} oracle={psi[m]}")
        if abs(fast) > t.p - 1:
            failures.append(f"({t.p},{t.q},{t.r},{m}) |c|={abs(fast)} > p-1")
    for m in range(t.tau + 1):
        if e_closed(t, m) != e_closed(t, t.tau - m):
            failures.append(f"({t.p},{t.q},{t.r},{m}) f not reciprocal")
    c = height_formula(t)
    if height_of(psi) != c:
        failures.append(f"({t.p},{t.q},{t.r}) height oracle={height_of(psi)} formula={c}")
    if is_flat(t).flat != (c == 1):
        failures.append(f"({t.p},{t.q},{t.r}) flatness verdict disagrees with height {c}")
    bound = moree_bound_1996(t)
    if bound is not None and c > bound:
        failures.append(f"({t.p},{t.q},{t.r}) height {c} exceeds Moree bound {bound}")
    try:
        h_witnesses(t, verify=True)
    except AssertionError as exc:
        failures.append(str(exc))
    return failures


def check_trivial_triple(p: int, q: int, r: int) -> list[str]:
    psi = inverse_cyclotomic(p * q * r)
    got = trivial_case_coefficients(p, q, r)
    return [
        f"({p},{q},{r},{m}) trivial={c} oracle={psi[m]}"
        for m, c in enumerate(got)
        if c != psi[m]
    ]


def _verify_item(item) -> list[str]:
    kind, args = item
    if kind == "family":
        return check_family_triple(make_family_triple(*args))
    return check_trivial_triple(*args)


def _cmd_verify(args, out, err) -> int:
    items = [("family", (t.p, t.q, t.r)) for t in family_triples(args.max_pqr)]
    items += [("trivial", pqr) for pqr in trivial_triples(args.max_pqr)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_verify_item, items, chunksize=8))
    else:
        results = [_verify_item(it) for it in items]
    failures = [f for res in results for f in res]
    for f in failures:
        print(f"MISMATCH {f}", file=out)
    n_family = sum(1 for kind, _ in items if kind == "family")
    print(
        f"checked {n_family} family triples and {len(items) - n_family} trivial-case triples "
        f"with pqr <= {args.max_pqr}: {'FAIL' if failures else 'OK'}",
        file=out,
    )
    return EXIT_MISMATCH if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="invcyclo", description="Coefficients, heights and flatness of inverse ternary cyclotomic polynomials.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("coeff", help="one coefficient of Psi_pqr")
    _triple_args(sp)
    sp.add_argument("-m", type=int, required=True)
    sp.add_argument("--method", choices=[m.value for m in EvalMethod], default="fast")
    sp.set_defaults(func=_cmd_coeff)

    sp = sub.add_parser("poly", help="expand Psi_n")
    sp.add_argument("-n", type=int)
    sp.add_argument("-p", type=int)
    sp.add_argument("-q", type=int)
    sp.add_argument("-r", type=int)
    sp.add_argument("--dense", action="store_true", help="one coefficient per line")
    sp.set_defaults(func=_cmd_poly)

    sp = sub.add_parser("height", help="height of Psi_pqr by formula")
    _triple_args(sp)
    sp.add_argument("--verify", action="store_true", help="compare with the expanded polynomial")
    sp.set_defaults(func=_cmd_height)

    sp = sub.add_parser("flat", help="flatness verdict and conditions (a)-(d)")
    _triple_args(sp)
    sp.set_defaults(func=_cmd_flat)

    sp = sub.add_parser("search", help="flat set S(p, q)")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-q", type=int, required=True)
    sp.add_argument("--format", choices=["csv", "json"], default="csv")
    sp.add_argument("--out")
    sp.add_argument("--oracle", action="store_true", help="also record the expanded polynomial's height")
    sp.add_argument("--all", action="store_true", help="include non-flat family members")
    sp.set_defaults(func=_cmd_search)

    sp = sub.add_parser("family", help="the q = tp + 1 construction")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-t", type=int)
    sp.add_argument("--limit-t", type=int, help="tabulate every t up to this value")
    sp.set_defaults(func=_cmd_family)

    sp = sub.add_parser("verify", help="cross-check every engine on all triples up to a bound")
    sp.add_argument("--max-pqr", type=int, required=True)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=_cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out, err)
    except UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except (BudgetError, OverflowError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_BUDGET
    except DomainError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())
