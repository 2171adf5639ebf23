"""Command line front end.

Exit codes: 0 verified, 1 hypotheses rejected, 2 usage error,
3 internal inconsistency (a checked bound failed under verified hypotheses).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import bounds, families, mason, search
from .exact_fields import QQ, ReducibleModulusError, nf_make
from .expr import ParseError, format_poly, parse_poly
from .poly import Polynomial, radical_poly, rstar
from .serialize import SCHEMA_VERSION, to_jsonable
from .wronskian import lin_indep, wronskian_det

EXIT_OK, EXIT_REJECTED, EXIT_USAGE, EXIT_INCONSISTENT = 0, 1, 2, 3

WORKERS_ENV = "POLYTAXI_WORKERS"

FIELD_ALIASES = {
    "gaussian": (1, 0, 1),
    "zeta8": (1, 0, 0, 0, 1),
    "quartic": families.Q_ALPHA_MIN_POLY,
}


class UsageError(Exception):
    pass


def _field(text):
    if text is None:
        return QQ
    coeffs = FIELD_ALIASES.get(text)
    if coeffs is None:
        try:
            coeffs = tuple(int(c) for c in text.split(","))
        except ValueError:
            raise UsageError(f"--field expects comma-separated integers (lowest degree first), got {text!r}")
    try:
        return nf_make(coeffs)
    except (ValueError, ReducibleModulusError) as exc:
        raise UsageError(f"bad --field: {exc}")


def _polys(texts, fld):
    return [parse_poly(t, fld) for t in texts]


def _scalar(text, fld):
    p = parse_poly(text, fld)
    if p.deg > 0:
        raise UsageError(f"expected a constant, got {text!r}")
    return p[0] if p else fld.zero


def _emit(obj):
    print(json.dumps(to_jsonable(obj), indent=2))


def _status(report):
    return EXIT_OK if report.hypotheses_ok else EXIT_REJECTED


def _default_workers():
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


# -- subcommands --------------------------------------------------------------

def cmd_radical(args):
    fld = _field(args.field)
    p = parse_poly(args.p, fld)
    if not p:
        raise UsageError("radical of the zero polynomial is undefined")
    rad = radical_poly(p)
    _emit({"schema_version": SCHEMA_VERSION, "kind": "radical", "p": p, "radical": rad,
           "radical_text": format_poly(rad), "r_star": rstar(p)})
    return EXIT_OK


def cmd_wronskian(args):
    fld = _field(args.field)
    fs = _polys(args.f, fld)
    W = wronskian_det(fs)
    _emit({"schema_version": SCHEMA_VERSION, "kind": "wronskian", "det": W, "det_text": format_poly(W),
           "linearly_independent": lin_indep(fs)})
    return EXIT_OK


def cmd_mason(args):
    fld = _field(args.field)
    f, g, h = _polys([args.f, args.g, args.h], fld)
    rep = mason.mason_check(f, g, h)
    _emit(rep)
    return _status(rep)


def cmd_ss(args):
    rep = mason.shapiro_sparer_check(_polys(args.f, _field(args.field)))
    _emit(rep)
    return _status(rep)


def cmd_debondt(args):
    fs = _polys(args.f, _field(args.field))
    # both bounds side by side; a rejection of either is reported, not fatal
    db = mason.debondt_check(fs)
    ss = mason.shapiro_sparer_check(fs)
    _emit({"debondt": db, "shapiro_sparer": ss})
    return _status(db)


def cmd_fermat(args):
    fld = _field(args.field)
    a, b, c = _polys([args.a, args.b, args.c], fld)
    rep = mason.fermat_witness(a, b, c, args.n)
    _emit(rep)
    return _status(rep)


def cmd_two_term(args):
    if args.euler:
        rec = families.euler_quartic()
        p, q, r, s = rec.polys
        n = 4 if args.n is None else args.n
    elif args.example41:
        rec = families.quartic_field_example()
        p, q, r, s = rec.polys
        n = 4 if args.n is None else args.n
    elif args.lehmer:
        sign = 1 if args.lehmer == "+" else -1
        x, y, z, one = families.lehmer_family(sign).polys
        # x^3 + y^3 = z^3 + sign
        p, q, r, s = x, y, z, one * sign
        n = 3 if args.n is None else args.n
    else:
        if None in (args.p, args.q, args.r, args.s) or args.n is None:
            raise UsageError("give --p --q --r --s --n or one of --euler, --example41, --lehmer")
        fld = _field(args.field)
        p, q, r, s = _polys([args.p, args.q, args.r, args.s], fld)
        n = args.n
    cert = bounds.two_term_certificate(p, q, r, s, n)
    _emit(cert)
    return _status(cert)


def _zero_sum_preset(name):
    if name == "pythagorean":
        F = nf_make(FIELD_ALIASES["gaussian"])
        x = Polynomial.x(F)
        return [x**2 - 1, x * 2, (x**2 + 1) * F.gen], [2, 2, 2], None
    if name == "euler-zeta8":
        F = nf_make(FIELD_ALIASES["zeta8"])
        p, q, r, s = (Polynomial([F(c) for c in P.coeffs], F) for P in families.euler_quartic().polys)
        z = F.gen
        # zeta^4 = -1 moves r^4 + s^4 to the left side
        return [p, q, r * z, s * z], [4] * 4, None
    if name.startswith("linear"):
        m = int(name[len("linear"):] or 5)
        rec = families.linear_power_family(list(range(m)))
        return rec.polys, rec.exponents, rec.weights
    raise UsageError(f"unknown preset {name!r}")


def cmd_zero_sum(args):
    if args.preset:
        ps, ks, ws = _zero_sum_preset(args.preset)
    else:
        if not args.p or not args.k:
            raise UsageError("give --p and --k (repeated) or --preset")
        fld = _field(args.field)
        ps = _polys(args.p, fld)
        ks = args.k if len(args.k) > 1 else args.k * len(ps)
        ws = [_scalar(w, fld) for w in args.w] if args.w else None
    cert = bounds.zero_sum_certificate(ps, ks, ws)
    _emit(cert)
    return _status(cert)


def cmd_equal_exponent(args):
    ps = _polys(args.p, _field(args.field))
    rep = bounds.equal_exponent_check(ps, args.k)
    _emit(rep)
    return _status(rep)


def cmd_coprime_sums(args):
    fld = _field(args.field)
    rep = bounds.coprime_sums_check(_polys(args.f, fld), _polys(args.g, fld), args.n)
    _emit(rep)
    return _status(rep)


def cmd_gen_family(args):
    kind = args.family
    if kind in ("lehmer+", "lehmer-"):
        _emit(families.lehmer_family(1 if kind == "lehmer+" else -1))
    elif kind == "euler":
        _emit(families.euler_quartic())
    elif kind == "example41":
        _emit(families.quartic_field_example())
    elif kind == "crt":
        fld = _field(args.field)
        fs = _polys(args.f or ["x", "1", "-x-1"], fld)
        ks = args.k or [2, 3, 5]
        try:
            res = families.crt_construct(fs, ks)
        except mason.HypothesisError as exc:
            print(f"crt: {exc}", file=sys.stderr)
            return EXIT_REJECTED
        _emit(res)
    elif kind == "abc":
        lo, hi = args.alpha, args.alpha_max if args.alpha_max is not None else args.alpha
        if lo is None:
            raise UsageError("abc needs --alpha")
        writer = csv.writer(sys.stdout, lineterminator="\n")
        if args.header:
            writer.writerow(["alpha", "a", "b", "c", "rad", "quality"])
        for alpha in range(lo, hi + 1):
            writer.writerow(families.abc_family(alpha).as_row())
    return EXIT_OK


def cmd_elkies(args):
    workers = args.workers or _default_workers()
    hits = families.elkies_scan(args.limit, args.n_lo, args.n_hi, workers=workers)
    for A, B, C, n, sign in hits:
        print(json.dumps({"A": A, "B": B, "C": C, "n": n, "sign": sign}))
    print(f"elkies-scan: {len(hits)} solutions", file=sys.stderr)
    return EXIT_OK


def cmd_taxicab(args):
    res = search.taxicab_int(args.n, args.k, args.j, args.limit)
    _emit(res)
    return EXIT_OK


def cmd_poly_search(args):
    box = search.SearchBox(args.n, args.max_degree, args.coeff_bound, args.max_terms)
    workers = args.workers or _default_workers()
    res = search.poly_taxicab_search(box, seed=args.seed, workers=workers)
    for rec in res.records:
        line = rec.to_dict()
        line["text"] = [format_poly(p) for p in rec.polys]
        print(json.dumps(line))
    return EXIT_OK


# -- parser -------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="number field: minimal polynomial coefficients, lowest "
                        "degree first (e.g. 1,0,1), or one of " + ", ".join(FIELD_ALIASES))
    common.add_argument("--seed", type=int, default=0x5EED, help="seed for randomized steps")

    ap = argparse.ArgumentParser(prog="polytaxi", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=func)
        return sp

    sp = add("radical", cmd_radical, "radical and r* of a polynomial")
    sp.add_argument("--p", required=True)

    sp = add("wronskian", cmd_wronskian, "Wronskian determinant of polynomials")
    sp.add_argument("--f", action="append", required=True)

    sp = add("mason-check", cmd_mason, "check max deg <= r*(fgh) - 1 for f + g = h")
    for name in ("--f", "--g", "--h"):
        sp.add_argument(name, required=True)

    sp = add("ss-check", cmd_ss, "pairwise coprime zero-sum degree bound")
    sp.add_argument("--f", action="append", required=True)

    sp = add("debondt-check", cmd_debondt, "zero-sum bound with coprime vanishing subsums")
    sp.add_argument("--f", action="append", required=True)

    sp = add("fermat", cmd_fermat, "a^n + b^n = c^n has no coprime nonconstant solution")
    for name in ("--a", "--b", "--c"):
        sp.add_argument(name, required=True)
    sp.add_argument("--n", type=int, required=True)

    sp = add("thm21", cmd_two_term, "certificate for p^n + q^n = r^n + s^n")
    for name in ("--p", "--q", "--r", "--s"):
        sp.add_argument(name)
    sp.add_argument("--n", type=int)
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--euler", action="store_true", help="Euler's quartic identity")
    group.add_argument("--example41", action="store_true", help="the quartic identity over Q(2^(1/4)+i)")
    group.add_argument("--lehmer", choices=["+", "-"], help="Lehmer cubic family")

    sp = add("thm23", cmd_zero_sum, "certificate for sum w_i p_i^k_i = 0")
    sp.add_argument("--p", action="append")
    sp.add_argument("--k", type=int, action="append", help="one exponent per --p, or a single shared one")
    sp.add_argument("--w", action="append", help="weights (default 1)")
    sp.add_argument("--preset", help="pythagorean, euler-zeta8 or linearM (e.g. linear5)")

    sp = add("cor24", cmd_equal_exponent, "sum p_i^k = 0 with non-proportional p_i")
    sp.add_argument("--p", action="append", required=True)
    sp.add_argument("--k", type=int, required=True)

    sp = add("thm35", cmd_coprime_sums, "sum f_i^n = sum g_i^n for pairwise coprime inputs")
    sp.add_argument("--f", action="append", required=True)
    sp.add_argument("--g", action="append", required=True)
    sp.add_argument("--n", type=int, required=True)

    sp = add("gen-family", cmd_gen_family, "emit an explicit identity family")
    sp.add_argument("family", choices=["lehmer+", "lehmer-", "euler", "example41", "crt", "abc"])
    sp.add_argument("--f", action="append", help="crt: summands of f_1 + ... + f_m = 0")
    sp.add_argument("--k", type=int, action="append", help="crt: pairwise coprime exponents")
    sp.add_argument("--alpha", type=int, help="abc: parameter (or first of a range)")
    sp.add_argument("--alpha-max", type=int, help="abc: last parameter of a range")
    sp.add_argument("--header", action="store_true", help="abc: print a CSV header")

    sp = add("elkies-scan", cmd_elkies, "A^n + B^n = C^n +- 1 in a box")
    sp.add_argument("--limit", type=int, default=500)
    sp.add_argument("--n-lo", type=int, default=3)
    sp.add_argument("--n-hi", type=int, default=12)
    sp.add_argument("--workers", type=int, help=f"process count (default ${WORKERS_ENV} or 1)")

    sp = add("taxicab", cmd_taxicab, "smallest sum of k n-th powers in j ways")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--j", type=int, default=2)
    sp.add_argument("--limit", type=int, required=True)

    sp = add("poly-search", cmd_poly_search, "search p^n + q^n = r^n + s^n in a coefficient box")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--max-degree", type=int, required=True)
    sp.add_argument("--coeff-bound", type=int, required=True)
    sp.add_argument("--max-terms", type=int, required=True)
    sp.add_argument("--workers", type=int, help=f"process count (default ${WORKERS_ENV} or 1)")
    return ap


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except mason.InconsistencyError as exc:
        if exc.report is not None:
            _emit(exc.report)
        print(f"INCONSISTENCY: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except mason.HypothesisError as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return EXIT_REJECTED
    except (UsageError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
