"""Command line interface.

Exit codes: 0 success, 2 parse/validation error, 3 resource cap,
4 theorem-violation forensic abort.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from .charzero import multiplier_profile
from .cohomology import check_key_proposition, frobenius_matrix
from .errors import (
    FrobscanError,
    ParseError,
    ResourceLimitError,
    TheoremViolationError,
    ValidationError,
)
from .frobenius import FrobeniusLevel, frobenius_root_ideal
from .ideals import HomogeneousIdeal
from .model import parse_model
from .polynomial import parse_polynomial, reduce_mod_p
from .scan import ScanOptions, emit_report, scan
from .testideal import fedder_root, parse_exponent, test_ideal


def _poly_arg(text, p):
    return parse_polynomial(text, p=p)


def _print_ideal(I):
    if I.is_unit:
        print("(1)  [unit ideal]")
        return
    for g in I.generators:
        print(g)


def _cmd_frob_root(args):
    f = _poly_arg(args.poly, args.p)
    I = frobenius_root_ideal(HomogeneousIdeal(f.nvars, args.p, [f]),
                             FrobeniusLevel(args.p, args.e))
    _print_ideal(I)
    return 0


def _cmd_test_ideal(args):
    f = _poly_arg(args.poly, args.p)
    lam = parse_exponent(args.lam)
    res = test_ideal(f, lam, e_max=args.e_max)
    print(f"status: {res.status} (e* = {res.stabilized_at})")
    print(f"chain: {res.chain_trace}")
    _print_ideal(res.ideal)
    return 0


def _cmd_fedder(args):
    f = _poly_arg(args.poly, args.p)
    _print_ideal(fedder_root(f))
    return 0


def _hasse_witt_for(gs):
    fm = frobenius_matrix(gs)
    print(f"subspace dimension: {fm.matrix.shape[0]}")
    for row in fm.matrix.tolist():
        print(" ".join(str(x) for x in row))
    print(f"determinant: {fm.determinant}")
    print(f"bijective: {fm.bijective}")
    return fm


def _cmd_hasse_witt(args):
    if os.path.exists(args.target):
        with open(args.target) as fh:
            model = parse_model(fh.read())
        gs = [reduce_mod_p(g, args.p) for g in model.combinations]
        print(f"# complete intersection V(g1..g{model.r}) mod {args.p}")
        _hasse_witt_for(gs)
        print(f"# hypersurface V(h) mod {args.p}")
        _hasse_witt_for([reduce_mod_p(model.product, args.p)])
    else:
        _hasse_witt_for([_poly_arg(args.target, args.p)])
    return 0


def _cmd_check_prop(args):
    h = _poly_arg(args.poly, args.p)
    res = check_key_proposition(h)
    print(f"hypothesis (m^(d-N-1) in fedder root): {res.hypothesis}")
    print(f"conclusion (Frobenius bijective):      {res.conclusion}")
    print(f"consistent: {res.consistent}")
    return 0 if res.consistent else 4


def _cmd_scan(args):
    with open(args.model_file) as fh:
        model = parse_model(fh.read())
    options = ScanOptions(jobs=args.jobs,
                          mu=parse_exponent(args.mu) if args.mu else None)
    reports = scan(model, args.primes, options)
    sys.stdout.write(emit_report(reports, args.format, include_timing=args.timings))
    return 0


def _cmd_profile(args):
    prof = multiplier_profile(args.N, args.r)
    print(f"multiplier ideals of {args.r} general quadric combinations "
          f"in P^{args.N} (exponent < r):")
    print(prof.table())
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="frobscan",
        description="Exact Frobenius-root / test-ideal computations and "
                    "mod-p ordinarity scans.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("frob-root", help="Frobenius root of a polynomial ideal")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-e", type=int, default=1)
    sp.add_argument("poly")
    sp.set_defaults(func=_cmd_frob_root)

    sp = sub.add_parser("test-ideal", help="test ideal by chain stabilization")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("--lambda", dest="lam", required=True, metavar="a/b")
    sp.add_argument("--e-max", type=int, default=3)
    sp.add_argument("poly")
    sp.set_defaults(func=_cmd_test_ideal)

    sp = sub.add_parser("fedder", help="(h^(p-1))^[1/p]")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("poly")
    sp.set_defaults(func=_cmd_fedder)

    sp = sub.add_parser("hasse-witt", help="twisted Frobenius matrix")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("target", metavar="file|poly")
    sp.set_defaults(func=_cmd_hasse_witt)

    sp = sub.add_parser("check-prop", help="containment => bijectivity instance")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("poly")
    sp.set_defaults(func=_cmd_check_prop)

    sp = sub.add_parser("scan", help="per-prime conjecture experiment")
    sp.add_argument("--primes", type=int, required=True, metavar="B")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--format", choices=["json", "csv", "table"], default="table")
    sp.add_argument("--mu", metavar="a/b", default=None)
    sp.add_argument("--timings", action="store_true")
    sp.add_argument("model_file")
    sp.set_defaults(func=_cmd_scan)

    sp = sub.add_parser("profile", help="multiplier-ideal profile table")
    sp.add_argument("-N", type=int, required=True)
    sp.add_argument("-r", type=int, required=True)
    sp.set_defaults(func=_cmd_profile)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ValidationError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3
    except TheoremViolationError as exc:
        print(f"THEOREM VIOLATION: {exc}", file=sys.stderr)
        print(json.dumps(exc.dump, indent=2, default=str), file=sys.stderr)
        return 4
    except FrobscanError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
