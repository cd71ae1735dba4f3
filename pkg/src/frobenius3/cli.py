"""Command-line front end: compute, least-multiple, verify, bench.

Exit codes: 0 success, 1 usage error, 2 invalid input, 3 internal
invariant violation, 4 verification mismatch, 5 I/O error.
"""

import argparse
import json
import math
import sys

from .bench import BenchConfig, run_bench, summary_text
from .errors import InvalidInputError, InvariantViolation
from .oracle import NONNEG, POSITIVE, oracle_frobenius, oracle_least_multiple
from .solver import frobenius, least_multiples_all, result_to_json, validate_triple
from .walk import WalkInput, find_least_multiple, trace_table, trace_to_json

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID_INPUT = 2
EXIT_INVARIANT = 3
EXIT_MISMATCH = 4
EXIT_IO = 5


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; our contract reserves 2 for invalid input
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def parse_bigint(text: str) -> int:
    """Base-10 integer of arbitrary length; leading zeros and signs rejected."""
    if not text.isdigit():
        raise InvalidInputError(f"not a decimal integer: {text!r}")
    if len(text) > 1 and text[0] == "0":
        raise InvalidInputError(f"leading zeros not allowed: {text!r}")
    return int(text)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="frob3", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="Frobenius number of three generators")
    p.add_argument("generators", nargs=3, metavar="N")
    p.add_argument("--json", action="store_true")
    p.add_argument("--certificate", action="store_true",
                   help="also print the least-multiple identities and decompositions")

    p = sub.add_parser("least-multiple",
                       help="least m with m*target = u*x + w*y, u,w >= 1")
    p.add_argument("target", metavar="TARGET")
    p.add_argument("--pair", nargs=2, required=True, metavar=("X", "Y"))
    p.add_argument("--trace", action="store_true", help="print the k/p/v walk table")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="exhaustively compare fast path against the oracle")
    p.add_argument("--max", type=int, required=True, metavar="N",
                   help="check all valid triples with largest generator <= N (N >= 10)")

    p = sub.add_parser("bench", help="step-count/timing benchmark on random triples")
    p.add_argument("--digits", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", metavar="PATH")
    p.add_argument("--json", action="store_true", help="print the summary as JSON")
    p.add_argument("--full-values", action="store_true",
                   help="include full generator values in the CSV")
    return parser


def cmd_compute(args) -> int:
    vals = [parse_bigint(s) for s in args.generators]
    res = frobenius(*vals)
    if args.json:
        print(json.dumps(result_to_json(res), indent=2))
        return EXIT_OK
    print(f"input: {res.a1} {res.a2} {res.a3}")
    if res.degenerate:
        print(f"note: {res.a3} is a positive combination of {res.a1} and {res.a2}; "
              f"reduced to the two-generator formula")
        print(f"g     = {res.g}")
        print(f"f_pos = {res.f_pos}")
        return EXIT_OK
    print(f"g     = {res.g}")
    print(f"f_pos = {res.f_pos}")
    print(f"candidates: A = {res.candidate_a}, B = {res.candidate_b}")
    if args.certificate:
        print("least multiples:")
        for c in res.certificates:
            print(f"  {c.m}·{c.target} = {c.u}·{c.pair_a} + {c.w}·{c.pair_c}")
        print("decompositions of f_pos:")
        for d in res.decompositions:
            print(f"  {res.f_pos} = {d.multiplier}·{d.generator} "
                  f"+ {d.partner_coeff}·{d.partner}")
    return EXIT_OK


def cmd_least_multiple(args) -> int:
    target = parse_bigint(args.target)
    x, y = (parse_bigint(s) for s in args.pair)
    inp = WalkInput(b=target, a=min(x, y), c=max(x, y))
    cert, trace = find_least_multiple(inp)
    if args.json:
        out = {"certificate": {"m": str(cert.m), "u": str(cert.u), "w": str(cert.w),
                               "target": str(cert.target),
                               "pair": [str(cert.pair_a), str(cert.pair_c)]}}
        if args.trace:
            out["trace"] = trace_to_json(trace)
        print(json.dumps(out, indent=2))
        return EXIT_OK
    if args.trace:
        print(trace_table(trace))
        print("v column: v_i = p_i·(p0⁻¹ mod c) mod c")
    print(f"{cert.m}·{cert.target} = {cert.u}·{cert.pair_a} + {cert.w}·{cert.pair_c}")
    return EXIT_OK


def _iter_valid_triples(limit: int):
    for a1 in range(2, limit - 1):
        for a2 in range(a1 + 1, limit):
            if math.gcd(a1, a2) != 1:
                continue
            for a3 in range(a2 + 1, limit + 1):
                if math.gcd(a1, a3) == 1 and math.gcd(a2, a3) == 1:
                    yield a1, a2, a3


def cmd_verify(args) -> int:
    if args.max < 10:
        print("error: --max must be >= 10", file=sys.stderr)
        return EXIT_USAGE
    triples = 0
    walks = 0
    for a1, a2, a3 in _iter_valid_triples(args.max):
        res = frobenius(a1, a2, a3)
        want_g = oracle_frobenius((a1, a2, a3), NONNEG)
        want_f = oracle_frobenius((a1, a2, a3), POSITIVE)
        if res.g != want_g or res.f_pos != want_f:
            print(f"MISMATCH at ({a1},{a2},{a3}): "
                  f"got g={res.g} f_pos={res.f_pos}, oracle g={want_g} f_pos={want_f}")
            return EXIT_MISMATCH
        triples += 1
        if res.degenerate:
            continue
        t = validate_triple(a1, a2, a3)
        certs, _ = least_multiples_all(t)
        for cert in certs:
            ref = oracle_least_multiple(cert.target, (cert.pair_a, cert.pair_c))
            if cert.m != ref.m:
                print(f"MISMATCH least multiple of {cert.target} over "
                      f"({cert.pair_a},{cert.pair_c}): got m={cert.m}, oracle m={ref.m}")
                return EXIT_MISMATCH
            walks += 1
    print(f"OK: {triples} triples and {walks} least-multiple cases match the oracle")
    return EXIT_OK


def cmd_bench(args) -> int:
    try:
        config = BenchConfig(digits=args.digits, samples=args.samples, seed=args.seed,
                             output_path=args.csv, dump_full_values=args.full_values)
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        report = run_bench(config)
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    if args.json:
        print(json.dumps(report.summary(), indent=2))
    else:
        print(summary_text(report))
    return EXIT_OK


_HANDLERS = {
    "compute": cmd_compute,
    "least-multiple": cmd_least_multiple,
    "verify": cmd_verify,
    "bench": cmd_bench,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code = _HANDLERS[args.command](args)
    except InvariantViolation as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        code = EXIT_INVARIANT
    except InvalidInputError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        code = EXIT_INVALID_INPUT
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        code = EXIT_IO
    return code


if __name__ == "__main__":
    sys.exit(main())
