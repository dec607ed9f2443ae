"""Command-line surface: scan, chain-search, classify, decompose,
signature extract/reconstruct, bounds, verify.

Records go to stdout as JSON Lines, CSV, or an aligned table; diagnostics
go to stderr. Exit codes: 0 success, 1 invalid input, 2 non-exhaustive
search (factorization budget hit), 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import re
import sys
import traceback
from fractions import Fraction

from .arithmetic import FactorizationExhausted, FactoredInteger, factorize
from .bounds import (
    absolute_count_bound,
    bound_chain_check,
    count_coefficient,
    multiperfect_count_bound,
    primitive_count_bound,
)
from .classify import classify, is_primitive, primitive_decomposition
from .search import (
    SearchParams,
    brute_scan,
    chain_search,
    verify_counts,
)
from .signature import EmptyChain, NotPrimitive, extract_signature, reconstruct

PROG = "mps"


class _Parser(argparse.ArgumentParser):
    # Usage errors must exit 1, not argparse's default 2.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parse_alpha(text: str) -> Fraction:
    m = re.fullmatch(r"(\d+)(?:/(\d+))?", text)
    if not m:
        raise argparse.ArgumentTypeError(
            f"invalid alpha {text!r}; expected an integer like 3 or a ratio like 3/2"
        )
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise argparse.ArgumentTypeError(f"invalid alpha {text!r}; zero denominator")
    value = Fraction(num, den)
    if value <= 1:
        raise argparse.ArgumentTypeError(f"alpha must exceed 1, got {text!r}")
    return value


def _parse_positive_int(text: str) -> int:
    if not re.fullmatch(r"\d+", text):
        raise argparse.ArgumentTypeError(
            f"invalid integer {text!r}; expected a plain decimal string"
        )
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"value must be positive, got {text!r}")
    return value


def _alpha_str(alpha: Fraction) -> str:
    if alpha.denominator == 1:
        return str(alpha.numerator)
    return f"{alpha.numerator}/{alpha.denominator}"


def _record(fi: FactoredInteger, alpha: Fraction, primitive: bool, source: str) -> dict:
    return {
        "n": str(fi.value),
        "factors": [[p, e] for p, e in fi.factors],
        "omega": fi.omega,
        "alpha": _alpha_str(alpha),
        "primitive": primitive,
        "source": source,
    }


def _emit_records(records: list[dict], output: str, stream) -> None:
    if output == "json":
        for rec in records:
            stream.write(json.dumps(rec, separators=(",", ":")) + "\n")
    elif output == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["n", "factors", "omega", "alpha", "primitive", "source"])
        for rec in records:
            writer.writerow(
                [
                    rec["n"],
                    json.dumps(rec["factors"], separators=(",", ":")),
                    rec["omega"],
                    rec["alpha"],
                    str(rec["primitive"]).lower(),
                    rec["source"],
                ]
            )
    else:
        for rec in records:
            factors = " * ".join(
                f"{p}^{e}" if e > 1 else str(p) for p, e in rec["factors"]
            ) or "1"
            stream.write(
                f"{rec['n']:>16}  omega={rec['omega']}  alpha={rec['alpha']}"
                f"  primitive={str(rec['primitive']).lower()}"
                f"  [{factors}]  ({rec['source']})\n"
            )


def _resolve_jobs(args) -> int:
    if getattr(args, "jobs", None):
        return args.jobs
    env = os.environ.get("MPS_JOBS")
    if env and env.isdigit() and int(env) >= 1:
        return int(env)
    return os.cpu_count() or 1


def _diag(args, message: str) -> None:
    if not getattr(args, "quiet", False):
        print(message, file=sys.stderr)


def _shorten(n: int) -> str:
    s = str(n)
    if len(s) <= 20:
        return s
    return f"{s[0]}.{s[1:16]}e+{len(s) - 1}"


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _cmd_scan(args) -> int:
    parity = "odd_only" if args.odd_only else "any"
    jobs = _resolve_jobs(args)
    found = brute_scan(args.alpha, args.limit, parity, worker_count=jobs)
    records = [_record(fi, args.alpha, is_primitive(fi), "scan") for fi in found]
    _emit_records(records, args.output, sys.stdout)
    _diag(args, f"scan: {len(records)} found up to {args.limit} (jobs={jobs})")
    return 0


def _cmd_chain_search(args) -> int:
    parity = "odd_only" if args.odd_only else "any"
    params = SearchParams(
        alpha=args.alpha,
        max_omega=args.max_omega,
        limit=args.limit,
        parity=parity,
        omega_floor_pruning=args.omega_floor_pruning,
        worker_count=_resolve_jobs(args),
    )
    report = chain_search(params)
    records = [
        _record(f.number, args.alpha, f.primitive, "chain") for f in report.found
    ]
    _emit_records(records, args.output, sys.stdout)
    prune_text = ", ".join(f"{k}={v}" for k, v in report.pruned_by.items() if v)
    _diag(
        args,
        f"chain-search: {len(records)} found, {report.nodes_explored} states"
        f" explored, prunes: {prune_text or 'none'}",
    )
    if not report.exhaustive:
        _diag(args, "chain-search: NON-EXHAUSTIVE, factorization budget hit on: "
              + "; ".join(report.incomplete_branches))
        return 2
    return 0


def _cmd_classify(args) -> int:
    fi = factorize(args.n)
    perf = classify(fi)
    primitive = is_primitive(fi)
    payload = {
        "n": str(fi.value),
        "factors": [[p, e] for p, e in fi.factors],
        "omega": fi.omega,
        "alpha": _alpha_str(perf.alpha),
        "status": perf.status,
        "multiperfect": perf.multiperfect,
        "rational_multiperfect": perf.rational_multiperfect,
        "primitive": primitive,
    }
    if args.output == "table":
        print(f"n = {fi.value} = {fi}")
        print(f"alpha = sigma(n)/n = {_alpha_str(perf.alpha)}")
        print(f"status: {perf.status}"
              + (" (rational)" if perf.rational_multiperfect else ""))
        print(f"primitive: {str(primitive).lower()}")
    else:
        print(json.dumps(payload, separators=(",", ":")))
    return 0


def _cmd_decompose(args) -> int:
    fi = factorize(args.n)
    dec = primitive_decomposition(fi)
    payload = {
        "n": str(fi.value),
        "parts": [
            {
                "n": str(part.value),
                "factors": [[p, e] for p, e in part.factors],
                "multiplier": mult,
            }
            for part, mult in zip(dec.parts, dec.multipliers)
        ],
        "leftover": {
            "n": str(dec.leftover.value),
            "factors": [[p, e] for p, e in dec.leftover.factors],
        },
        "leftover_is_multiperfect": dec.leftover_is_multiperfect,
    }
    if args.output == "table":
        if dec.parts:
            for part, mult in zip(dec.parts, dec.multipliers):
                print(f"part {part.value} = {part}  (sigma = {mult} * part)")
        else:
            print("no parts peeled")
        print(
            f"leftover {dec.leftover.value} = {dec.leftover}"
            f"  multiperfect={str(dec.leftover_is_multiperfect).lower()}"
        )
    else:
        print(json.dumps(payload, separators=(",", ":")))
    return 0


def _cmd_signature_extract(args) -> int:
    fi = factorize(args.n)
    sig = extract_signature(fi)
    payload = {
        "n": str(fi.value),
        "alpha": _alpha_str(sig.alpha),
        "p1": sig.p1,
        "exponents": list(sig.exponents),
        "chain_primes": list(sig.chain_primes),
    }
    if args.output == "table":
        print(f"n = {fi.value}: alpha = {_alpha_str(sig.alpha)}, p1 = {sig.p1}")
        print(f"exponents: {','.join(map(str, sig.exponents))}")
        print(f"chain: {' -> '.join(map(str, sig.chain_primes))}")
    else:
        print(json.dumps(payload, separators=(",", ":")))
    return 0


def _cmd_signature_reconstruct(args) -> int:
    exponents = []
    for token in args.exponents.split(","):
        token = token.strip()
        if not re.fullmatch(r"\d+", token) or int(token) < 1:
            print(
                f"{PROG}: error: invalid exponent {token!r} in --exponents;"
                " expected positive integers like 5,1,1",
                file=sys.stderr,
            )
            return 1
        exponents.append(int(token))
    result = reconstruct(args.alpha, args.p1, exponents)
    if args.output == "table":
        if result.ok:
            print(result.number.value)
        else:
            step = f" at step {result.failed_step}" if result.failed_step else ""
            print(f"reconstruction failed: {result.failure}{step}")
            print(f"chain so far: {result.chain}")
    else:
        payload = {
            "alpha": _alpha_str(args.alpha),
            "p1": args.p1,
            "exponents": exponents,
            "value": str(result.number.value) if result.ok else None,
            "chain": [[p, e] for p, e in result.chain],
            "failure": result.failure,
            "failed_step": result.failed_step,
        }
        print(json.dumps(payload, separators=(",", ":")))
    return 0


def _interval_json(interval) -> dict:
    lo, hi = interval.decimal(20)
    return {"lower": lo, "upper": hi}


def _cmd_bounds(args) -> int:
    alpha = args.alpha
    integer = alpha.denominator == 1
    rows = []
    for r in range(1, args.max_r + 1):
        row = {"r": r, "count_coefficient": _interval_json(count_coefficient(r))}
        row["primitive_count_bound"] = _interval_json(
            primitive_count_bound(alpha, r, args.limit, integer_alpha=integer)
        )
        if integer:
            k = alpha.numerator
            row["multiperfect_count_bound"] = _interval_json(
                multiperfect_count_bound(k, r, args.limit)
            )
            if r <= 20:
                row["absolute_count_bound"] = str(absolute_count_bound(k, r))
                row["chain_check"] = all(ok for _, ok in bound_chain_check(k, r))
        rows.append(row)
    summary = {
        "alpha": _alpha_str(alpha),
        "limit": str(args.limit) if args.limit else "2^(4^r)",
        "rows": rows,
    }
    if args.output == "json":
        print(json.dumps(summary, separators=(",", ":")))
    elif args.output == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        header = ["r", "count_coefficient_upper", "primitive_bound_upper"]
        if integer:
            header += ["multiperfect_bound_upper", "absolute_bound", "chain_check"]
        writer.writerow(header)
        for row in rows:
            out = [
                row["r"],
                row["count_coefficient"]["upper"],
                row["primitive_count_bound"]["upper"],
            ]
            if integer:
                out += [
                    row.get("multiperfect_count_bound", {}).get("upper", ""),
                    row.get("absolute_count_bound", ""),
                    row.get("chain_check", ""),
                ]
            writer.writerow(out)
    else:
        limit_text = str(args.limit) if args.limit else "2^(4^r)"
        print(f"alpha = {_alpha_str(alpha)}, limit = {limit_text}")
        for row in rows:
            line = (
                f"r={row['r']:>2}"
                f"  f(r) <= {row['count_coefficient']['upper']}"
                f"  primitive <= {row['primitive_count_bound']['upper']}"
            )
            if integer and "absolute_count_bound" in row:
                line += (
                    f"  absolute <= {_shorten(int(row['absolute_count_bound']))}"
                    f"  chain={'ok' if row['chain_check'] else 'FAIL'}"
                )
            print(line)
    return 0


def _cmd_verify(args) -> int:
    parity = "odd_only" if args.odd_only else "any"
    jobs = _resolve_jobs(args)
    params = SearchParams(
        alpha=args.alpha,
        max_omega=args.max_omega,
        limit=args.limit,
        parity=parity,
        omega_floor_pruning=False,
        worker_count=jobs,
    )
    oracle = brute_scan(args.alpha, args.limit, parity, worker_count=jobs)
    oracle_records = [
        _record(fi, args.alpha, is_primitive(fi), "scan") for fi in oracle
    ]
    oracle_primitive = {rec["n"] for rec in oracle_records if rec["primitive"]}
    report = chain_search(params)
    chain_records = [
        _record(f.number, args.alpha, f.primitive, "chain") for f in report.found
    ]
    chain_set = {rec["n"] for rec in chain_records}
    checks = verify_counts(params, report)
    summary = {
        "alpha": _alpha_str(args.alpha),
        "limit": str(args.limit),
        "max_omega": args.max_omega,
        "parity": parity,
        "oracle": oracle_records,
        "chain": chain_records,
        "primitive_set_equal": oracle_primitive == chain_set,
        "nodes_explored": report.nodes_explored,
        "pruned_by": report.pruned_by,
        "exhaustive": report.exhaustive,
        "bound_checks": [
            {
                "description": c.description,
                "count": c.count,
                "bound": c.bound_text,
                "passed": c.passed,
            }
            for c in checks
        ],
    }
    print(json.dumps(summary, separators=(",", ":")))
    if not report.exhaustive:
        return 2
    return 0


# ---------------------------------------------------------------------------
# Parser assembly and dispatch
# ---------------------------------------------------------------------------

def _add_common(sub, *, limit=True, omega=False, parity=True, jobs=True):
    sub.add_argument("--alpha", type=_parse_alpha, required=True,
                     help="target abundancy, e.g. 3 or 3/2")
    if limit:
        sub.add_argument("--limit", type=_parse_positive_int, required=True,
                         help="search bound x as a plain decimal string")
    if omega:
        sub.add_argument("--max-omega", type=int, required=True,
                         help="largest distinct-prime count r to search")
    if parity:
        sub.add_argument("--odd-only", action="store_true",
                         help="restrict to odd numbers")
    if jobs:
        sub.add_argument("--jobs", type=int, default=None,
                         help="worker processes (default: MPS_JOBS or all cores)")
    sub.add_argument("--output", choices=("json", "csv", "table"), default="json")
    sub.add_argument("--quiet", action="store_true",
                     help="suppress diagnostics on stderr")


def build_parser() -> _Parser:
    parser = _Parser(prog=PROG, description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    scan = subs.add_parser("scan", help="divisor-sum sieve scan up to a limit")
    _add_common(scan)
    scan.set_defaults(func=_cmd_scan)

    chain = subs.add_parser("chain-search", help="signature-chain enumeration")
    _add_common(chain, omega=True)
    chain.add_argument("--omega-floor-pruning", action="store_true",
                       help="skip omega below the known floor for odd integer alpha")
    chain.set_defaults(func=_cmd_chain_search)

    cls = subs.add_parser("classify", help="abundancy and multiperfection of n")
    cls.add_argument("n", type=_parse_positive_int)
    cls.add_argument("--output", choices=("json", "table"), default="table")
    cls.set_defaults(func=_cmd_classify)

    dec = subs.add_parser("decompose", help="peel primitive unitary parts off n")
    dec.add_argument("n", type=_parse_positive_int)
    dec.add_argument("--output", choices=("json", "table"), default="table")
    dec.set_defaults(func=_cmd_decompose)

    sig = subs.add_parser("signature", help="extract or rebuild prime-chain signatures")
    sig_subs = sig.add_subparsers(dest="signature_command", required=True)
    ext = sig_subs.add_parser("extract", help="signature of a primitive number")
    ext.add_argument("n", type=_parse_positive_int)
    ext.add_argument("--output", choices=("json", "table"), default="table")
    ext.set_defaults(func=_cmd_signature_extract)
    rec = sig_subs.add_parser("reconstruct", help="rebuild n from alpha, p1, exponents")
    rec.add_argument("--alpha", type=_parse_alpha, required=True)
    rec.add_argument("--p1", type=_parse_positive_int, required=True)
    rec.add_argument("--exponents", required=True,
                     help="comma-separated exponent list, e.g. 5,1,1")
    rec.add_argument("--output", choices=("json", "table"), default="table")
    rec.set_defaults(func=_cmd_signature_reconstruct)

    bnd = subs.add_parser("bounds", help="tabulate the rigorous count bounds")
    bnd.add_argument("--alpha", type=_parse_alpha, required=True)
    bnd.add_argument("--max-r", type=int, required=True)
    bnd.add_argument("--limit", type=_parse_positive_int, default=None,
                     help="evaluate (ln x) bounds at this x; default 2^(4^r)")
    bnd.add_argument("--output", choices=("json", "csv", "table"), default="table")
    bnd.set_defaults(func=_cmd_bounds)

    ver = subs.add_parser("verify", help="oracle scan vs chain search, with bounds")
    _add_common(ver, omega=True)
    ver.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.func(args)
    except NotPrimitive as exc:
        print(f"{PROG}: not primitive: {exc}", file=sys.stderr)
        return 1
    except (EmptyChain, ValueError) as exc:
        print(f"{PROG}: {exc}", file=sys.stderr)
        return 1
    except FactorizationExhausted as exc:
        print(f"{PROG}: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0
    except Exception:
        traceback.print_exc()
        return 3


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
