"""Command-line front end.

Exit codes: 0 success / all checks pass, 1 usage error, 2 verification
failure, 3 internal assertion (lemma contradiction or promise violation).
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .distinguish import distinguish
from .errors import LemmaContradiction, PromiseViolation
from .identify import identify
from .mn_eval import chi, composition_sign, enumerate_bsts
from .oracle import exact_oracle
from .partitions import (
    compositions_of,
    conjugate,
    doppelganger,
    format_parts,
    parse_composition,
    parse_partition,
    partitions_of,
)

DEFAULT_CAP = 12


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="snchar", description=__doc__)
    parser.add_argument(
        "--structured",
        action="store_true",
        help="emit one JSON record per result instead of human-readable lines",
    )
    parser.add_argument(
        "--seed", type=int, default=0, help="seed for sampled verification checks"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="exact character value of a shape at a cycle type")
    p.add_argument("partition")
    p.add_argument("cycle_type")

    p = sub.add_parser("identify", help="recover a partition from its own oracle")
    p.add_argument("partition")

    p = sub.add_parser("distinguish", help="find a cycle type separating two shapes")
    p.add_argument("partition")
    p.add_argument("other")

    p = sub.add_parser("verify", help="exhaustive checks over all partitions of n")
    p.add_argument("n", type=int)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)

    p = sub.add_parser("bench", help="query-count table for n = 1..n_max")
    p.add_argument("n_max", type=int)
    return parser


def _emit(structured: bool, record: dict, human_lines: list[str]) -> None:
    if structured:
        print(json.dumps(record))
    else:
        for line in human_lines:
            print(line)


def cmd_eval(args) -> int:
    shape = parse_partition(args.partition)
    ctype = parse_composition(args.cycle_type)
    value = chi(shape, ctype)
    _emit(
        args.structured,
        {
            "command": "eval",
            "partition": list(shape),
            "cycle_type": list(ctype),
            "value": value,
        },
        [str(value)],
    )
    return 0


def cmd_identify(args) -> int:
    hidden = parse_partition(args.partition)
    result = identify(exact_oracle(hidden), sum(hidden))
    match = result.partition == hidden
    phases = {
        "forward": result.forward_queries,
        "base": result.base_queries,
        "overhang": result.overhang_queries,
        "doppelganger": result.doppelganger_queries,
    }
    _emit(
        args.structured,
        {
            "command": "identify",
            "hidden": list(hidden),
            "recovered": list(result.partition),
            "match": match,
            "queries": result.total_queries,
            "phases": phases,
            "transcript": result.transcript.records(),
        },
        [
            f"recovered: {format_parts(result.partition)}",
            "queries: {} (forward {}, base {}, overhang {}, doppelganger {})".format(
                result.total_queries, *phases.values()
            ),
        ],
    )
    if not match:
        print("error: recovered partition differs from hidden", file=sys.stderr)
        return 3
    return 0


def cmd_distinguish(args) -> int:
    lam = parse_partition(args.partition)
    mu = parse_partition(args.other)
    sep = distinguish(lam, mu)
    _emit(
        args.structured,
        {
            "command": "distinguish",
            "lambda": list(lam),
            "mu": list(mu),
            "witness": list(sep.witness),
            "value_lambda": sep.value_lambda,
            "value_mu": sep.value_mu,
            "permutation": sep.permutation,
        },
        [
            f"witness: {format_parts(sep.witness)}",
            f"chi[{format_parts(lam)}] = {sep.value_lambda}",
            f"chi[{format_parts(mu)}] = {sep.value_mu}",
            f"permutation: {sep.permutation}",
        ],
    )
    return 0


def _sample_compositions(n: int, count: int, rng: random.Random) -> list[tuple[int, ...]]:
    # Uniform over all 2^(n-1) compositions via random break points.
    out = []
    for _ in range(count):
        parts = []
        run = 1
        for _ in range(n - 1):
            if rng.random() < 0.5:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.append(tuple(parts))
    return out


def cmd_verify(args) -> int:
    n = args.n
    if n < 1:
        raise UsageError("n must be at least 1")
    if n > args.cap:
        raise UsageError(f"n={n} exceeds the cap ({args.cap}); raise --cap to override")
    rng = random.Random(args.seed)
    complete = n <= 8
    checks = {
        "identify_roundtrip": [0, 0],
        "evaluator_vs_enumerator": [0, 0],
        "conjugate_sign": [0, 0],
        "doppelganger_distinguish": [0, 0],
    }

    def tally(name: str, ok: bool) -> None:
        checks[name][0 if ok else 1] += 1

    all_comps = list(compositions_of(n)) if complete else None
    for shape in partitions_of(n):
        result = identify(exact_oracle(shape), n)
        tally("identify_roundtrip", result.partition == shape)

        comps = all_comps if complete else _sample_compositions(n, 32, rng)
        ok = all(
            chi(shape, t) == sum(b.sign for b in enumerate_bsts(shape, t))
            for t in comps
        )
        tally("evaluator_vs_enumerator", ok)

        comps = all_comps if complete else _sample_compositions(n, 64, rng)
        conj = conjugate(shape)
        ok = all(
            chi(conj, t) == composition_sign(t) * chi(shape, t) for t in comps
        )
        tally("conjugate_sign", ok)

        twin = doppelganger(shape)
        if twin != shape and shape > twin:
            sep = distinguish(shape, twin)
            ok = (
                chi(shape, sep.witness) == sep.value_lambda
                and chi(twin, sep.witness) == sep.value_mu
                and sep.value_lambda != sep.value_mu
            )
            tally("doppelganger_distinguish", ok)

    failed = sum(bad for _, bad in checks.values())
    if args.structured:
        record = {
            "command": "verify",
            "n": n,
            "seed": args.seed,
            "complete_sweep": complete,
            "checks": {k: {"pass": p, "fail": f} for k, (p, f) in checks.items()},
            "ok": failed == 0,
        }
        print(json.dumps(record))
    else:
        for name, (passed, bad) in checks.items():
            print(f"{name}: pass={passed} fail={bad}")
        print("result:", "PASS" if failed == 0 else "FAIL")
    return 0 if failed == 0 else 2


def cmd_bench(args) -> int:
    n_max = args.n_max
    if n_max < 1:
        raise UsageError("n_max must be at least 1")
    if n_max > DEFAULT_CAP:
        raise UsageError(f"n_max={n_max} exceeds the cap ({DEFAULT_CAP})")
    rows = []
    for n in range(1, n_max + 1):
        counts = [
            identify(exact_oracle(shape), n).total_queries
            for shape in partitions_of(n)
        ]
        worst = max(counts)
        mean = sum(counts) / len(counts)
        rows.append(
            {
                "n": n,
                "partitions": len(counts),
                "max_queries": worst,
                "mean_queries": round(mean, 2),
                "ratio_to_n15": round(worst / n**1.5, 3),
            }
        )
    if args.structured:
        for row in rows:
            print(json.dumps(row))
    else:
        print(f"{'n':>3} {'shapes':>7} {'max':>6} {'mean':>8} {'max/n^1.5':>10}")
        for row in rows:
            print(
                f"{row['n']:>3} {row['partitions']:>7} {row['max_queries']:>6} "
                f"{row['mean_queries']:>8.2f} {row['ratio_to_n15']:>10.3f}"
            )
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        handler = {
            "eval": cmd_eval,
            "identify": cmd_identify,
            "distinguish": cmd_distinguish,
            "verify": cmd_verify,
            "bench": cmd_bench,
        }[args.command]
        return handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (PromiseViolation, LemmaContradiction) as exc:
        print(f"internal assertion: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
