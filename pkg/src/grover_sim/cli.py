"""Command-line entry point: run, verify, compare, directory.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from collections.abc import Sequence

from .directory import DirectoryError, load_directory, search_directory
from .engine import AUTO, RunConfig, classical_baseline, run
from .errors import ConfigurationError
from .verify import VERIFY_MAX_QUBITS, format_table, run_identity_suite

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

TRAJECTORY_HEADER = ["j", "marked_amp", "unmarked_amp", "c_scale", "average_after_flip", "success_prob"]
COMPARE_HEADER = ["N", "quantum_iterations_auto", "quantum_success_prob", "classical_queries_for_half_success"]
COMPARE_MAX_QUBITS = 16


class UsageError(Exception):
    pass


def _fmt(x) -> str:
    return f"{x:.17g}" if isinstance(x, float) else str(x)


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError(f"seed must be an unsigned 64-bit integer, got {text}")
    return value


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _iterations(text: str):
    if text == AUTO:
        return AUTO
    try:
        return _non_negative(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'auto' or a non-negative integer, got {text!r}") from None


def _marked(text: str):
    if text == "random":
        return text
    try:
        return _non_negative(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'random' or a basis index, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grover-sim", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="simulate one search")
    p.add_argument("--qubits", type=int, required=True)
    p.add_argument("--marked", type=_marked, default="random", help="basis index or 'random'")
    p.add_argument("--iterations", type=_iterations, default=AUTO, help="count or 'auto'")
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--samples", type=_non_negative, default=0)
    p.add_argument("--trace", action="store_true")
    p.add_argument("--diffusion", choices=["direct", "wrw"], default="direct")
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = sub.add_parser("verify", help="check operator identities on dense matrices")
    p.add_argument("--max-qubits", type=int, default=6)
    p.add_argument("--seed", type=_seed, default=0)

    p = sub.add_parser("compare", help="quantum AUTO iterations vs classical scan, CSV")
    p.add_argument("--qubits", type=int, default=10)
    p.add_argument("--trials", type=int, default=2000)
    p.add_argument("--seed", type=_seed, default=0)

    p = sub.add_parser("directory", help="search a name,number file")
    p.add_argument("--file", required=True)
    p.add_argument("--name", required=True)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--retries", type=_non_negative, default=0)
    return parser


def trajectory_csv(result) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(TRAJECTORY_HEADER)
    for point in result.trajectory:
        writer.writerow([_fmt(getattr(point, col)) for col in TRAJECTORY_HEADER])
    return buf.getvalue()


def cmd_run(args, out) -> int:
    if args.format == "csv" and not args.trace:
        raise UsageError("--format csv emits the trajectory and needs --trace")
    if not 1 <= args.qubits <= 26:
        raise UsageError(f"--qubits must be in [1, 26], got {args.qubits}")
    marked = args.marked
    if marked == "random":
        marked = random.Random(args.seed).randrange(1 << args.qubits)
    cfg = RunConfig(
        n=args.qubits,
        marked=marked,
        iterations=args.iterations,
        seed=args.seed,
        sample_count=args.samples,
        trace=args.trace,
        diffusion=args.diffusion,
    )
    result = run(cfg)
    if args.format == "csv":
        out.write(trajectory_csv(result))
    else:
        out.write(json.dumps(result.to_dict(), indent=2) + "\n")
    return EXIT_OK


def cmd_verify(args, out, build_r=None) -> int:
    if not 1 <= args.max_qubits <= VERIFY_MAX_QUBITS:
        raise UsageError(f"--max-qubits must be in [1, {VERIFY_MAX_QUBITS}], got {args.max_qubits}")
    checks = run_identity_suite(args.max_qubits, seed=args.seed, build_r=build_r)
    out.write(format_table(checks) + "\n")
    failed = [c for c in checks if not c.passed]
    for c in failed:
        print(
            f"identity {c.name} failed: max deviation {c.max_deviation:.3e} > {c.tol:.0e} (n={c.worst_n})",
            file=sys.stderr,
        )
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def compare_rows(max_qubits: int, trials: int, seed: int) -> list[list]:
    rows = []
    for n in range(2, max_qubits + 1):
        marked = random.Random(seed + n).randrange(1 << n)
        quantum = run(RunConfig(n=n, marked=marked, iterations=AUTO, seed=seed + n))
        classical = classical_baseline(n, seed + n, trials)
        rows.append([1 << n, quantum.iterations_executed, quantum.final_success_prob, classical.queries_for_half_success])
    return rows


def cmd_compare(args, out) -> int:
    if not 2 <= args.qubits <= COMPARE_MAX_QUBITS:
        raise UsageError(f"--qubits must be in [2, {COMPARE_MAX_QUBITS}], got {args.qubits}")
    if args.trials < 1:
        raise UsageError(f"--trials must be >= 1, got {args.trials}")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(COMPARE_HEADER)
    for row in compare_rows(args.qubits, args.trials, args.seed):
        writer.writerow([_fmt(x) for x in row])
    return EXIT_OK


def cmd_directory(args, out) -> int:
    records = load_directory(args.file)
    report = search_directory(records, args.name, seed=args.seed, retries=args.retries)
    out.write(json.dumps(report, indent=2, ensure_ascii=False) + "\n")
    return EXIT_OK


COMMANDS = {"run": cmd_run, "verify": cmd_verify, "compare": cmd_compare, "directory": cmd_directory}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, ConfigurationError, DirectoryError) as exc:
        print(f"grover-sim {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
