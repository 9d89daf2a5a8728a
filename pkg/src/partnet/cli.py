"""Command-line entry point ``partnet``.

Exit codes: 0 success, 1 verification mismatch, 2 usage error,
3 node budget exceeded.
"""

import argparse
import sys

from . import bench, export, methods, verify
from .config import DEFAULT_NODE_BUDGET, NODE_BUDGET_ENV, node_budget_from_env
from .divisors import build_divisor_network, enumerate_distinct_partitions
from .enumeration import build_partition_network, enumerate_partitions
from .exceptions import LimitExceeded
from .network import KINDS
from .sigma import build_sigma_network

EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _natural(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 0:
        raise argparse.ArgumentTypeError(f"{value} is negative")
    return value


def _positive(text):
    value = _natural(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partnet",
        description="Partition counts, divisor traces and jump networks.")
    sub = parser.add_subparsers(dest="command", required=True)

    cmd = sub.add_parser("p", help="number of partitions p(n)")
    cmd.add_argument("n", type=_natural)
    cmd.add_argument("--method", choices=methods.P_METHODS, default="recursive")

    cmd = sub.add_parser("d", help="number of divisors d(n)")
    cmd.add_argument("n", type=_positive)
    cmd.add_argument("--method", choices=methods.D_METHODS, default="trace")

    cmd = sub.add_parser("sigma", help="sum of divisors sigma_1(n)")
    cmd.add_argument("n", type=_positive)
    cmd.add_argument("--method", choices=methods.SIGMA_METHODS, default="trace")

    cmd = sub.add_parser("enum", help="list partitions of n, one per line")
    cmd.add_argument("n", type=_positive)
    cmd.add_argument("--distinct", action="store_true",
                     help="only partitions into distinct parts")

    cmd = sub.add_parser("export", help="write a network as DOT, JSON or text")
    cmd.add_argument("--kind", choices=KINDS, default="partition")
    cmd.add_argument("--n", type=_positive, required=True,
                     help="n for partition kinds, a1_max for divisor, n_max for sigma")
    cmd.add_argument("--format", choices=("dot", "json", "text"), default="json")
    cmd.add_argument("--out", metavar="PATH", help="output file (default stdout)")
    cmd.add_argument("--node-budget", type=_positive, default=None,
                     help=f"node limit (default ${NODE_BUDGET_ENV} or {DEFAULT_NODE_BUDGET})")

    cmd = sub.add_parser("verify", help="compare every method against the oracles")
    cmd.add_argument("--max", type=_positive, default=60, dest="max_n")

    cmd = sub.add_parser("bench", help="time p, trace and e_vector over a size ladder")
    cmd.add_argument("--suite", choices=sorted(bench.SUITES), default="quick")
    return parser


def _network(kind, n, budget):
    if kind in ("partition", "partition-annotated"):
        return build_partition_network(n, annotate=kind == "partition-annotated",
                                       node_budget=budget)
    if kind == "divisor":
        return build_divisor_network(n, node_budget=budget)
    return build_sigma_network(n, node_budget=budget)


def _export(args, out):
    budget = args.node_budget or node_budget_from_env()
    net = _network(args.kind, args.n, budget)
    render = {"dot": export.to_dot, "json": export.to_json, "text": export.to_text}
    text = render[args.format](net, args.kind)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "p":
            out.write(f"{methods.partition_count(args.n, args.method)}\n")
        elif args.command == "d":
            out.write(f"{methods.divisor_count(args.n, args.method)}\n")
        elif args.command == "sigma":
            out.write(f"{methods.divisor_sum(args.n, args.method)}\n")
        elif args.command == "enum":
            items = (t.partition for t in enumerate_distinct_partitions(args.n)) \
                if args.distinct else enumerate_partitions(args.n)
            for item in items:
                out.write(f"{item}\n")
        elif args.command == "export":
            _export(args, out)
        elif args.command == "verify":
            return verify.run_verify(args.max_n, out)
        elif args.command == "bench":
            bench.run_bench(args.suite, out)
    except LimitExceeded as exc:
        sys.stderr.write(f"partnet: {exc}\n")
        return EXIT_BUDGET
    except ValueError as exc:
        sys.stderr.write(f"partnet: {exc}\n")
        return EXIT_USAGE
    return 0


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
