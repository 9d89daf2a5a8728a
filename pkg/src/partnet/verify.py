"""Differential sweep of the jump-based methods against the classical oracles."""

import sys
from dataclasses import dataclass
from typing import Callable, List, Optional, TextIO

from . import counting, divisors, evector, oracles, sigma
from .methods import partition_count

# enumeration-backed checks are exponential in sqrt(n) and get lower caps
CAPS = {
    "p_recursive_vs_pentagonal": 1000,
    "p_enumeration_vs_pentagonal": 30,
    "trace_vs_trial_d": 100,
    "distinct_count_vs_bruteforce": 40,
    "evector_vs_trial_d": 1000,
    "sigma_trace_vs_trial_sigma": 100,
}


@dataclass
class CheckResult:
    name: str
    upper: int
    counterexample: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None


def _sweep(name, lo, upper, got: Callable, want: Callable) -> CheckResult:
    for n in range(lo, upper + 1):
        g, w = got(n), want(n)
        if g != w:
            return CheckResult(name, upper, f"n={n}: got {g}, expected {w}")
    return CheckResult(name, upper)


def _check_evector(upper) -> CheckResult:
    name = "evector_vs_trial_d"
    got = evector.divisors_from_evector(upper)
    for k, g in enumerate(got, start=1):
        w = oracles.divisor_stats_trial(k)[0]
        if g != w:
            return CheckResult(name, upper, f"n={k}: got {g}, expected {w}")
    if len(got) != upper:
        return CheckResult(name, upper, f"expected {upper} values, got {len(got)}")
    return CheckResult(name, upper)


def run_checks(max_n: int) -> List[CheckResult]:
    cap = {name: min(max_n, c) for name, c in CAPS.items()}
    memo = counting.CountTable()
    return [
        _sweep("p_recursive_vs_pentagonal", 0, cap["p_recursive_vs_pentagonal"],
               lambda n: partition_count(n, "recursive", memo), oracles.p_pentagonal),
        _sweep("p_enumeration_vs_pentagonal", 1, cap["p_enumeration_vs_pentagonal"],
               lambda n: partition_count(n, "enumerate"), oracles.p_pentagonal),
        _sweep("trace_vs_trial_d", 1, cap["trace_vs_trial_d"],
               divisors.trace, lambda n: oracles.divisor_stats_trial(n)[0]),
        _sweep("distinct_count_vs_bruteforce", 1, cap["distinct_count_vs_bruteforce"],
               lambda n: sum(1 for _ in divisors.enumerate_distinct_partitions(n)),
               lambda n: len(oracles.distinct_partitions_bruteforce(n))),
        _check_evector(cap["evector_vs_trial_d"]),
        _sweep("sigma_trace_vs_trial_sigma", 1, cap["sigma_trace_vs_trial_sigma"],
               sigma.sigma1, lambda n: oracles.divisor_stats_trial(n)[1]),
    ]


def run_verify(max_n: int, out: TextIO = sys.stdout) -> int:
    """Print a report and return the exit status (0 all agree, 1 mismatch)."""
    if max_n < 1:
        raise ValueError(f"max must be positive, got {max_n}")
    out.write(f"partnet verify --max {max_n}\n")
    for name, c in CAPS.items():
        out.write(f"  cap {name}: {min(max_n, c)}\n")
    status = 0
    for result in run_checks(max_n):
        if result.ok:
            out.write(f"ok       {result.name} (up to {result.upper})\n")
        else:
            status = 1
            out.write(f"MISMATCH {result.name}: {result.counterexample}\n")
    out.write("all checks passed\n" if status == 0 else "verification FAILED\n")
    return status
