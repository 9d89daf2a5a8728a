import sys
import time
from typing import TextIO

from .counting import p
from .divisors import trace
from .evector import e_vector

SUITES = {
    "quick": {"p": (100, 200, 400), "trace": (20, 40, 60), "e_vector": (100, 200, 400)},
    "full": {"p": (250, 500, 1000, 2000), "trace": (40, 60, 80, 100),
             "e_vector": (250, 500, 1000)},
}

FUNCTIONS = {"p": p, "trace": trace, "e_vector": e_vector}


def run_bench(suite: str = "quick", out: TextIO = sys.stdout) -> None:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    out.write(f"{'function':<10}{'n':>8}{'seconds':>12}\n")
    for name, ladder in SUITES[suite].items():
        fn = FUNCTIONS[name]
        for n in ladder:
            start = time.perf_counter()
            fn(n)
            elapsed = time.perf_counter() - start
            out.write(f"{name:<10}{n:>8}{elapsed:>12.4f}\n")
