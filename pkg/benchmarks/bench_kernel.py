"""Compiled vs pure-Python kernel timings.

    python benchmarks/bench_kernel.py [--repeat N]

Kernel-level rows time one call on random dense polynomials; the workload
rows time end-to-end computations on fresh fields (no shared memo tables).
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import timeit

from drinfeld import GF, compiled_available

WORKLOADS = {
    "goss_poly(200), q=2": "from drinfeld import GF, goss_poly; goss_poly(200, GF(2))",
    "goss oracle(100), q=4": "from drinfeld import GF, goss_poly_oracle; goss_poly_oracle(100, GF(4))",
    "f_2 = g*h check, q=5, prec 60": (
        "from drinfeld import GF, expand, f_s, g_series, h_form; F = GF(5); "
        "assert expand(f_s(2, F), 60) == g_series(60, F) * expand(h_form(F), 60)"
    ),
}


def _rand_poly(F, deg: int, rng: random.Random):
    from drinfeld import Poly

    return Poly(F, [rng.randrange(F.q) for _ in range(deg)] + [1])


def kernel_rows(backends: list[str], repeat: int) -> list[tuple[str, dict[str, float]]]:
    rows = []
    for q in (3, 4, 32749):
        for deg in (64, 400, 1200):
            per_op: dict[str, dict[str, float]] = {"mul": {}, "divmod": {}, "gcd": {}}
            for name in backends:
                F = GF(q, name)
                rng = random.Random(deg * q)  # same operands on every backend
                a, b = _rand_poly(F, deg, rng), _rand_poly(F, deg // 2, rng)
                per_op["mul"][name] = min(timeit.repeat(lambda: a * b, number=1, repeat=repeat))
                per_op["divmod"][name] = min(timeit.repeat(lambda: divmod(a * b + a, b), number=1, repeat=repeat))
                per_op["gcd"][name] = min(timeit.repeat(lambda: a.gcd(b), number=1, repeat=repeat))
            for op, times in per_op.items():
                rows.append((f"{op:6s} q={q:<5d} deg={deg}", times))
    return rows


def workload_rows(backends: list[str]) -> list[tuple[str, dict[str, float]]]:
    rows = []
    for label, stmt in WORKLOADS.items():
        times = {}
        for name in backends:
            env_flag = "1" if name == "python" else "0"
            code = (
                "import time; t = time.perf_counter(); "
                f"{stmt}; print(time.perf_counter() - t)"
            )
            out = subprocess.run(
                [sys.executable, "-c", code],
                capture_output=True,
                text=True,
                check=True,
                env={**os.environ, "DRINFELD_PURE_PYTHON": env_flag},
            ).stdout
            times[name] = float(out.strip())
        rows.append((label, times))
    return rows


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    backends = ["python"] + (["compiled"] if compiled_available() else [])
    if len(backends) == 1:
        print("compiled kernel not built; showing pure-Python timings only")
    header = f"{'case':36s}" + "".join(f"{b:>12s}" for b in backends) + ("     speedup" if len(backends) == 2 else "")
    print(header)
    print("-" * len(header))
    for label, times in kernel_rows(backends, args.repeat) + workload_rows(backends):
        line = f"{label:36s}" + "".join(f"{times[b] * 1e3:10.2f}ms" for b in backends)
        if len(backends) == 2 and times["compiled"] > 0:
            line += f"{times['python'] / times['compiled']:11.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
