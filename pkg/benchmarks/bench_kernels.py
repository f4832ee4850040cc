"""Compare the compiled and pure-Python integer kernels.

Two views:

* kernel level: each kernel timed on inputs shaped like the ones the library
  produces (small-entry Gram matrices and linear systems up to 4g = 24);
* end to end: a verification workload run in a subprocess per backend, with
  ``MEYER_PURE_PYTHON`` selecting the fallback.

Usage::

    python benchmarks/bench_kernels.py [--repeat N] [--genus G]
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from meyer import _kernels_py

try:
    from meyer import _kernels_c
except ImportError:
    _kernels_c = None


def _rand(rng, r, c, bound):
    return [[rng.randint(-bound, bound) for _ in range(c)] for _ in range(r)]


def _sym(rng, n, bound):
    m = _rand(rng, n, n, bound)
    return [[m[min(i, j)][max(i, j)] for j in range(n)] for i in range(n)]


def workloads(seed=0):
    rng = random.Random(seed)
    out = {}
    for n in (8, 16, 24):
        systems = [(_rand(rng, n // 2, n, 2), n) for _ in range(20)]
        grams = [(_sym(rng, n // 2, 3),) for _ in range(20)]
        mats = [(_rand(rng, n, n, 3), _rand(rng, n, n, 3)) for _ in range(20)]
        out[f"kernel_int {n // 2}x{n}"] = ("kernel_int", systems)
        out[f"inertia_int {n // 2}x{n // 2}"] = ("inertia_int", grams)
        out[f"matmul_int {n}x{n}"] = ("matmul_int", mats)
    return out


def time_kernels(repeat):
    rows = []
    for label, (name, cases) in workloads().items():
        py = getattr(_kernels_py, name)

        def run_py():
            for args in cases:
                py(*args)

        t_py = min(timeit.repeat(run_py, number=1, repeat=repeat))
        t_c = None
        if _kernels_c is not None:
            c = getattr(_kernels_c, name)

            def run_c():
                for args in cases:
                    try:
                        c(*args)
                    except OverflowError:
                        py(*args)

            t_c = min(timeit.repeat(run_c, number=1, repeat=repeat))
        rows.append((label, t_py, t_c))
    return rows


END_TO_END = (
    "import time; from meyer.suites import run_suite; t = time.perf_counter(); "
    "ok = all(r.passed for g in range(1, {g} + 1) for r in run_suite('all', g, 0, 50)); "
    "print(time.perf_counter() - t, ok)"
)


def time_end_to_end(genus):
    out = {}
    for backend in ("python", "cython"):
        env = dict(os.environ)
        if backend == "python":
            env["MEYER_PURE_PYTHON"] = "1"
        else:
            env.pop("MEYER_PURE_PYTHON", None)
            if _kernels_c is None:
                continue
        res = subprocess.run([sys.executable, "-c", END_TO_END.format(g=genus)], env=env,
                             capture_output=True, text=True, check=True)
        seconds, ok = res.stdout.split()
        out[backend] = (float(seconds), ok == "True")
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--genus", type=int, default=4, help="end-to-end suites run for g = 1..G")
    args = ap.parse_args(argv)

    print(f"{'kernel workload (20 calls)':<28} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for label, t_py, t_c in time_kernels(args.repeat):
        c_ms = f"{1000 * t_c:10.2f}" if t_c is not None else f"{'n/a':>10}"
        speed = f"{t_py / t_c:7.1f}x" if t_c else f"{'n/a':>8}"
        print(f"{label:<28} {1000 * t_py:10.2f} {c_ms} {speed}")

    print()
    results = time_end_to_end(args.genus)
    for backend, (seconds, ok) in results.items():
        print(f"verify all, g = 1..{args.genus}, 50 cases, {backend:>6}: {seconds:6.2f} s "
              f"({'pass' if ok else 'FAIL'})")
    if len(results) == 2:
        print(f"end-to-end speedup: {results['python'][0] / results['cython'][0]:.1f}x")


if __name__ == "__main__":
    main()
