"""Time the pure-Python and Cython kernels on the same workloads.

    python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from stsbicolor import kernels
from stsbicolor.coloring import _incidence
from stsbicolor.designs import bose_construction, double, skolem_construction
from stsbicolor.extension import search_factorization
from stsbicolor.factorization import circle_factorization
from stsbicolor.fixtures import CYCLIC13, EXAMPLE12, FANO


def _bicolor(sts, k):
    offsets, pairs = _incidence(sts)

    def run(mod):
        return mod.bicolor_search(sts.v, k, offsets, pairs, 10**9, 0, None)[2]

    return run


def _factor(n, c, budget=10**8):
    def run(mod):
        name = "cython" if mod.__name__.endswith("_fast") else "python"
        return search_factorization(n, c, budget, backend=name).nodes

    return run


WORKLOADS = [
    ("enumerate 3-bicolorings, STS(19)", _bicolor(EXAMPLE12, 3)),
    ("enumerate 4-bicolorings, STS(15) doubled", _bicolor(double(FANO, circle_factorization(8)), 4)),
    ("enumerate 3-bicolorings, Skolem STS(19)", _bicolor(skolem_construction(19), 3)),
    ("enumerate 4-bicolorings, Bose STS(21)", _bicolor(bose_construction(21), 4)),
    ("factor search n=(2,5,6) c=(4,4,6)", _factor((2, 5, 6), (4, 4, 6))),
    ("factor search n=(4,6,9) c=(10,10,0)", _factor((4, 6, 9), (10, 10, 0))),
    ("factor search n=(1,4,4,10,20) c=(0,4,8,8,20)", _factor((1, 4, 4, 10, 20), (0, 4, 8, 8, 20))),
    ("factor search n=(1,2,8,8,20) c=(0,0,8,16,16) budget 2e5", _factor((1, 2, 8, 8, 20), (0, 0, 8, 16, 16), 200_000)),
]


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    mods = kernels.backends()
    names = [n for n in ("python", "cython") if n in mods]
    print(f"backends: {', '.join(names)} (default: {kernels.BACKEND})")
    print(f"{'workload':58s} {'nodes':>9s} " + " ".join(f"{n + ' s':>10s}" for n in names) + "   speedup")
    for label, fn in WORKLOADS:
        times = {}
        nodes = None
        for name in names:
            best = float("inf")
            for _ in range(args.repeat):
                t = time.perf_counter()
                nodes = fn(mods[name])
                best = min(best, time.perf_counter() - t)
            times[name] = best
        speed = f"{times['python'] / times['cython']:8.1f}x" if "cython" in times else "       -"
        print(f"{label:58s} {nodes:9d} " + " ".join(f"{times[n]:10.4f}" for n in names) + f"  {speed}")


if __name__ == "__main__":
    main()
