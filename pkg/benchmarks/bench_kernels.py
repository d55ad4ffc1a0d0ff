"""Time each hot kernel on the numba backend and on the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

The first numba call per kernel is a warm-up (JIT or cache load) and is
reported separately.
"""

import argparse
import time

import numpy as np

from linkdensity import _accel, kernels
from linkdensity.rational import TwistVector
from linkdensity.search import det_density_search
from linkdensity.tait import tait_graph


def _cases():
    rng = np.random.default_rng(0)
    thetas = rng.uniform(-10, 10, 200_000)
    ks = np.arange(2, 200_002)
    levels = rng.integers(1, 50, size=200_000)
    g = tait_graph(TwistVector((2, 4, 2, 4, 2, 4)))
    bundles = g.bundles()
    ns = np.arange(4, 100_004)
    lnas = ns * 0.48121182505960347 - 0.8047189562170501
    rs = np.full(ns.shape, 0.6180339887498949)
    return {
        "lobachevsky x2e5": lambda b: kernels.lobachevsky_array(thetas, backend=b),
        "bipyramid x2e5": lambda b: kernels.bipyramid_volume_array(ks, backend=b),
        "trace 2e5 levels": lambda b: kernels.trace_components(levels, backend=b),
        f"tree subsets ({len(bundles)} bundles)": lambda b: kernels.count_tree_subsets(g.vertex_count, bundles, backend=b),
        "density scan 1e5 n": lambda b: kernels.scan_family_density(ns, lnas, rs, 1.7, 1e-6, 10 ** 9, backend=b),
        "det search x=2 eps=1e-4": lambda b: det_density_search(2.0, 1e-4, backend=b),
    }


def _best(fn, backend, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn(backend)
        times.append(time.perf_counter() - t)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = ["numpy"] + (["numba"] if _accel.NUMBA_AVAILABLE else [])
    print(f"numba available: {_accel.NUMBA_AVAILABLE}")
    print(f"{'kernel':34s} {'numpy [s]':>11s} {'numba [s]':>11s} {'warm-up':>9s} {'speed-up':>9s}")
    for name, fn in _cases().items():
        row = {}
        warm = float("nan")
        if "numba" in backends:
            t = time.perf_counter()
            fn("numba")
            warm = time.perf_counter() - t
        for b in backends:
            row[b] = _best(fn, b, args.repeat)
        nb = row.get("numba", float("nan"))
        print(f"{name:34s} {row['numpy']:11.5f} {nb:11.5f} {warm:9.3f} {row['numpy'] / nb:8.1f}x")


if __name__ == "__main__":
    main()
