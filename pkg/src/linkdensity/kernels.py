"""Hot numeric kernels.

Every kernel has a numba loop version (``*_nb``) and a numpy / plain Python
fallback (``*_np``). The public wrappers dispatch on ``backend``; the
default follows :data:`linkdensity._accel.USE_NUMBA`.
"""

from fractions import Fraction
from itertools import combinations
import math

import numpy as np

from ._accel import USE_NUMBA, NUMBA_AVAILABLE, njit

__all__ = [
    "lobachevsky_array",
    "bipyramid_volume_array",
    "trace_components",
    "count_tree_subsets",
    "scan_family_density",
    "default_backend",
]

TWO_PI = 2.0 * math.pi

# Power series of the Lobachevsky function about 0:
#   L(t) = t - t log(2t) + sum_n zeta(2n) / (n (2n+1)) * t (t/pi)^(2n)
# valid for |t| < pi; after reduction |t| <= pi/2 so the ratio is <= 1/4.
_N_TERMS = 40


def _even_zetas(count):
    # Akiyama-Tanigawa for Bernoulli numbers, exact.
    size = 2 * count + 1
    acc = [Fraction(0)] * (size + 1)
    bern = []
    for m in range(size + 1):
        acc[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            acc[j - 1] = j * (acc[j - 1] - acc[j])
        bern.append(acc[0])
    zetas = []
    for n in range(1, count + 1):
        b = bern[2 * n]
        val = abs(b) * Fraction(1, 2 * math.factorial(2 * n))
        zetas.append(float(val) * (TWO_PI ** (2 * n)))
    return zetas


LOB_COEFFS = np.array(
    [z / (n * (2 * n + 1)) for n, z in enumerate(_even_zetas(_N_TERMS), start=1)],
    dtype=np.float64,
)


def default_backend():
    return "numba" if USE_NUMBA else "numpy"


def _resolve(backend):
    if backend is None:
        backend = default_backend()
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "numba" and not NUMBA_AVAILABLE:
        raise RuntimeError("numba backend requested but numba is not importable")
    return backend


# --------------------------------------------------------------------------
# Lobachevsky function and bipyramid volumes

def _lob_scalar(theta, coeffs):
    t = theta - math.pi * math.floor(theta / math.pi + 0.5)
    sign = 1.0
    if t < 0.0:
        sign = -1.0
        t = -t
    if t == 0.0:
        return 0.0
    u = (t / math.pi) ** 2
    s = 0.0
    for i in range(coeffs.shape[0] - 1, -1, -1):
        s = (s + coeffs[i]) * u
    return sign * t * (1.0 - math.log(2.0 * t) + s)


def _lob_loop(thetas, coeffs):
    out = np.empty(thetas.shape[0])
    for i in range(thetas.shape[0]):
        out[i] = _lob_scalar_nb(thetas[i], coeffs)
    return out


def _bipyramid_loop(ks, coeffs):
    out = np.empty(ks.shape[0])
    for i in range(ks.shape[0]):
        k = ks[i]
        if k <= 2:
            out[i] = 0.0
            continue
        a = math.pi / k
        out[i] = k * (_lob_scalar_nb(2.0 * a, coeffs)
                      + 2.0 * _lob_scalar_nb(0.5 * math.pi - a, coeffs))
    return out


_lob_scalar_nb = njit(_lob_scalar) or _lob_scalar
_lob_loop_nb = njit(_lob_loop)
_bipyramid_loop_nb = njit(_bipyramid_loop)


def _lob_np(thetas):
    t = thetas - np.pi * np.floor(thetas / np.pi + 0.5)
    sign = np.sign(t)
    t = np.abs(t)
    u = (t / np.pi) ** 2
    s = np.zeros_like(t)
    for c in LOB_COEFFS[::-1]:
        s = (s + c) * u
    with np.errstate(divide="ignore", invalid="ignore"):
        val = t * (1.0 - np.log(2.0 * t) + s)
    return np.where(t == 0.0, 0.0, sign * val)


def _bipyramid_np(ks):
    kf = ks.astype(np.float64)
    with np.errstate(divide="ignore"):
        a = np.pi / kf
    vals = kf * (_lob_np(2.0 * a) + 2.0 * _lob_np(0.5 * np.pi - a))
    return np.where(ks <= 2, 0.0, vals)


def lobachevsky_array(thetas, backend=None):
    thetas = np.ascontiguousarray(thetas, dtype=np.float64)
    if _resolve(backend) == "numba":
        return _lob_loop_nb(thetas, LOB_COEFFS)
    return _lob_np(thetas)


def bipyramid_volume_array(ks, backend=None):
    ks = np.ascontiguousarray(ks, dtype=np.int64)
    if _resolve(backend) == "numba":
        return _bipyramid_loop_nb(ks, LOB_COEFFS)
    return _bipyramid_np(ks)


# --------------------------------------------------------------------------
# Strand tracing through the standard 2-bridge diagram
#
# Tangle endpoints are labelled NW=0, NE=1, SE=2, SW=3 and ``partner[i]`` is
# the endpoint joined to i. A crossing on the right-hand side swaps NE and SE;
# turning the tangle a quarter (to start the next twist level) shifts labels.
# The numerator closure joins NW-NE and SW-SE.

_SWAP = np.array([0, 2, 1, 3], dtype=np.int64)   # exchange NE and SE


def _trace_loop(levels):
    partner = np.array([1, 0, 3, 2], dtype=np.int64)   # the 0-tangle
    tmp = np.empty(4, dtype=np.int64)
    n = levels.shape[0]
    for idx in range(n - 1, -1, -1):
        if idx != n - 1:
            for i in range(4):
                tmp[(i + 1) % 4] = (partner[i] + 1) % 4
            for i in range(4):
                partner[i] = tmp[i]
        # a full twist returns both strands to where they started
        for _ in range(levels[idx] % 2):
            for i in range(4):
                tmp[_SWAP[i]] = _SWAP[partner[i]]
            for i in range(4):
                partner[i] = tmp[i]
    closure = np.array([1, 0, 3, 2], dtype=np.int64)
    seen = np.zeros(4, dtype=np.bool_)
    cycles = 0
    for start in range(4):
        if seen[start]:
            continue
        cycles += 1
        j = start
        while not seen[j]:
            seen[j] = True
            k = partner[j]
            seen[k] = True
            j = closure[k]
    return cycles


_trace_loop_nb = njit(_trace_loop)


def _trace_py(levels):
    partner = [1, 0, 3, 2]
    n = len(levels)
    for idx in range(n - 1, -1, -1):
        if idx != n - 1:
            rotated = [0] * 4
            for i in range(4):
                rotated[(i + 1) % 4] = (partner[i] + 1) % 4
            partner = rotated
        for _ in range(int(levels[idx]) % 2):
            swapped = [0] * 4
            for i in range(4):
                swapped[_SWAP[i]] = _SWAP[partner[i]]
            partner = swapped
    closure = (1, 0, 3, 2)
    seen = set()
    cycles = 0
    for start in range(4):
        if start in seen:
            continue
        cycles += 1
        j = start
        while j not in seen:
            seen.add(j)
            k = partner[j]
            seen.add(k)
            j = closure[k]
    return cycles


def trace_components(levels, backend=None):
    """Number of link components of the closed standard 2-bridge diagram."""
    if _resolve(backend) == "numba":
        return int(_trace_loop_nb(np.ascontiguousarray(levels, dtype=np.int64)))
    return _trace_py(levels)


# --------------------------------------------------------------------------
# Brute-force spanning tree enumeration over bundles of parallel edges

def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _tree_subsets_loop(vertex_count, us, vs, mults):
    b = us.shape[0]
    r = vertex_count - 1
    total = 0
    if r == 0:
        return 1
    if r > b:
        return 0
    idx = np.arange(r)
    parent = np.empty(vertex_count, dtype=np.int64)
    while True:
        for v in range(vertex_count):
            parent[v] = v
        ok = True
        weight = 1
        for t in range(r):
            e = idx[t]
            x = _find_nb(parent, us[e])
            y = _find_nb(parent, vs[e])
            if x == y:
                ok = False
                break
            parent[x] = y
            weight *= mults[e]
        if ok:
            total += weight
        # next combination in lexicographic order
        i = r - 1
        while i >= 0 and idx[i] == i + b - r:
            i -= 1
        if i < 0:
            break
        idx[i] += 1
        for j in range(i + 1, r):
            idx[j] = idx[j - 1] + 1
    return total


_find_nb = njit(_find) or _find
_tree_subsets_nb = njit(_tree_subsets_loop)


def _tree_subsets_py(vertex_count, us, vs, mults):
    r = vertex_count - 1
    if r == 0:
        return 1
    total = 0
    for combo in combinations(range(len(us)), r):
        parent = list(range(vertex_count))
        weight = 1
        for e in combo:
            x = _find(parent, us[e])
            y = _find(parent, vs[e])
            if x == y:
                break
            parent[x] = y
            weight *= mults[e]
        else:
            total += weight
    return total


def count_tree_subsets(vertex_count, bundles, backend=None):
    """Sum over acyclic (vertex_count - 1)-subsets of bundles of the product
    of bundle multiplicities. ``bundles`` is a list of ``(u, v, mult)``."""
    us = [int(u) for u, _, _ in bundles]
    vs = [int(v) for _, v, _ in bundles]
    mults = [int(m) for _, _, m in bundles]
    backend = _resolve(backend)
    if backend == "numba":
        # stay inside int64: the sum is bounded by prod(mults) * C(b, r)
        bound = math.prod(mults) * math.comb(len(us), max(vertex_count - 1, 0))
        if bound < 2 ** 62:
            return int(_tree_subsets_nb(
                int(vertex_count),
                np.array(us, dtype=np.int64),
                np.array(vs, dtype=np.int64),
                np.array(mults, dtype=np.int64)))
    return _tree_subsets_py(vertex_count, us, vs, mults)


# --------------------------------------------------------------------------
# Density scan over the R_n^m family
#
# For fixed n the determinant density of R_n^m with m = 2j is
#   g(j) = 2 pi (log d1 + log(2j + 1 + r)) / (n + 2j),  r = d0 / d1,
# where d1, d0 are the determinants of the first n-1 and n-2 levels. g is
# unimodal in j, so the smallest j with |g(j) - x| < eps comes from three
# binary searches: the peak, the rising side, the falling side.

_SEARCH_BITS = 40


def _g(n, lna, r, j):
    return TWO_PI * (lna + math.log(2.0 * j + 1.0 + r)) / (n + 2.0 * j)


def _scan_loop(ns, lnas, rs, x, eps, jmax):
    count = ns.shape[0]
    hit = np.full(count, -1, dtype=np.int64)
    near = np.zeros(count, dtype=np.int64)
    near_dist = np.zeros(count)
    for i in range(count):
        n = ns[i]
        lna = lnas[i]
        r = rs[i]
        lo = 0
        hi = jmax
        while lo < hi:
            mid = (lo + hi) // 2
            if _g_nb(n, lna, r, mid + 1) < _g_nb(n, lna, r, mid):
                hi = mid
            else:
                lo = mid + 1
        peak = lo
        best_j = peak
        best_d = abs(_g_nb(n, lna, r, peak) - x)
        # rising side: first j in [0, peak] with g(j) > x - eps
        lo = 0
        hi = peak
        while lo < hi:
            mid = (lo + hi) // 2
            if _g_nb(n, lna, r, mid) > x - eps:
                hi = mid
            else:
                lo = mid + 1
        g1 = _g_nb(n, lna, r, lo)
        if abs(g1 - x) < best_d:
            best_d = abs(g1 - x)
            best_j = lo
        if x - eps < g1 < x + eps:
            hit[i] = 2 * lo
        else:
            # falling side: first j in [peak, jmax] with g(j) < x + eps
            lo = peak
            hi = jmax
            while lo < hi:
                mid = (lo + hi) // 2
                if _g_nb(n, lna, r, mid) < x + eps:
                    hi = mid
                else:
                    lo = mid + 1
            g2 = _g_nb(n, lna, r, lo)
            if abs(g2 - x) < best_d:
                best_d = abs(g2 - x)
                best_j = lo
            if lo > peak:
                g3 = _g_nb(n, lna, r, lo - 1)
                if abs(g3 - x) < best_d:
                    best_d = abs(g3 - x)
                    best_j = lo - 1
            if x - eps < g2 < x + eps:
                hit[i] = 2 * lo
        near[i] = 2 * best_j
        near_dist[i] = best_d
    return hit, near, near_dist


_g_nb = njit(_g) or _g
_scan_loop_nb = njit(_scan_loop)


def _first_true_np(pred, lo, hi):
    lo = lo.copy()
    hi = hi.copy()
    for _ in range(_SEARCH_BITS):
        active = lo < hi
        if not active.any():
            break
        mid = (lo + hi) // 2
        p = pred(mid)
        hi = np.where(active & p, mid, hi)
        lo = np.where(active & ~p, mid + 1, lo)
    return lo


def _scan_np(ns, lnas, rs, x, eps, jmax):
    nf = ns.astype(np.float64)

    def g(j):
        return TWO_PI * (lnas + np.log(2.0 * j + 1.0 + rs)) / (nf + 2.0 * j)

    zeros = np.zeros(ns.shape[0], dtype=np.int64)
    top = np.full(ns.shape[0], jmax, dtype=np.int64)
    peak = _first_true_np(lambda j: g(j + 1) < g(j), zeros, top)
    j1 = _first_true_np(lambda j: g(j) > x - eps, zeros, peak)
    g1 = g(j1)
    rising = (g1 > x - eps) & (g1 < x + eps)
    j2 = _first_true_np(lambda j: g(j) < x + eps, peak, top)
    g2 = g(j2)
    falling = (g2 > x - eps) & (g2 < x + eps)
    hit = np.where(rising, 2 * j1, np.where(falling, 2 * j2, -1))

    j3 = np.maximum(j2 - 1, peak)
    cand = np.stack([peak, j1, j2, j3])
    dist = np.abs(np.stack([g(peak), g1, g2, g(j3)]) - x)
    pick = np.argmin(dist, axis=0)
    cols = np.arange(ns.shape[0])
    return hit.astype(np.int64), 2 * cand[pick, cols], dist[pick, cols]


def scan_family_density(ns, lnas, rs, x, eps, m_max, backend=None):
    """For each n, the smallest even m <= m_max whose R_n^m determinant
    density (floating point) lies within eps of x, else -1.

    Returns ``(hit_m, nearest_m, nearest_dist)`` arrays.
    """
    ns = np.ascontiguousarray(ns, dtype=np.int64)
    lnas = np.ascontiguousarray(lnas, dtype=np.float64)
    rs = np.ascontiguousarray(rs, dtype=np.float64)
    jmax = int(m_max) // 2
    if _resolve(backend) == "numba":
        return _scan_loop_nb(ns, lnas, rs, float(x), float(eps), jmax)
    return _scan_np(ns, lnas, rs, float(x), float(eps), jmax)
