"""Locate R_n^m family members whose densities approximate a target.

Determinant search: every hit is re-checked with the exact integer
determinant. Volume search: a hit means the certified volume-density window
of the returned link lies inside ``(x - eps, x + eps)``.
"""

from dataclasses import dataclass
from enum import Enum
import math

import numpy as np

from . import kernels
from .determinant import (
    GOLDEN_RATIO,
    det_density,
    det_density_limit,
    family_det_density,
)
from .rational import FamilyParams, component_count, make_family
from .volume import FUTER_OFFSET, V_OCT, V_TET, family_volume_bounds, volume_window

__all__ = [
    "SearchStatus",
    "SearchResult",
    "SearchFailure",
    "DEFAULT_N_CAP",
    "DEFAULT_M_CAP",
    "det_density_search",
    "vol_density_search",
    "rn_density_table",
]

DEFAULT_N_CAP = 10 ** 6
DEFAULT_M_CAP = 10 ** 9
# smallest n for which R_n and R_n^m are certified hyperbolic
MIN_HYPERBOLIC_N = 4
_CHUNK = 4096
_LN_PHI = math.log(GOLDEN_RATIO)
_LN_SQRT5 = 0.5 * math.log(5.0)
# sup over n >= 4 of |log(1 - (psi/phi)^n) - log sqrt(5)|
_FIB_CORRECTION = 0.83


class SearchStatus(str, Enum):
    HIT = "hit"
    NEAREST = "nearest-achievable"
    FAILED = "failed"


@dataclass(frozen=True)
class SearchResult:
    invariant: str
    params: FamilyParams
    target: float
    epsilon: float
    achieved_density: float
    density_interval: tuple
    certificate: str
    is_knot: bool
    status: SearchStatus
    crossings: int
    det: int | None = None

    @property
    def ok(self):
        return self.status is not SearchStatus.FAILED


class SearchFailure(RuntimeError):
    """Raised by callers that want an exception instead of a FAILED result."""

    def __init__(self, result):
        super().__init__(f"no {result.invariant} search hit within the parameter caps")
        self.result = result


def _allowed(ns, knots_only):
    if knots_only:
        return ns[ns % 3 != 2]
    return ns


# -- determinant density ----------------------------------------------------

_SMALL_FIB = [0, 1]
while len(_SMALL_FIB) < 120:
    _SMALL_FIB.append(_SMALL_FIB[-1] + _SMALL_FIB[-2])


def _log_fib(j):
    """log F_j for an array of indices j >= 1 (floating point)."""
    j = np.asarray(j, dtype=np.int64)
    small = j < len(_SMALL_FIB)
    out = np.empty(j.shape, dtype=np.float64)
    if small.any():
        out[small] = [math.log(_SMALL_FIB[k]) for k in j[small]]
    big = ~small
    if big.any():
        jb = j[big].astype(np.float64)
        # F_j = (phi^j - psi^j)/sqrt5; the psi term is below 1e-49 relative here
        out[big] = jb * _LN_PHI - _LN_SQRT5
    return out


def _ratio_fib(j):
    """F_{j-1} / F_j for j >= 1."""
    j = np.asarray(j, dtype=np.int64)
    out = np.full(j.shape, 1.0 / GOLDEN_RATIO)
    small = j < len(_SMALL_FIB)
    out[small] = [_SMALL_FIB[k - 1] / _SMALL_FIB[k] for k in j[small]]
    return out


def _family_scan_inputs(ns):
    # det(R_n^m) = (m + 1) d1 + d0 with d1 = F_n, d0 = F_{n-1}
    return _log_fib(ns), _ratio_fib(ns)


def _exact_det_hit(n, m, x, eps):
    rec = family_det_density(FamilyParams.of(n, m))
    return rec if abs(rec.density - x) < eps else None


def _proof_witness(x, eps, knots_only, n_cap, m_cap, backend):
    """The constructive choice: n large enough that the Fibonacci corrections
    stay below eps/3, then m from the leading-order density
    2 pi (log(m + 1) + n log phi)/(n + m) within eps/3."""
    need = 6.0 * math.pi * max(math.log(2.0), _FIB_CORRECTION) / eps
    n0 = max(MIN_HYPERBOLIC_N, math.floor(need) + 1)
    ns = _allowed(np.arange(n0, min(n0 + 30, n_cap) + 1), knots_only)
    if ns.size == 0:
        return None
    lead = ns.astype(np.float64) * _LN_PHI
    hit, _, _ = kernels.scan_family_density(
        ns, lead, np.zeros(ns.shape[0]), x, eps / 3.0, m_cap, backend=backend)
    for n, m in zip(ns.tolist(), hit.tolist()):
        if m < 0:
            continue
        rec = _exact_det_hit(n, m, x, eps)
        if rec is not None:
            return n, m, rec
    return None


def det_density_search(x, epsilon, knots_only=False, n_cap=DEFAULT_N_CAP,
                       m_cap=DEFAULT_M_CAP, backend=None):
    """Smallest-crossing R_n^m (n >= 4, m even, R_n when m = 0) with
    |D_det - x| < epsilon.

    Ties go to the smaller n. A witness from the constructive argument bounds
    the scan; the scan then walks n upwards until n exceeds the best crossing
    number found.
    """
    limit = det_density_limit()
    if not 0.0 <= x <= limit:
        raise ValueError(f"target {x} outside the admissible interval [0, {limit:.6f}]")
    if not epsilon > 0.0:
        raise ValueError("epsilon must be positive")
    endpoint = x == 0.0 or x == limit

    best = None   # (crossings, n, m, record)
    witness = _proof_witness(x, epsilon, knots_only, n_cap, m_cap, backend)
    if witness is not None:
        n, m, rec = witness
        best = (n + m, n, m, rec)

    nearest = None   # (distance, n, m)
    start = MIN_HYPERBOLIC_N
    while start <= n_cap and (best is None or start < best[0]):
        stop = min(start + _CHUNK, n_cap + 1)
        if best is not None:
            stop = min(stop, best[0])
        ns = _allowed(np.arange(start, stop), knots_only)
        start = stop
        if ns.size == 0:
            continue
        lnas, rs = _family_scan_inputs(ns)
        hit, near, near_dist = kernels.scan_family_density(
            ns, lnas, rs, x, epsilon, m_cap, backend=backend)
        k = int(np.argmin(near_dist))
        if nearest is None or near_dist[k] < nearest[0]:
            nearest = (float(near_dist[k]), int(ns[k]), int(near[k]))
        cands = sorted((n + m, n, m) for n, m in zip(ns.tolist(), hit.tolist()) if m >= 0)
        for c, n, m in cands:
            if best is not None and (c, n) >= best[:2]:
                break
            # float boundary cases: also try the next parity-preserving m
            for mm in (m, m + 2):
                rec = _exact_det_hit(n, mm, x, epsilon)
                if rec is not None:
                    if best is None or (n + mm, n, mm) < best[:3]:
                        best = (n + mm, n, mm, rec)
                    break

    if best is not None:
        _, n, m, rec = best
        status = SearchStatus.NEAREST if endpoint else SearchStatus.HIT
    else:
        if nearest is None:
            nearest = (math.inf, MIN_HYPERBOLIC_N, 0)
        _, n, m = nearest
        rec = family_det_density(FamilyParams.of(n, m))
        status = SearchStatus.FAILED
    params = FamilyParams.of(n, m)
    return SearchResult(
        invariant="det",
        params=params,
        target=x,
        epsilon=epsilon,
        achieved_density=rec.density,
        density_interval=(rec.density, rec.density),
        certificate="exact-density",
        is_knot=component_count(make_family(params)) == 1,
        status=status,
        crossings=params.crossings,
        det=rec.det,
    )


# -- volume density ---------------------------------------------------------

def _base_ratios(x, eps, c_max):
    """(n0, m0), m0 even >= 2, with |2 v_tet n0/(n0 + m0) - x| < eps/2, in
    order of increasing n0 + m0 then n0."""
    two_vt = 2.0 * V_TET
    for c0 in range(3, c_max + 1):
        guess = int(round(x * c0 / two_vt))
        picks = {min(max(g, 1), c0 - 2) for g in range(guess - 2, guess + 3)}
        for n0 in sorted(picks):
            m0 = c0 - n0
            if m0 % 2:
                continue
            if abs(two_vt * n0 / c0 - x) < eps / 2.0:
                yield n0, m0


def _window_inside(n, m, x, eps):
    lower, upper = family_volume_bounds(n)
    c = n + m
    return x - eps < lower / c and upper / c < x + eps


def _min_scale(n0, m0, x, eps, step):
    """Smallest multiple alpha of ``step`` putting the window of
    R_{alpha n0}^{alpha m0} inside (x - eps, x + eps)."""
    c0 = n0 + m0
    ratio = 2.0 * V_TET * n0 / c0
    # density window = ratio - (4 v_tet + offset)/(alpha c0), ratio + (2 v_oct - 4 v_tet)/(alpha c0)
    below = (4.0 * V_TET + FUTER_OFFSET) / (c0 * (ratio - x + eps))
    above = (2.0 * V_OCT - 4.0 * V_TET) / (c0 * (x + eps - ratio))
    alpha = max(1, math.floor(max(below, above)))
    alpha = max(step, alpha - alpha % step)
    while alpha * n0 < MIN_HYPERBOLIC_N:
        alpha += step
    # the closed form is a lower estimate; finish on the exact comparison
    for _ in range(8):
        if _window_inside(alpha * n0, alpha * m0, x, eps):
            return alpha
        alpha += step
    return None


def vol_density_search(x, epsilon, knots_only=False, n_cap=DEFAULT_N_CAP):
    """R_N^M whose certified volume-density window sits inside
    (x - epsilon, x + epsilon).

    Picks the smallest ratio n0 : m0 whose limiting density 2 v_tet n0/(n0+m0)
    is within epsilon/2 of x, then scales both by the least alpha (a multiple
    of 3 when only knots are wanted) that makes the window narrow enough.
    """
    two_vt = 2.0 * V_TET
    if not 0.0 <= x <= two_vt:
        raise ValueError(f"target {x} outside the admissible interval [0, {two_vt:.6f}]")
    if not epsilon > 0.0:
        raise ValueError("epsilon must be positive")
    endpoint = x == 0.0 or x == two_vt
    step = 3 if knots_only else 1
    # past this size the ratio grid is already within eps/8 of x
    c_max = min(n_cap, math.ceil(16.0 * V_TET / epsilon) + 16)

    # any hit has alpha c0 > (offset + 2 v_oct) / (2 eps), so n grows like 1/eps
    n_needed = (FUTER_OFFSET + 2.0 * V_OCT) * max(x - epsilon / 2.0, 0.0) / (4.0 * epsilon * V_TET)
    if n_needed > n_cap:
        c_max = 0

    found = None
    fallback = None
    for n0, m0 in _base_ratios(x, epsilon, c_max):
        alpha = _min_scale(n0, m0, x, epsilon, step)
        if alpha is None:
            continue
        if alpha * n0 <= n_cap:
            found = (alpha * n0, alpha * m0)
            break
        if fallback is None or alpha * n0 < fallback[0]:
            fallback = (alpha * n0, alpha * m0)

    status = SearchStatus.NEAREST if endpoint else SearchStatus.HIT
    if found is None:
        status = SearchStatus.FAILED
        found = fallback if fallback is not None else (MIN_HYPERBOLIC_N + 2, 2)
    params = FamilyParams.of(*found)
    tv = make_family(params)
    window = volume_window(tv)
    if status is not SearchStatus.FAILED and not (
            window.certified
            and x - epsilon < window.density_lower
            and window.density_upper < x + epsilon):
        status = SearchStatus.FAILED
    mid = 0.5 * (window.density_lower + window.density_upper)
    return SearchResult(
        invariant="vol",
        params=params,
        target=x,
        epsilon=epsilon,
        achieved_density=mid,
        density_interval=(window.density_lower, window.density_upper),
        certificate="certified-interval",
        is_knot=component_count(tv) == 1,
        status=status,
        crossings=params.crossings,
    )


def rn_density_table(n_max):
    """Rows ``(n, det_density, VolumeWindow)`` for R_n, 2 <= n <= n_max."""
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    rows = []
    for n in range(2, n_max + 1):
        tv = make_family(FamilyParams.of(n))
        rows.append((n, det_density(tv).density, volume_window(tv)))
    return rows
