"""Arithmetic for knots built by lengthening one twist region of a weave.

``W_n`` stands for an alternating knot with n^2 crossings whose densities
approach v_oct; ``W_n^m`` adds m crossings (m even) to one twist region.
Only the counting identities and target arithmetic live here; no weave
diagram is constructed.
"""

import math

from .determinant import exact_log
from .volume import V_OCT

__all__ = ["weave_target_m", "weave_det_bracket", "belted_weave_bound"]


def weave_target_m(n, x):
    """Even m = 2 floor((n^2 v_oct / x - n^2) / 2), clamped at 0, for which
    n^2 v_oct / (n^2 + m) approximates the target density x."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if not x > 0.0:
        raise ValueError(f"target density must be positive, got {x}")
    if x > V_OCT:
        raise ValueError(f"target density {x} exceeds v_oct = {V_OCT:.6f}")
    sq = n * n
    half = (sq * (V_OCT / x) - sq) / 2.0
    return max(0, 2 * math.floor(half))


def weave_det_bracket(det_wn, te, tebar, n, m, base_crossings=None):
    """Bracket for the determinant density of W_n^m.

    With T_e trees through the lengthened edge and T_ebar avoiding it,
    det(W_n^m) = (m + 1) T_e + T_ebar, so
    D(W_n) c/(c + m) <= D(W_n^m) <= D(W_n) c/(c + m) + 2 pi log(m + 1)/(c + m)
    where c = n^2 (or ``base_crossings``).

    Returns ``(lower, middle, upper)``; ``middle`` is the exact density.
    """
    if min(det_wn, te, tebar) < 0:
        raise ValueError("tree counts must be non-negative")
    if te + tebar != det_wn:
        raise ValueError(f"T_e + T_ebar = {te + tebar} differs from det = {det_wn}")
    if m < 0:
        raise ValueError("m must be non-negative")
    c = n * n if base_crossings is None else base_crossings
    total = c + m
    lower = 2.0 * math.pi * exact_log(det_wn) / total
    upper = lower + 2.0 * math.pi * math.log(m + 1) / total
    middle = 2.0 * math.pi * exact_log((m + 1) * te + tebar) / total
    return lower, middle, upper


def belted_weave_bound(n):
    """(n^2 + 4) v_oct: volume bound for W_n with a belt (n^2 + 4 crossings)."""
    return (n * n + 4) * V_OCT
