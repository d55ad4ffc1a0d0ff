"""Exact link determinants and determinant densities."""

from dataclasses import dataclass
import math

from .rational import Family

__all__ = [
    "DeterminantRecord",
    "GOLDEN_RATIO",
    "determinant",
    "family_determinant",
    "family_prefix_determinants",
    "exact_log",
    "density_from_det",
    "det_density",
    "family_det_density",
    "det_density_limit",
]

GOLDEN_RATIO = (1.0 + math.sqrt(5.0)) / 2.0
_LN2 = math.log(2.0)


@dataclass(frozen=True)
class DeterminantRecord:
    det: int
    crossings: int
    density: float


def determinant(tv):
    """Level recursion d_k = a_k d_{k-1} + d_{k-2}, d_0 = 1, d_{-1} = 0."""
    prev, cur = 0, 1
    for a in tv.levels:
        prev, cur = cur, a * cur + prev
    return cur


def _fib_pair(k):
    """(F_k, F_{k+1}) by fast doubling, F_0 = 0, F_1 = 1."""
    if k == 0:
        return 0, 1
    a, b = _fib_pair(k >> 1)
    c = a * (2 * b - a)
    d = a * a + b * b
    if k & 1:
        return d, c + d
    return c, d


def _all_ones_det(k):
    # determinant of [1, 1, ..., 1] with k levels; k = 0 and k = -1 give 1 and 0
    return _fib_pair(k + 1)[0]


def family_prefix_determinants(n):
    """Determinants of the first n-1 and n-2 single-crossing levels."""
    return _all_ones_det(n - 1), _all_ones_det(n - 2)


def family_determinant(params):
    """det(R_n) and det(R_n^m) = (m + 1) d(n-1) + d(n-2) in closed form."""
    if params.family is Family.RN:
        return _all_ones_det(params.n)
    d1, d0 = family_prefix_determinants(params.n)
    return (params.m + 1) * d1 + d0


def exact_log(value):
    """Natural log of a positive integer from its bit length and top 64 bits."""
    if value <= 0:
        raise ValueError("log of a non-positive integer")
    bits = value.bit_length()
    if bits <= 64:
        return math.log(value)
    shift = bits - 64
    top = value >> shift
    return math.log(top) + shift * _LN2


def density_from_det(det, crossings):
    return 2.0 * math.pi * exact_log(det) / crossings


def det_density(tv):
    det = determinant(tv)
    crossings = tv.crossings
    return DeterminantRecord(det, crossings, density_from_det(det, crossings))


def family_det_density(params):
    det = family_determinant(params)
    return DeterminantRecord(det, params.crossings, density_from_det(det, params.crossings))


def det_density_limit():
    """Supremum 2 pi log(golden ratio) of rational-link determinant densities."""
    return 2.0 * math.pi * math.log(GOLDEN_RATIO)
