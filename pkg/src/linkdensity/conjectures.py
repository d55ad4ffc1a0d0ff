"""Instance checks of volume/determinant inequalities against certified
volume windows."""

from dataclasses import dataclass
from enum import Enum
import math

from .determinant import exact_log

__all__ = [
    "Status",
    "ConjectureVerdict",
    "STOIMENOW_INTERCEPT",
    "STOIMENOW_SLOPE",
    "check_stoimenow",
    "check_voldet_conjecture",
]

STOIMENOW_INTERCEPT = 4.355
STOIMENOW_SLOPE = 0.219


class Status(str, Enum):
    VERIFIED = "verified"
    INCONCLUSIVE = "inconclusive"
    CANDIDATE = "counterexample-candidate"


@dataclass(frozen=True)
class ConjectureVerdict:
    name: str
    status: Status
    lhs: float
    rhs: float
    detail: str


def _check(name, window, det, transform):
    rhs = 2.0 * math.pi * exact_log(det)
    hi = transform(window.upper)
    lo = transform(window.lower)
    if not window.certified:
        return ConjectureVerdict(name, Status.INCONCLUSIVE, hi, rhs,
                                 "volume window is not certified")
    if window.lower > window.upper:
        return ConjectureVerdict(name, Status.INCONCLUSIVE, hi, rhs,
                                 "volume window endpoints are out of order")
    if hi < rhs:
        return ConjectureVerdict(name, Status.VERIFIED, hi, rhs,
                                 f"upper bound {hi:.6f} < {rhs:.6f}")
    if lo >= rhs:
        return ConjectureVerdict(name, Status.CANDIDATE, lo, rhs,
                                 f"lower bound {lo:.6f} >= {rhs:.6f}")
    return ConjectureVerdict(name, Status.INCONCLUSIVE, hi, rhs,
                             f"{rhs:.6f} lies inside [{lo:.6f}, {hi:.6f}]")


def check_stoimenow(window, det):
    """4.355 + 0.219 vol < 2 pi log det."""
    return _check("stoimenow", window, det,
                  lambda v: STOIMENOW_INTERCEPT + STOIMENOW_SLOPE * v)


def check_voldet_conjecture(window, det):
    """vol < 2 pi log det."""
    return _check("vol-det", window, det, lambda v: v)
