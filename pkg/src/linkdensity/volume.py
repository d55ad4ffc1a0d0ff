"""Lobachevsky function, ideal bipyramids and diagrammatic volume bounds.

None of this computes a hyperbolic volume. The functions evaluate
closed-form upper and lower bounds that bracket the volume of a rational
link from its twist vector alone.
"""

from dataclasses import dataclass
import math

import numpy as np

from . import kernels
from .rational import Family, classify, family_of

__all__ = [
    "HyperbolicConstants",
    "VolumeWindow",
    "CONSTANTS",
    "V_TET",
    "V_OCT",
    "FUTER_OFFSET",
    "lobachevsky",
    "bipyramid_volume",
    "bipyramid_volumes",
    "face_sizes",
    "bipyramid_upper_bound",
    "futer_lower_bound",
    "family_volume_bounds",
    "volume_window",
    "dehn_retention",
]

# Cited constant of the twist-region lower bound, kept as printed.
FUTER_OFFSET = 2.7066
# Half-width of the rough window around 2 n v_tet for R_n^m.
_ROUGH_HALF_WIDTH = 7.0


def lobachevsky(theta):
    """Lobachevsky function; accepts a float or an array of floats."""
    arr = np.asarray(theta, dtype=np.float64)
    out = kernels.lobachevsky_array(arr.ravel()).reshape(arr.shape)
    if out.ndim == 0:
        return float(out)
    return out


@dataclass(frozen=True)
class HyperbolicConstants:
    v_tet: float
    v_oct: float

    @property
    def two_v_tet(self):
        return 2.0 * self.v_tet


CONSTANTS = HyperbolicConstants(
    v_tet=3.0 * lobachevsky(math.pi / 3.0),
    v_oct=8.0 * lobachevsky(math.pi / 4.0),
)
V_TET = CONSTANTS.v_tet
V_OCT = CONSTANTS.v_oct


def bipyramid_volumes(ks):
    """Volumes of regular ideal k-gon bipyramids for an array of k >= 2."""
    ks = np.asarray(ks, dtype=np.int64)
    if np.any(ks < 2):
        raise ValueError("bipyramids need k >= 2")
    return kernels.bipyramid_volume_array(ks.ravel()).reshape(ks.shape)


def bipyramid_volume(k):
    """k [L(2 pi / k) + 2 L(pi/2 - pi/k)]; B_2 is degenerate with volume 0."""
    if k < 2:
        raise ValueError(f"bipyramids need k >= 2, got {k}")
    return float(bipyramid_volumes(np.array([k]))[0])


def face_sizes(tv):
    """Edge counts of the faces left after collapsing the two largest.

    End levels bound faces with a_i + 1 edges, interior levels a_i + 2. A
    single-level diagram is degenerate and gives ``[a_1 + 1]``.
    """
    a = tv.levels
    if len(a) == 1:
        return [a[0] + 1]
    return [a[0] + 1] + [x + 2 for x in a[1:-1]] + [a[-1] + 1]


def bipyramid_upper_bound(tv):
    return float(np.sum(bipyramid_volumes(np.array(face_sizes(tv)))))


def futer_lower_bound(tv):
    """max(0, 2 v_tet (n - 2) - 2.7066) for n twist levels."""
    return max(0.0, 2.0 * V_TET * (len(tv.levels) - 2) - FUTER_OFFSET)


def family_volume_bounds(n):
    """Volume bounds shared by every R_n^m with m >= 2: from the lower bound
    on R_n to the bipyramid bound of R_n with a belt around its last level."""
    lower = max(0.0, 2.0 * V_TET * (n - 2) - FUTER_OFFSET)
    upper = 2.0 * V_TET * (n - 2) + 2.0 * V_OCT
    return lower, upper


@dataclass(frozen=True)
class VolumeWindow:
    lower: float
    upper: float
    density_lower: float
    density_upper: float
    certified: bool
    degenerate: bool = False
    rough_bounds: tuple | None = None


def volume_window(tv):
    """Certified bracket for the volume (and volume density) of ``tv``.

    ``rough_bounds`` is 2 n v_tet +/- 7 for R_n^m family members; it is
    informational only.
    """
    crossings = tv.crossings
    params = family_of(tv)
    if params is not None and params.n >= 4:
        # every R_n and R_n^m with n >= 4 is hyperbolic; skips a long fraction
        hyperbolic = True
    else:
        hyperbolic = classify(tv).hyperbolic_certified
    rough = None
    if params is not None and params.family is Family.RNM:
        lower, upper = family_volume_bounds(params.n)
        center = 2.0 * params.n * V_TET
        rough = (center - _ROUGH_HALF_WIDTH, center + _ROUGH_HALF_WIDTH)
    else:
        lower = futer_lower_bound(tv)
        upper = bipyramid_upper_bound(tv)
    return VolumeWindow(
        lower=lower,
        upper=upper,
        density_lower=lower / crossings,
        density_upper=upper / crossings,
        certified=hyperbolic and lower <= upper,
        degenerate=len(tv.levels) == 1,
        rough_bounds=rough,
    )


def dehn_retention(ell):
    """(1 - (2 pi / ell)^2)^(3/2), the fraction of volume kept by filling
    along a slope of length ell > 2 pi."""
    if not ell > 2.0 * math.pi:
        raise ValueError(f"slope length must exceed 2 pi, got {ell}")
    return (1.0 - (2.0 * math.pi / ell) ** 2) ** 1.5
