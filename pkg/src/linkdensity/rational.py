"""Rational (2-bridge) links as twist vectors.

A twist vector ``[a_1, ..., a_n]`` lists the crossing counts of the twist
levels of a standard alternating 2-bridge diagram; ``a_n`` is the level next
to the free strand.
"""

from dataclasses import dataclass
from enum import Enum
import re

from . import kernels

__all__ = [
    "TwistVector",
    "RationalLinkInfo",
    "Family",
    "FamilyParams",
    "make_family",
    "family_of",
    "continued_fraction",
    "normalized_fraction",
    "component_count",
    "is_knot_family",
    "classify",
]

_VECTOR_RE = re.compile(r"^\[\s*(\d+(\s*,\s*\d+)*)\s*\]$")


@dataclass(frozen=True)
class TwistVector:
    levels: tuple

    def __post_init__(self):
        levels = tuple(int(a) for a in self.levels)
        if not levels:
            raise ValueError("a twist vector needs at least one level")
        if any(a < 1 for a in levels):
            raise ValueError(f"twist levels must be positive, got {list(levels)}")
        object.__setattr__(self, "levels", levels)

    @classmethod
    def parse(cls, text):
        """Parse ``"[4,1,1,2]"``; whitespace is ignored."""
        match = _VECTOR_RE.match(text.strip())
        if match is None:
            raise ValueError(f"malformed twist vector {text!r}; expected e.g. [4,1,1,2]")
        return cls(tuple(int(tok) for tok in match.group(1).split(",")))

    def __str__(self):
        return "[" + ",".join(map(str, self.levels)) + "]"

    def __len__(self):
        return len(self.levels)

    @property
    def crossings(self):
        return sum(self.levels)

    def canonical(self):
        """Absorb a trailing single-crossing level into its neighbour.

        ``[..., a, 1]`` and ``[..., a + 1]`` are the same link.
        """
        if len(self.levels) >= 2 and self.levels[-1] == 1:
            return TwistVector(self.levels[:-2] + (self.levels[-2] + 1,))
        return self


class Family(str, Enum):
    RN = "Rn"
    RNM = "Rnm"


@dataclass(frozen=True)
class FamilyParams:
    """``R_n`` (one crossing in each of n levels) or ``R_n^m`` (m extra
    crossings, m even, in the last level)."""

    family: Family
    n: int
    m: int | None = None

    def __post_init__(self):
        family = Family(self.family)
        object.__setattr__(self, "family", family)
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if family is Family.RN:
            if self.m not in (None, 0):
                raise ValueError("R_n takes no m")
            object.__setattr__(self, "m", None)
        else:
            if self.m is None or self.m < 2 or self.m % 2:
                raise ValueError(f"R_n^m needs an even m >= 2, got {self.m}")

    @classmethod
    def of(cls, n, m=0):
        """``R_n`` when m == 0, else ``R_n^m``."""
        if m == 0:
            return cls(Family.RN, n)
        return cls(Family.RNM, n, m)

    @property
    def extra(self):
        return self.m or 0

    @property
    def crossings(self):
        return self.n + self.extra

    def label(self):
        if self.family is Family.RN:
            return f"R_{self.n}"
        return f"R_{self.n}^{self.m}"


@dataclass(frozen=True)
class RationalLinkInfo:
    source: TwistVector
    fraction_p: int
    fraction_q: int
    crossings: int
    components: int
    hyperbolic_certified: bool


def make_family(params):
    levels = [1] * params.n
    levels[-1] += params.extra
    return TwistVector(tuple(levels))


def family_of(tv):
    """The family member whose diagram is exactly ``tv``, or None."""
    *head, last = tv.levels
    if any(a != 1 for a in head):
        return None
    extra = last - 1
    if extra % 2:
        return None
    return FamilyParams.of(len(tv.levels), extra)


def continued_fraction(tv):
    """``(p, q)`` with p/q = a_1 + 1/(a_2 + 1/(... + 1/a_n)), in lowest terms."""
    p, q = tv.levels[-1], 1
    for a in reversed(tv.levels[:-1]):
        p, q = a * p + q, p
    return p, q


def normalized_fraction(tv):
    """``(p, q)`` with 0 < q < p; the one-crossing unknot diagram gives (1, 1)."""
    p, q = continued_fraction(tv)
    if p == 1:
        return 1, 1
    return p, q % p


def component_count(tv, backend=None):
    """1 for a knot, 2 for a two-component link, by tracing strands."""
    return kernels.trace_components(tv.levels, backend=backend)


def is_knot_family(params):
    return params.n % 3 in (0, 1)


def classify(tv):
    canon = tv.canonical()
    p, q = normalized_fraction(canon)
    # 2-bridge links are hyperbolic unless they are (2, p) torus links
    hyperbolic = p > 2 and q % p not in (1, p - 1)
    return RationalLinkInfo(
        source=canon,
        fraction_p=p,
        fraction_q=q,
        crossings=canon.crossings,
        components=component_count(canon),
        hyperbolic_certified=hyperbolic,
    )
