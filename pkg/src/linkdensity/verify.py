"""Invariant suites behind ``linkdensity verify``."""

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .conjectures import Status, check_stoimenow, check_voldet_conjecture
from .determinant import (
    density_from_det,
    det_density,
    det_density_limit,
    determinant,
    family_determinant,
)
from .rational import FamilyParams, TwistVector, continued_fraction, make_family
from .tait import MAX_ENUM_BUNDLES, enumerate_spanning_trees, spanning_tree_count, tait_graph
from .volume import V_TET, bipyramid_upper_bound, volume_window

__all__ = ["SuiteResult", "SUITES", "run_suite", "random_twist_vectors", "all_twist_vectors"]


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)

    def record(self, ok, what):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < 20:
                self.failures.append(what)

    @property
    def ok(self):
        return self.failed == 0


def all_twist_vectors(max_levels, max_entry):
    for n in range(1, max_levels + 1):
        for levels in product(range(1, max_entry + 1), repeat=n):
            yield TwistVector(levels)


def random_twist_vectors(count, max_levels=30, max_entry=30, seed=0):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(1, max_levels + 1))
        yield TwistVector(tuple(int(a) for a in rng.integers(1, max_entry + 1, size=n)))


def det_monotone(max_n=10_000, **_):
    """D_det(R_n) strictly increasing for 2 <= n <= max_n, below 2 pi log phi."""
    res = SuiteResult("det-monotone")
    limit = det_density_limit()
    prev_det, det = 1, 2          # det(R_1), det(R_2)
    prev_density = density_from_det(det, 2)
    res.record(prev_density < limit, "n=2 above limit")
    for n in range(3, max_n + 1):
        prev_det, det = det, det + prev_det
        density = density_from_det(det, n)
        res.record(density > prev_density, f"not increasing at n={n}")
        res.record(density < limit, f"above limit at n={n}")
        prev_density = density
    return res


def det_bound(max_n=30, samples=10_000, seed=0, **_):
    """D_det < 2 pi log phi on random twist vectors."""
    res = SuiteResult("det-bound")
    limit = det_density_limit()
    for tv in random_twist_vectors(samples, max_levels=max_n, seed=seed):
        res.record(det_density(tv).density < limit, str(tv))
    return res


def vol_bound(max_n=30, samples=10_000, seed=1, **_):
    """Bipyramid upper bound < 2 v_tet * crossings on random twist vectors."""
    res = SuiteResult("vol-bound")
    for tv in random_twist_vectors(samples, max_levels=max_n, seed=seed):
        res.record(bipyramid_upper_bound(tv) < 2.0 * V_TET * tv.crossings, str(tv))
    return res


def oracle(max_n=6, max_entry=4, **_):
    """Level recursion = matrix-tree = continued-fraction numerator, plus
    brute-force enumeration wherever the graph is small enough."""
    res = SuiteResult("oracle")
    for tv in all_twist_vectors(max_n, max_entry):
        det = determinant(tv)
        g = tait_graph(tv)
        counts = [spanning_tree_count(g), continued_fraction(tv)[0]]
        if len(g.bundles()) <= MAX_ENUM_BUNDLES:
            counts.append(enumerate_spanning_trees(g))
        res.record(all(c == det for c in counts), f"{tv}: {det} vs {counts}")
    return res


def conjectures(max_n=50, max_m=100, **_):
    """vol < 2 pi log det verified from bounds on R_n and R_n^m; the
    Stoimenow checker never reports a counterexample candidate."""
    res = SuiteResult("conjectures")
    cases = [FamilyParams.of(n) for n in range(4, max_n + 1)]
    cases += [FamilyParams.of(n, m) for n in range(4, 21) for m in range(2, max_m + 1, 2)]
    for params in cases:
        tv = make_family(params)
        window = volume_window(tv)
        det = family_determinant(params)
        verdict = check_voldet_conjecture(window, det)
        res.record(verdict.status is Status.VERIFIED, f"{params.label()}: {verdict.detail}")
        stoimenow = check_stoimenow(window, det)
        res.record(stoimenow.status is not Status.CANDIDATE, f"{params.label()}: {stoimenow.detail}")
    return res


SUITES = {
    "det-monotone": det_monotone,
    "det-bound": det_bound,
    "vol-bound": vol_bound,
    "oracle": oracle,
    "conjectures": conjectures,
}


def run_suite(name, max_n=None, **kwargs):
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    if max_n is not None:
        kwargs["max_n"] = max_n
    return suite(**kwargs)
