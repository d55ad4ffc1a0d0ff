"""Acceptance criteria AC1..AC13, each at its stated tolerance and time limit.

Every criterion prints one ``PASS``/``FAIL`` line (visible with ``pytest -s``
or when run as a script: ``python tests/test_acceptance.py``).
"""

import io
import json
import math
from pathlib import Path
import random
import sys
import time

import numpy as np

from linkdensity import cli
from linkdensity.conjectures import Status, check_stoimenow, check_voldet_conjecture
from linkdensity.determinant import (
    density_from_det,
    det_density,
    det_density_limit,
    determinant,
    family_determinant,
)
from linkdensity.rational import FamilyParams, TwistVector, component_count, continued_fraction, make_family
from linkdensity.search import SearchStatus, det_density_search, vol_density_search
from linkdensity.tait import (
    MAX_ENUM_BUNDLES,
    Multigraph,
    enumerate_spanning_trees,
    expand_edge,
    multiedge_expand,
    spanning_tree_count,
    tait_graph,
)
from linkdensity.verify import all_twist_vectors, random_twist_vectors
from linkdensity.volume import (
    FUTER_OFFSET,
    V_OCT,
    V_TET,
    bipyramid_upper_bound,
    bipyramid_volume,
    bipyramid_volumes,
    lobachevsky,
    volume_window,
)
from linkdensity.weave import weave_det_bracket

GOLDEN = Path(__file__).parent / "golden"
LIMIT = det_density_limit()
# lines collected for the pytest terminal summary (see conftest.py)
RESULT_LINES = []


def _report(label, ok, elapsed, detail=""):
    line = f"{'PASS' if ok else 'FAIL'} {label} ({elapsed:.2f}s){' ' + detail if detail else ''}"
    RESULT_LINES.append(line)
    if __name__ == "__main__":
        print(line, flush=True)


class _Criterion:
    def __init__(self, label, seconds=None):
        self.label = label
        self.seconds = seconds
        self.detail = ""

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        ok = exc_type is None and (self.seconds is None or elapsed < self.seconds)
        detail = self.detail
        if exc_type is not None:
            detail = f"{exc_type.__name__}: {exc}"
        elif not ok:
            detail = f"exceeded {self.seconds}s"
        _report(self.label, ok, elapsed, detail)
        if exc_type is None and not ok:
            raise AssertionError(f"{self.label}: {elapsed:.2f}s over the {self.seconds}s limit")
        return False


def test_ac01_determinant_triple_agreement():
    with _Criterion("AC1 determinant triple agreement", seconds=60) as c:
        exhaustive = 0
        for tv in all_twist_vectors(6, 4):
            g = tait_graph(tv)
            det = determinant(tv)
            assert len(g.bundles()) <= MAX_ENUM_BUNDLES
            assert det == spanning_tree_count(g) == enumerate_spanning_trees(g), str(tv)
            assert det == continued_fraction(tv)[0]
            exhaustive += 1
        assert exhaustive > 5000
        rng = random.Random(11)
        for _ in range(500):
            n = rng.randint(7, 14)
            tv = TwistVector(tuple(rng.randint(1, 12) for _ in range(n)))
            assert determinant(tv) == spanning_tree_count(tait_graph(tv)), str(tv)
        c.detail = f"{exhaustive} exhaustive + 500 random"


def test_ac02_fibonacci_family():
    with _Criterion("AC2 Fibonacci family closed forms") as c:
        d = {n: determinant(make_family(FamilyParams.of(n))) for n in range(1, 301)}
        for n in range(3, 301):
            assert d[n] == d[n - 1] + d[n - 2]
        checked = 0
        for n in range(3, 51):
            for m in range(2, 201, 2):
                params = FamilyParams.of(n, m)
                expected = (m + 1) * d[n - 1] + d[n - 2]
                assert determinant(make_family(params)) == expected
                assert family_determinant(params) == expected
                checked += 1
        c.detail = f"{checked} R_n^m cases"


def test_ac03_det_density_convergence():
    with _Criterion("AC3 D_det(R_n) increasing to 2 pi ln phi", seconds=30) as c:
        prev_det, det = 1, 2
        prev = density_from_det(det, 2)
        for n in range(3, 10_001):
            prev_det, det = det, det + prev_det
            cur = density_from_det(det, n)
            # strict increase with margin beyond the 1e-9 log tolerance
            assert cur - prev > 1e-9, n
            prev = cur
        assert det == family_determinant(FamilyParams.of(10_000))
        gap = LIMIT - prev
        assert 0 < gap < 1e-3
        # exact-integer log against an independent big-float evaluation
        import mpmath
        mpmath.mp.dps = 40
        ref = float(2 * mpmath.pi * mpmath.log(mpmath.mpf(det)) / 10_000)
        assert abs(ref - prev) < 1e-9
        c.detail = f"gap {gap:.3e}"


def test_ac04_universal_det_bound():
    with _Criterion("AC4 D_det < 2 pi ln phi on 1e4 random links") as c:
        worst = 0.0
        for tv in random_twist_vectors(10_000, max_levels=30, max_entry=30, seed=4):
            d = det_density(tv).density
            assert d < LIMIT, str(tv)
            worst = max(worst, d)
        c.detail = f"max {worst:.6f}"


def test_ac05_constants():
    with _Criterion("AC5 v_tet and v_oct") as c:
        v_tet = 3.0 * lobachevsky(math.pi / 3.0)
        v_oct = 8.0 * lobachevsky(math.pi / 4.0)
        assert abs(v_tet - 1.0149) < 1e-4
        assert abs(v_oct - 3.6638) < 1e-4
        # high-precision references
        assert abs(v_tet - 1.0149416064096536) < 1e-9
        assert abs(v_oct - 3.6638623767088760) < 1e-9
        assert V_TET == v_tet and V_OCT == v_oct
        c.detail = f"v_tet={v_tet:.12f} v_oct={v_oct:.12f}"


def test_ac06_bipyramids():
    with _Criterion("AC6 bipyramid volumes") as c:
        assert abs(bipyramid_volume(4) - V_OCT) < 1e-9
        assert abs(bipyramid_volume(3) - 2.0 * V_TET) < 1e-9
        ks = np.arange(2, 10 ** 6 + 1)
        vols = bipyramid_volumes(ks)
        assert np.all(np.diff(vols) > 0)
        assert np.all(vols < 2.0 * np.pi * np.log(ks))
        c.detail = f"B_1e6 = {vols[-1]:.6f}"


def test_ac07_bipyramid_bound_below_crossings():
    with _Criterion("AC7 bipyramid bound < 2 v_tet c on 1e4 random vectors"):
        for tv in random_twist_vectors(10_000, max_levels=30, max_entry=30, seed=7):
            assert bipyramid_upper_bound(tv) < 2.0 * V_TET * tv.crossings, str(tv)


def test_ac08_rn_windows():
    with _Criterion("AC8 R_n density windows") as c:
        two_vt = 2.0 * V_TET
        prev_lo = prev_hi = None
        for n in range(4, 1001):
            w = volume_window(make_family(FamilyParams.of(n)))
            assert w.certified
            lo = (2 * (n - 2) * V_TET - FUTER_OFFSET) / n
            hi = 2 * (n - 2) * V_TET / n
            assert abs(w.density_lower - lo) < 1e-12
            assert abs(w.density_upper - hi) < 1e-12
            if prev_lo is not None:
                assert w.density_lower > prev_lo and w.density_upper > prev_hi
            assert w.density_upper < two_vt
            prev_lo, prev_hi = w.density_lower, w.density_upper
        for n in range(2031, 4001):
            w = volume_window(make_family(FamilyParams.of(n)))
            assert two_vt - w.density_lower < 0.01
            assert two_vt - w.density_upper < 0.01
        c.detail = "n=4..1000 exact, n=2031..4000 within 0.01"


def test_ac09_det_search():
    with _Criterion("AC9 det-density search, 100 knot targets", seconds=10) as c:
        rng = np.random.default_rng(9)
        targets = rng.uniform(0.1, LIMIT - 0.1, size=100)
        eps = 1e-3
        biggest = 0
        for x in targets:
            r = det_density_search(float(x), eps, knots_only=True)
            assert r.status is SearchStatus.HIT, x
            p = r.params
            tv = make_family(p)
            det = determinant(tv)          # level recursion, independent of the closed form
            assert det == r.det
            assert abs(density_from_det(det, tv.crossings) - x) < eps
            assert p.n % 3 in (0, 1) and p.extra % 2 == 0
            assert component_count(tv) == 1
            biggest = max(biggest, tv.crossings)
        c.detail = f"largest crossing number {biggest}"


def test_ac10_vol_search():
    with _Criterion("AC10 vol-density search, 20 targets", seconds=10) as c:
        eps = 0.05
        for x in np.linspace(0.1, 1.9, 20):
            x = float(x)
            for knots_only in (False, True):
                r = vol_density_search(x, eps, knots_only=knots_only)
                assert r.status is SearchStatus.HIT, x
                tv = make_family(r.params)
                w = volume_window(tv)
                assert w.certified
                assert x - eps < w.density_lower and w.density_upper < x + eps
                assert r.is_knot == (component_count(tv) == 1)
                if knots_only:
                    assert component_count(tv) == 1
        c.detail = "both link and knot modes"


def _random_connected_graph(rng, max_vertices=8):
    v = rng.randint(2, max_vertices)
    pairs = [(rng.randrange(i), i) for i in range(1, v)]   # random spanning tree
    for _ in range(rng.randint(0, 2 * v)):
        a, b = rng.randrange(v), rng.randrange(v)
        if a != b:
            pairs.append((a, b))
    rng.shuffle(pairs)
    return Multigraph.from_pairs(v, pairs)


def test_ac11_multiedge_bracket():
    with _Criterion("AC11 multi-edge expansion and weave bracket") as c:
        rng = random.Random(1111)
        for _ in range(100):
            g = _random_connected_graph(rng)
            eid = rng.choice(g.edges).id
            for m in range(0, 11):
                assert multiedge_expand(g, eid, m) == spanning_tree_count(expand_edge(g, eid, m))
        for _ in range(100):
            te = rng.randint(0, 10 ** rng.randint(1, 30))
            tebar = rng.randint(0, 10 ** rng.randint(1, 30))
            if te + tebar == 0:
                te = 1
            n = rng.randint(2, 40)
            m = 2 * rng.randint(0, 500)
            lo, mid, hi = weave_det_bracket(te + tebar, te, tebar, n, m)
            assert lo - 1e-9 <= mid <= hi + 1e-9
        c.detail = "100 graphs x 11 m, 100 tuples"


def test_ac12_conjecture_checks():
    with _Criterion("AC12 vol < 2 pi log det verified on R_n, R_n^m") as c:
        cases = [FamilyParams.of(n) for n in range(4, 51)]
        cases += [FamilyParams.of(n, m) for n in range(4, 21) for m in range(2, 101, 2)]
        for p in cases:
            w = volume_window(make_family(p))
            det = family_determinant(p)
            assert check_voldet_conjecture(w, det).status is Status.VERIFIED, p.label()
            assert check_stoimenow(w, det).status is not Status.CANDIDATE, p.label()
        c.detail = f"{len(cases)} links"


def _run_cli(argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def _normalize(obj):
    if isinstance(obj, float):
        return format(obj, ".12g")
    if isinstance(obj, dict):
        return {k: _normalize(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_normalize(v) for v in obj]
    return obj


def test_ac13_cli_determinism():
    with _Criterion("AC13 CLI determinism and golden info JSON") as c:
        sweeps = {}
        for workers in ("1", "8"):
            for args in (["--family", "Rn", "--n-from", "2", "--n-to", "300"],
                         ["--family", "Rnm", "--n-from", "4", "--n-to", "200", "--m", "10"]):
                code, out, _ = _run_cli(["family", *args, "--workers", workers])
                assert code == 0
                sweeps.setdefault(tuple(args), set()).add(out.encode("utf-8"))
        assert all(len(v) == 1 for v in sweeps.values())
        for vec, name in (("[4,1,1,2]", "info_4_1_1_2.json"),
                          ("[1]", "info_1.json"),
                          ("[1,1,1,1]", "info_1_1_1_1.json")):
            code, out, _ = _run_cli(["info", vec])
            assert code == 0
            golden = (GOLDEN / name).read_text(encoding="utf-8")
            assert out == golden, name
            assert _normalize(json.loads(out)) == _normalize(json.loads(golden))
        c.detail = "1 vs 8 workers byte-identical"


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_ac") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
