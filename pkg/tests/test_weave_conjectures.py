import math
import random

import pytest
from hypothesis import given, strategies as st

from linkdensity.conjectures import Status, check_stoimenow, check_voldet_conjecture
from linkdensity.determinant import family_determinant
from linkdensity.rational import FamilyParams, make_family
from linkdensity.volume import V_OCT, V_TET, VolumeWindow, volume_window
from linkdensity.weave import belted_weave_bound, weave_det_bracket, weave_target_m


def test_target_m_examples():
    assert weave_target_m(7, V_OCT) == 0
    assert weave_target_m(10, V_OCT / 2) == 100
    m = weave_target_m(1000, 1.0)
    assert m % 2 == 0
    assert abs(10 ** 6 * V_OCT / (10 ** 6 + m) - 1.0) < 1e-3


@pytest.mark.parametrize("n, x", [(1, 1.0), (5, 0.0), (5, -1.0), (5, 4.0)])
def test_target_m_rejects(n, x):
    with pytest.raises(ValueError):
        weave_target_m(n, x)


def test_bracket_triangle():
    lo, mid, hi = weave_det_bracket(3, 2, 1, n=2, m=2, base_crossings=3)
    assert mid == pytest.approx(2 * math.pi * math.log(7) / 5)
    assert lo <= mid <= hi


def test_bracket_identity_case():
    lo, mid, hi = weave_det_bracket(40, 15, 25, n=3, m=0)
    assert lo == mid == hi


def test_bracket_rejects_bad_split():
    with pytest.raises(ValueError):
        weave_det_bracket(10, 3, 3, n=3, m=2)


@given(st.integers(0, 10 ** 40), st.integers(0, 10 ** 40), st.integers(2, 60), st.integers(0, 10 ** 4))
def test_bracket_contains_middle(te, tebar, n, half_m):
    if te + tebar == 0:
        te = 1
    lo, mid, hi = weave_det_bracket(te + tebar, te, tebar, n, 2 * half_m)
    assert lo - 1e-9 <= mid <= hi + 1e-9


def test_bracket_gap_shrinks():
    gaps = []
    for n in (5, 50, 500):
        lo, _, hi = weave_det_bracket(10, 5, 5, n, n)
        gaps.append(hi - lo)
    assert gaps[0] > gaps[1] > gaps[2]


def test_belted_bound():
    assert belted_weave_bound(3) == pytest.approx(13 * V_OCT)


def _window(lo, hi, certified=True):
    return VolumeWindow(lo, hi, lo, hi, certified)


def test_rules():
    assert check_voldet_conjecture(_window(1, 2), 100).status is Status.VERIFIED
    assert check_voldet_conjecture(_window(50, 60), 2).status is Status.CANDIDATE
    assert check_voldet_conjecture(_window(1, 60), 100).status is Status.INCONCLUSIVE
    assert check_voldet_conjecture(_window(1, 2, certified=False), 100).status is Status.INCONCLUSIVE
    assert check_stoimenow(_window(0, 0), 1).status is not Status.VERIFIED


@given(st.floats(0, 100), st.floats(0, 100), st.integers(1, 10 ** 12))
def test_order_soundness(a, b, det):
    lo, hi = min(a, b), max(a, b)
    for check in (check_voldet_conjecture, check_stoimenow):
        v = check(_window(lo, hi), det)
        if v.status is Status.VERIFIED:
            assert check(_window(lo, hi), det).lhs < v.rhs
            assert check(_window(hi, hi), det).status is not Status.CANDIDATE
        flipped = check(_window(hi, lo), det).status
        assert flipped is Status.INCONCLUSIVE or lo == hi


def test_r20_stoimenow():
    p = FamilyParams.of(20)
    w = volume_window(make_family(p))
    assert w.upper == pytest.approx(36 * V_TET)
    v = check_stoimenow(w, family_determinant(p))
    assert v.status is Status.VERIFIED
