import pytest
from hypothesis import given, strategies as st

from qsieve.params import GqOrder, basic_laws, line_count, payne_bound_ok, point_count


@pytest.mark.parametrize("s,t,expected", [(4, 12, 245), (2, 2, 15), (1, 1, 4)])
def test_point_count(s, t, expected):
    assert point_count(GqOrder(s, t)) == expected


@pytest.mark.parametrize("s,t,expected", [(4, 12, 637), (2, 2, 15), (12, 4, 245)])
def test_line_count(s, t, expected):
    # (12,4) is the dual of (4,12): its lines are the 245 points of (4,12)
    assert line_count(GqOrder(s, t)) == expected


@given(st.integers(1, 10**6), st.integers(1, 10**6))
def test_duality_swaps_counts(s, t):
    o = GqOrder(s, t)
    assert point_count(o.dual()) == line_count(o)
    assert line_count(o.dual()) == point_count(o)


def test_order_validation():
    with pytest.raises(ValueError):
        GqOrder(0, 4)
    with pytest.raises(TypeError):
        GqOrder(2.0, 2)
    assert GqOrder(2, 2).thick
    assert not GqOrder(3, 1).thick and not GqOrder(1, 3).thick


def test_basic_laws_12_4_feasible():
    r = basic_laws(GqOrder(12, 4))
    assert r.feasible and r.divisibility_ok and r.higman_ok and r.interval_ok
    assert (r.point_count, r.line_count) == (637, 245)


def test_basic_laws_3_4_divisibility():
    r = basic_laws(GqOrder(3, 4))
    assert not r.divisibility_ok and not r.feasible


def test_basic_laws_18_4_higman():
    # 18 > 16 = t^2, so the Higman bound fails; the interval law only covers s < t^2
    r = basic_laws(GqOrder(18, 4))
    assert not r.higman_ok and not r.feasible
    assert r.interval_ok


def test_interval_boundary_s_equals_t_squared():
    r = basic_laws(GqOrder(16, 4))
    assert r.interval_ok and r.higman_ok


def test_interval_rejects_gap():
    # 13 lies strictly between t^2 - t = 12 and t^2 = 16
    assert not basic_laws(GqOrder(13, 4)).interval_ok


def test_non_thick_skip_higman_and_interval():
    r = basic_laws(GqOrder(50, 1))
    assert r.higman_ok and r.interval_ok
    assert r.divisibility_ok  # s+1 divides s*1*(s+1)*2


def test_divisibility_brute_force():
    for s in range(1, 31):
        for t in range(1, 31):
            assert basic_laws(GqOrder(s, t)).divisibility_ok == ((s * t * (s + 1) * (t + 1)) % (s + t) == 0)


def test_square_orders_satisfy_interval():
    assert all(basic_laws(GqOrder(s, s)).interval_ok for s in range(2, 101))


def test_payne_examples():
    assert payne_bound_ok(3, 6, GqOrder(12, 4), dual=True)
    assert payne_bound_ok(1, 999, GqOrder(3, 3))
    assert not payne_bound_ok(4, 7, GqOrder(12, 4), dual=True)


def test_payne_preconditions():
    with pytest.raises(ValueError):
        payne_bound_ok(2, 2, GqOrder(1, 3))
    with pytest.raises(ValueError):
        payne_bound_ok(0, 2, GqOrder(3, 3))
