import pytest
from hypothesis import given, settings, strategies as st

from qsieve.autlaws import (
    AutStats,
    FixedType,
    Tag,
    benson_residue,
    count_relation,
    orbit_census_congruences,
    prime_order_bound,
    type2_admissible,
    type2_fixed_relation,
    type4_stats,
    type_admissible,
)
from qsieve.exactmath import is_prime, primes_upto
from qsieve.params import GqOrder, line_count, point_count

O412 = GqOrder(4, 12)
DOILY = GqOrder(2, 2)


@pytest.mark.parametrize("a0,a1,expected", [(0, 17, True), (0, 2, False)])
def test_benson_412(a0, a1, expected):
    assert benson_residue(O412, a0, a1) is expected


def test_benson_identity_doily():
    assert benson_residue(DOILY, 15, 0)


def test_count_relation_examples():
    assert count_relation(DOILY, AutStats(7, 0, 8, 3, 12, 0))
    assert count_relation(DOILY, AutStats(15, 0, 0, 15, 0, 0))
    assert not count_relation(DOILY, AutStats(7, 0, 8, 3, 11, 1))


def test_count_relation_requires_partition():
    with pytest.raises(ValueError):
        count_relation(DOILY, AutStats(7, 0, 8, 3, 12, 1))


def test_orbit_census_examples():
    assert orbit_census_congruences(DOILY, 2, AutStats(7, 0, 8, 3, 12, 0))
    assert orbit_census_congruences(DOILY, 5, AutStats(0, 5, 10, 0, 5, 10))
    # alpha0 must be = 5*49 = 0 (mod 7)
    assert orbit_census_congruences(O412, 7, AutStats(7, 0, 238, 0, 0, 637))
    assert not orbit_census_congruences(O412, 7, AutStats(1, 0, 244, 0, 0, 637))


def test_orbit_census_needs_prime():
    with pytest.raises(ValueError):
        orbit_census_congruences(DOILY, 4, AutStats(15, 0, 0, 15, 0, 0))


def test_type_admissible_412_p11_empty():
    adm = type_admissible(O412, 11)
    assert adm.admissible == frozenset()
    assert all(v.reason for v in adm.verdicts.values())


def test_type_admissible_412_p7_only_type0():
    assert type_admissible(O412, 7).admissible == {Tag.T0}


def test_type_admissible_412_p5_only_type1_dual():
    assert type_admissible(O412, 5).admissible == {Tag.T1d}


def test_type_admissible_12_4_p13():
    assert type_admissible(GqOrder(12, 4), 13).admissible == {Tag.T1d}


def test_type_admissible_errors():
    with pytest.raises(ValueError):
        type_admissible(O412, 9)
    with pytest.raises(ValueError):
        type_admissible(GqOrder(4, 1), 5)


def test_type4_candidates_large_p():
    # p = 3 >= s = 3: s' = s, t' < t with t' = t (mod 3) and s+t | s t' (st+1)
    adm = type_admissible(GqOrder(3, 9), 3)
    cands = adm.verdicts[Tag.T4].candidates
    expected = [(3, tp) for tp in (3, 6) if (3 * tp * 28) % 12 == 0]
    assert list(cands) == expected


def test_type4_candidates_small_p():
    adm = type_admissible(GqOrder(4, 4), 2)
    cands = set(adm.verdicts[Tag.T4].candidates)
    assert cands == {(2, 2), (2, 4), (4, 2)}


def test_type3_thickness_bound():
    # (4,12) with p = 11: t+1 = 2 (mod 11) holds, but 11 >= min(s,t) = 4
    v = type_admissible(O412, 11).verdicts[Tag.T3]
    assert not v.admissible and "min" in v.reason
    # (9,7), p = 3: t-1 = 6 divisible by 3 and 3 < 7
    assert type_admissible(GqOrder(9, 7), 3).verdicts[Tag.T3].admissible


def test_type2_relation_examples():
    assert type2_fixed_relation(DOILY, 2, 7, 3)
    assert not type2_fixed_relation(DOILY, 2, 6, 3)
    assert type2_fixed_relation(O412, 7, 1, 0)


def test_type2_branch_refinement():
    # one fixed point forces p | s; more force p | t
    assert type2_admissible(DOILY, 2, 1) and type2_admissible(DOILY, 2, 7)
    o = GqOrder(3, 5)
    assert type2_admissible(o, 3, 1) and not type2_admissible(o, 3, 4)
    assert type2_admissible(o, 5, 4) and not type2_admissible(o, 5, 1)
    assert type2_admissible(o, 5, 1, dual=True)


def test_type4_stats_example():
    st_ = type4_stats(O412, 5)
    assert (st_.alpha0, st_.alpha1, st_.alpha2) == (105, 0, 140)
    assert st_.beta0 + st_.beta1 + st_.beta2 == 637
    st_.check(O412)


def test_type4_stats_adjacent():
    o = GqOrder(7, 9)
    st_ = type4_stats(o, 8)
    assert st_.beta1 == (o.s + 1) * (o.s * 8 + 1)


def test_type4_stats_rejects_full():
    with pytest.raises(ValueError):
        type4_stats(O412, 12)


def test_type4_stats_partition_sweep():
    for s in range(1, 51):
        for t in range(2, 51):
            o = GqOrder(s, t)
            pc, lc = point_count(o), line_count(o)
            for tp in range(1, t):
                x = type4_stats(o, tp)
                assert x.alpha0 + x.alpha1 + x.alpha2 == pc
                assert x.beta0 + x.beta1 + x.beta2 == lc
                assert count_relation(o, x)


@pytest.mark.parametrize("o,expected", [
    (O412, {2, 3, 5, 7, 11, 13}),
    (GqOrder(5, 5), {2, 3, 5, 13}),
    (GqOrder(1, 1), {2}),
])
def test_prime_order_bound(o, expected):
    assert prime_order_bound(o) == expected


def _bound_brute(o):
    cap = max(o.s, o.t) + 1
    n = o.s * o.t + 1
    return {p for p in range(2, max(cap, n) + 1)
            if all(p % d for d in range(2, p)) and (p <= cap or n % p == 0)}


@settings(max_examples=60)
@given(st.integers(1, 60), st.integers(1, 60))
def test_prime_order_bound_brute(s, t):
    o = GqOrder(s, t)
    assert prime_order_bound(o) == _bound_brute(o)


def test_s_plus_one_prime_forces_type1_dual():
    # the s <= 10^4 range runs in the acceptance suite
    for p in primes_upto(1000):
        s = p - 1
        if s < 3:
            continue
        for t in range(2, s):
            adm = type_admissible(GqOrder(s, t), p)
            assert adm.admissible == {Tag.T1d}, (s, t)


def test_neither_small_residue_leaves_types_0_and_4():
    # if s+1, t+1 avoid 0, 1, 2 mod p, only type 0 with p | st+1 or type 4 survive
    for s in range(2, 40):
        for t in range(2, 40):
            o = GqOrder(s, t)
            for p in primes_upto(45):
                if {(s + 1) % p, (t + 1) % p} & {0, 1, 2}:
                    continue
                adm = type_admissible(o, p).admissible
                assert adm <= {Tag.T0, Tag.T4}
                if Tag.T0 in adm:
                    assert (s * t + 1) % p == 0


def test_prime_bound_matches_type_eliminations():
    # a thick order's primes above max(s+1,t+1) not dividing st+1 admit no type
    for s in range(2, 25):
        for t in range(2, 25):
            o = GqOrder(s, t)
            for p in primes_upto(80):
                if p > max(s, t) + 1 and (s * t + 1) % p:
                    assert type_admissible(o, p).admissible == frozenset()


def test_fixed_type_validation():
    FixedType(Tag.T3, (1, 2))
    with pytest.raises(ValueError):
        FixedType(Tag.T3, (2, 2))
    with pytest.raises(ValueError):
        FixedType(Tag.T0, (1, 1))
    with pytest.raises(ValueError):
        FixedType(Tag.T4)
