import itertools

import pytest

from qsieve.autlaws import Tag, type_admissible
from qsieve.params import GqOrder, point_count
from qsieve.witness import (
    AutomorphismError,
    IncidenceModel,
    ModelAutomorphism,
    axiom_violations,
    automorphism_from_points,
    build_doily,
    build_dual_grid,
    build_grid,
    classify_fixed_substructure,
    dual_model,
    induced_automorphism,
    induced_automorphisms,
    is_gq,
    law_violations,
    measure_stats,
    mutate_incidence,
    payne_check,
    sample_symmetries,
    symmetries,
    verify_all,
)

DOILY = build_doily()
TRANSPOSITION = (1, 0, 2, 3, 4, 5)
FIVE_CYCLE = (1, 2, 3, 4, 0, 5)


@pytest.mark.parametrize("s", range(1, 7))
def test_grids_are_gqs(s):
    g = build_grid(s)
    assert (g.npoints, g.nlines, g.order) == ((s + 1) ** 2, 2 * (s + 1), GqOrder(s, 1))
    assert is_gq(g)


def test_grid_counts():
    assert (build_grid(2).npoints, build_grid(2).nlines) == (9, 6)
    d = build_dual_grid(2)
    assert (d.npoints, d.nlines, d.order) == (6, 9, GqOrder(1, 2))
    assert (build_dual_grid(1).npoints, build_dual_grid(1).nlines) == (4, 4)
    assert all(is_gq(build_dual_grid(t)) for t in range(1, 5))


@pytest.mark.parametrize("t", range(1, 5))
def test_double_dual_round_trip(t):
    g = build_grid(t)
    dd = dual_model(dual_model(g))
    assert dd.order == g.order
    assert set(dd.lines) == set(g.lines)


def test_doily():
    assert (DOILY.npoints, DOILY.nlines) == (15, 15) == (point_count(GqOrder(2, 2)),) * 2
    assert axiom_violations(DOILY) == []
    assert DOILY.points[0] == "12"


def test_mutated_doily_rejected():
    bad = mutate_incidence(DOILY, 0, 5)
    assert not is_gq(bad)
    assert axiom_violations(bad)


def test_model_validation():
    from qsieve.witness import ModelError
    with pytest.raises(ModelError):
        IncidenceModel([0, 1], [[0, 1], [1, 0]], GqOrder(1, 1))
    with pytest.raises(ModelError):
        IncidenceModel([0, 1], [[0, 2]], GqOrder(1, 1))
    with pytest.raises(ValueError):
        build_grid(0)


def test_json_round_trip():
    text = DOILY.to_json()
    back = IncidenceModel.from_json(text)
    assert back.to_json() == text
    assert is_gq(back)


def test_identity():
    aut = induced_automorphism(DOILY, tuple(range(6)))
    assert aut.point_map == tuple(range(15)) and aut.order == 1
    assert measure_stats(DOILY, aut).as_tuple() == (15, 0, 0, 15, 0, 0)
    ft = classify_fixed_substructure(DOILY, aut)
    assert ft.tag is Tag.T4 and ft.shape == (2, 2)


def test_transposition():
    aut = induced_automorphism(DOILY, TRANSPOSITION)
    assert aut.order == 2
    assert measure_stats(DOILY, aut).as_tuple() == (7, 0, 8, 3, 12, 0)
    assert classify_fixed_substructure(DOILY, aut).tag is Tag.T2
    assert law_violations(DOILY, aut) == []


def test_five_cycle():
    aut = induced_automorphism(DOILY, FIVE_CYCLE)
    st = measure_stats(DOILY, aut)
    assert aut.order == 5
    assert (st.alpha0, st.beta0) == (0, 0) and st.alpha1 % 4 == 1
    assert classify_fixed_substructure(DOILY, aut).tag is Tag.T0


def test_doily_exhaustive():
    summary = verify_all(DOILY, induced_automorphisms(DOILY))
    assert summary.line() == "720/720 automorphisms pass"
    assert summary.tag_counts == {"T0": 144, "T1": 40, "T1d": 40, "T2": 60, "T2d": 15}


def test_prime_order_tags_admissible():
    adm = {p: type_admissible(GqOrder(2, 2), p).admissible for p in (2, 3, 5)}
    for base in symmetries(DOILY):
        aut = induced_automorphism(DOILY, base)
        if aut.order in adm:
            assert classify_fixed_substructure(DOILY, aut).tag in adm[aut.order]


@pytest.mark.parametrize("s", [1, 2, 3])
def test_grid_groups_exhaustive(s):
    for build in (build_grid, build_dual_grid):
        m = build(s)
        summary = verify_all(m, induced_automorphisms(m))
        assert summary.total == 2 * (len(list(itertools.permutations(range(s + 1))))) ** 2
        assert summary.ok, summary.failures[:3]


@pytest.mark.parametrize("s", [4, 5, 6])
def test_grid_samples(s):
    m = build_grid(s)
    summary = verify_all(m, induced_automorphisms(m, sample_symmetries(m, 1000, seed=s)))
    assert summary.ok and summary.total == 1000


def test_sampling_reproducible():
    g = build_grid(4)
    assert sample_symmetries(g, 5, seed=1) == sample_symmetries(g, 5, seed=1)
    with pytest.raises(ValueError):
        sample_symmetries(DOILY, 3)


def test_raw_entry_rejects_non_automorphism():
    with pytest.raises(AutomorphismError):
        automorphism_from_points(DOILY, [1, 0] + list(range(2, 15)))
    with pytest.raises(AutomorphismError):
        automorphism_from_points(DOILY, [0] * 15)


def test_bad_symmetry_description():
    with pytest.raises(ValueError):
        induced_automorphism(DOILY, (0, 0, 1, 2, 3, 4))


def test_negative_control_corrupted_incidence():
    bad = mutate_incidence(DOILY, 0, 5)
    auts = (ModelAutomorphism(a.point_map, a.line_map, a.base) for a in induced_automorphisms(DOILY))
    summary = verify_all(bad, auts, check_incidence=False)
    assert not summary.ok
    laws = {law for _, ls in summary.failures for law in ls}
    assert {"benson", "count-relation"} & laws


def test_incidence_check_catches_foreign_map():
    aut = induced_automorphism(DOILY, TRANSPOSITION)
    bad = mutate_incidence(DOILY, 0, 5)
    assert "incidence" in law_violations(bad, aut)


def test_payne_on_doily():
    ok, examined = payne_check(DOILY)
    assert ok and examined > 0
