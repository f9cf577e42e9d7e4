from fractions import Fraction
from itertools import product
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ybsets.algebra import (
    DegLex,
    dual_dims,
    groebner,
    growth_estimate,
    is_pbw,
    koszul_hilbert_check,
    linear_dims,
    reduced_relations,
    render_poly,
    sparse_rank,
    trivial_dims,
)
from ybsets.core import BudgetExceeded, check_conditions, flip, fixed_points
from ybsets.orbits import dm_orbits, graded_dims
from ybsets.racks import dihedral_quandle

from conftest import quadratic_sets


def rendered_relations(pres):
    return {render_poly(b.poly(), pres.order) for b in pres.relations}


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6), st.data())
def test_sparse_rank_matches_numpy(rows, cols, data):
    mat = np.array(
        data.draw(st.lists(st.lists(st.integers(-2, 2), min_size=cols, max_size=cols), min_size=rows, max_size=rows))
    )
    sparse = [{j: Fraction(int(v)) for j, v in enumerate(row) if v} for row in mat]
    assert sparse_rank(sparse) == np.linalg.matrix_rank(mat)


def test_deglex():
    order = DegLex((2, 0, 1))  # 2 < 0 < 1
    assert order.key((2, 2)) < order.key((0, 2)) < order.key((1, 0)) < order.key((2, 2, 2))


def test_ex519_reduced_relations(fixtures):
    pres = reduced_relations(fixtures["ex519"])
    assert rendered_relations(pres) == {"43-24", "32-24", "42-14", "21-14", "41-13", "34-13", "31-12", "23-12"}


def test_q5_relations_and_dual(fixtures):
    pres = reduced_relations(fixtures["q5"])
    assert pres.s == 16
    assert linear_dims(pres, 2) == (9, 4)
    assert linear_dims(pres, 3) == (10, 0)


@settings(max_examples=40, deadline=None)
@given(quadratic_sets(max_n=3))
def test_linear_dims_equal_orbit_counts(qs):
    pres = reduced_relations(qs)
    for m in (2, 3):
        assert linear_dims(pres, m)[0] == dm_orbits(qs, m).count


@settings(max_examples=40, deadline=None)
@given(quadratic_sets(max_n=3))
def test_dual_dim2_formula(qs):
    # dim A!_2 = n^2 - s - |F|
    pres = reduced_relations(qs)
    assert linear_dims(pres, 2)[1] == qs.n**2 - pres.s - len(fixed_points(qs))


def test_linear_budget():
    with pytest.raises(BudgetExceeded):
        linear_dims(reduced_relations(flip(12)), 6)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_trivial_koszul(n):
    qs = flip(n)
    pres = reduced_relations(qs)
    A = graded_dims(qs, 4).dims
    Ad = dual_dims(pres, 4).dims
    assert list(Ad) == [comb(n, m) for m in range(5)]
    assert koszul_hilbert_check(A, Ad, 4) == [0] * 5
    assert is_pbw(qs).pbw


def test_groebner_q5(fixtures):
    for qs in (fixtures["q5"], dihedral_quandle(5).base):
        gb = groebner(reduced_relations(qs), 4)
        assert set(gb.rendered(extras_only=True)) == {"133-122", "144-122", "155-122", "1222-1112"}
        assert gb.complete
        for m in range(1, 6):
            assert gb.normal_word_count(m) == dm_orbits(qs, m).count


def test_groebner_ex519(fixtures):
    qs = fixtures["ex519"]
    gb4 = groebner(reduced_relations(qs), 4)
    assert set(gb4.rendered(extras_only=True)) == {"244-133", "224-122", "1444-1222", "1333-1222"}
    assert not gb4.complete and gb4.failing_degree == 5
    gb = groebner(reduced_relations(qs), 6)
    assert gb.complete
    assert "12222-11112" in gb.rendered(extras_only=True)
    for m in range(1, 8):
        assert gb.normal_word_count(m) == dm_orbits(qs, m).count


def test_pbw_dih3_fails_everywhere(fixtures):
    v = is_pbw(fixtures["dih3"], exhaustive=True)
    assert not v.pbw and v.tried == 6 and v.obstruction is not None


def test_pbw_implies_involutive_small():
    # PBW algebras of 2-cancellative nondegenerate sets come from involutive r
    from ybsets.search import SearchFilter, enumerate_classes

    for qs in enumerate_classes(3, SearchFilter.of(["nondegenerate", "two_cancellative"])):
        if is_pbw(qs, exhaustive=True).pbw:
            assert check_conditions(qs).involutive


def test_growth_estimates():
    assert growth_estimate(trivial_dims(3, 7)).poly_degree == 2
    assert growth_estimate([1, 5, 9, 10, 10, 10]).gk_estimate == 1
    assert not growth_estimate([1, 2, 4, 8, 16, 32]).conclusive
    assert growth_estimate([1, 2, 3, 5, 5, 5], window=3).poly_degree == 0
    rec = growth_estimate([1, 5, 9, 10, 10, 10]).as_record()
    assert rec["proxy"] is True
