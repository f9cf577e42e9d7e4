from collections import Counter
from itertools import product
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ybsets.core import BudgetExceeded, flip
from ybsets.orbits import (
    classify_x3,
    decode,
    dihedral_orbit_closed_form,
    dm_orbits,
    encode,
    graded_dims,
    r_orbits,
)
from ybsets.racks import dihedral_quandle

from conftest import quadratic_sets


def bfs_orbits(qs, m):
    """D_m orbits by plain BFS over words, applying r and r^-1 at every position."""
    inv = {qs.r(x, y): (x, y) for x in range(qs.n) for y in range(qs.n)}
    seen = {}
    out = []
    for w in product(range(qs.n), repeat=m):
        if w in seen:
            continue
        orb = {w}
        stack = [w]
        while stack:
            u = stack.pop()
            for i in range(m - 1):
                for f in (qs.r, lambda a, b: inv[(a, b)]):
                    v = u[:i] + f(u[i], u[i + 1]) + u[i + 2 :]
                    if v not in orb:
                        orb.add(v)
                        stack.append(v)
        for u in orb:
            seen[u] = len(out)
        out.append(frozenset(orb))
    return out


@given(st.integers(1, 5), st.integers(1, 4), st.data())
def test_word_codec_roundtrip(n, m, data):
    w = tuple(data.draw(st.lists(st.integers(0, n - 1), min_size=m, max_size=m)))
    assert decode(encode(w, n), n, m) == w


@settings(max_examples=60, deadline=None)
@given(quadratic_sets(max_n=3), st.integers(1, 4))
def test_dm_orbits_match_bfs(qs, m):
    part = dm_orbits(qs, m)
    expected = sorted(sorted(encode(w, qs.n) for w in o) for o in bfs_orbits(qs, m))
    assert sorted(part.orbits()) == expected
    assert part.count == len(expected)
    # representatives are the minimal words of their orbits
    for j in range(part.count):
        assert min(encode(w, qs.n) for w in part.members(j)) == encode(part.rep_word(j), qs.n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_trivial_dims_are_commutative_monomials(n):
    assert graded_dims(flip(n), 5).dims == tuple(comb(n + m - 1, m) for m in range(6))


def test_budget():
    with pytest.raises(BudgetExceeded):
        dm_orbits(flip(10), 8)


def test_dih5_r_orbits():
    part = r_orbits(dihedral_quandle(5).base)
    assert part.count == 9 and part.q == 4 and part.fixed_count == 5
    assert sorted(ln for ln in part.lengths if ln > 1) == [5, 5, 5, 5]


def test_ex517_census(fixtures):
    c = Counter(r_orbits(fixtures["ex517"]).lengths)
    assert c == {9: 6, 3: 6, 1: 9}


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_dihedral_closed_form(p):
    qs = dihedral_quandle(p).base
    for x, y in product(range(p), repeat=2):
        cur = (x, y)
        for k in range(2 * p):
            assert dihedral_orbit_closed_form(p, x, y, k) == cur
            cur = qs.r(*cur)


def test_x3_census_bounds(fixtures):
    for name in ("q5", "dih3", "ex519", "ex517", "triv4", "ex64"):
        c = classify_x3(fixtures[name])
        assert c.bounds_checked and c.bounds_ok, name
    # Q5 has no square-free X^3 orbits
    assert classify_x3(fixtures["q5"]).counts["square_free"] == 0
    # Triv(n): type (ii) orbits have exactly 3 elements, square-free ones 6
    c = classify_x3(flip(4))
    assert c.min_length["type_ii"] == c.max_length["type_ii"] == 3
    assert c.min_length["square_free"] == c.max_length["square_free"] == 6
    assert c.counts["square_free"] == comb(4, 3)


def test_ex519_dims_settle_by_bfs(fixtures):
    # plain BFS confirms that dim A_m stops growing at 12
    qs = fixtures["ex519"]
    assert [len(bfs_orbits(qs, m)) for m in range(1, 7)] == [4, 8, 11, 12, 12, 12]
    orbit = next(o for o in bfs_orbits(qs, 5) if (0, 1, 1, 1, 1) in o)
    assert (0, 0, 0, 0, 1) in orbit
