from itertools import product

import pytest
from hypothesis import given, settings

from ybsets.core import (
    BadLabel,
    NotBijective,
    Permutation,
    check_conditions,
    fixed_points,
    flip,
    from_function,
    from_table,
    order_of_r,
    r_power_orbits,
)

from conftest import quadratic_sets


def braid_oracle(qs):
    """r12 r23 r12 == r23 r12 r23 on every triple, by brute force."""
    n = qs.n

    def r12(t):
        a, b = qs.r(t[0], t[1])
        return (a, b, t[2])

    def r23(t):
        a, b = qs.r(t[1], t[2])
        return (t[0], a, b)

    return all(r12(r23(r12(t))) == r23(r12(r23(t))) for t in product(range(n), repeat=3))


def two_cancellative_oracle(qs):
    """The literal definition: no r^k with 0 < k < |r| fixes one coordinate and moves the other."""
    n = qs.n
    order = order_of_r(qs)
    for x, y in product(range(n), repeat=2):
        cur = (x, y)
        for _ in range(1, order):
            cur = qs.r(*cur)
            if (cur[0] == x) != (cur[1] == y):
                return False
    return True


def test_permutation_algebra():
    p = Permutation.from_cycles(4, [[0, 1, 2]])
    q = Permutation.from_cycles(4, [[2, 3]])
    assert (p * q)(3) == p(q(3)) == 0
    assert (p * p.inverse()).is_identity()
    assert p.order() == 3 and p.power(3).is_identity()
    assert p.cycle_type() == (3, 1)
    assert p.cycles() == [(0, 1, 2), (3,)]
    with pytest.raises(BadLabel):
        Permutation.from_cycles(3, [[0, 5]])


def test_from_table_validation():
    with pytest.raises(NotBijective):
        from_table(2, [(0, 0)] * 4)
    with pytest.raises(BadLabel):
        from_table(2, [(0, 0), (0, 1), (1, 0), (1, 2)])
    with pytest.raises(NotBijective):
        from_table(2, [(0, 0), (0, 1), (1, 0)])


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_flip_is_symmetric(n):
    rep = check_conditions(flip(n))
    assert rep.holds("nondegenerate", "involutive", "square_free", "two_cancellative", "braided", "quantum_binomial")
    assert fixed_points(flip(n)) == {(x, x) for x in range(n)}


def test_perm3_claims(fixtures):
    qs = fixtures["perm3"]
    rep = check_conditions(qs)
    assert rep.braided and rep.nondegenerate and not rep.two_cancellative
    assert order_of_r(qs) == 6
    assert fixed_points(qs) == set()
    # the orbit xx -> yx -> yy -> zy -> zz -> xz
    orb = next(o for o in r_power_orbits(qs) if 0 in o)
    assert len(orb) == 6


def test_ex33b_claims(fixtures):
    rep = check_conditions(fixtures["ex33b"])
    assert rep.nondegenerate and rep.l1 and rep.r1
    assert not rep.two_cancellative and not rep.braided
    assert fixed_points(fixtures["ex33b"]) == {(2, 0)}


def test_witnesses_present_for_failures(fixtures):
    for qs in fixtures.values():
        rep = check_conditions(qs)
        for flag, val in rep.flags.items():
            assert val == (rep.witnesses.get(flag) is None), flag


@settings(max_examples=150, deadline=None)
@given(quadratic_sets(max_n=3))
def test_braided_matches_oracle(qs):
    rep = check_conditions(qs)
    assert rep.braided == braid_oracle(qs)
    if rep.nondegenerate:
        # a nondegenerate r is braided iff l1, r1 and lr3 hold
        assert rep.braided == (rep.l1 and rep.r1 and rep.lr3)


@settings(max_examples=150, deadline=None)
@given(quadratic_sets(max_n=3))
def test_two_cancellative_matches_literal_definition(qs):
    assert check_conditions(qs).two_cancellative == two_cancellative_oracle(qs)


@settings(max_examples=100, deadline=None)
@given(quadratic_sets(max_n=3))
def test_flags_invariant_under_relabeling(qs):
    s = list(range(qs.n))[::-1]
    assert check_conditions(qs).flags == check_conditions(qs.relabel(s)).flags


def test_relabel_convention():
    qs = from_function(3, lambda x, y: ((y + 1) % 3, x))
    s = [1, 2, 0]
    t = qs.relabel(s)
    for x, y in product(range(3), repeat=2):
        a, b = qs.r(x, y)
        assert t.r(s[x], s[y]) == (s[a], s[b])


def test_restrict_block():
    qs = flip(4)
    sub = qs.restrict([1, 3])
    assert sub.n == 2 and check_conditions(sub).involutive
