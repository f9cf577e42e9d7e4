import random
from itertools import product

import pytest

from ybsets.core import Permutation, check_conditions, flip, order_of_r
from ybsets.extensions import (
    BlocksNotInvariant,
    ExtensionSpec,
    Partition2,
    build_sigma_tau,
    check_extension_conditions,
    is_automorphism,
    is_generalized_stu,
    mixed_triple_conditions,
    mixed_l1_r2,
    predicted_orbit_profile,
    restricted_automorphisms,
    stu_monoid_bounded,
)
from ybsets.racks import dihedral_quandle


def cyc(n, *cycles):
    return Permutation.from_cycles(n, [list(c) for c in cycles])


def test_example_64(fixtures):
    t3 = flip(3)
    spec = ExtensionSpec(t3, t3, cyc(3, (0, 1, 2)), cyc(3, (0, 1, 2)))
    z = build_sigma_tau(spec)
    assert z == fixtures["ex64"]
    rep = check_conditions(z)
    assert rep.holds("nondegenerate", "square_free", "braided", "two_cancellative")
    assert order_of_r(z) == 6
    ext = check_extension_conditions(spec)
    assert ext.verdict and ext.direct_braided
    prof = predicted_orbit_profile(spec)
    assert prof.literal_condition and prof.literal_order == 6
    assert prof.direct_mixed_lengths == {6: 3} and prof.matches


def test_non_automorphism_breaks_braiding(fixtures):
    X = fixtures["q5"]
    sigma = cyc(5, (0, 1))
    assert not is_automorphism(X, sigma.images)
    ext = check_extension_conditions(ExtensionSpec(X, flip(2), sigma, cyc(2, (0, 1))))
    assert not ext.sigma_aut and not ext.verdict and not ext.direct_braided


def test_even_q_orbits():
    spec = ExtensionSpec(flip(2), flip(4), cyc(2, (0, 1)), cyc(4, (0, 1), (2, 3)))
    prof = predicted_orbit_profile(spec)
    assert prof.direct_mixed_lengths == {2: 8} and prof.direct_order == 2
    assert prof.literal_condition and prof.literal_order == 2


def test_mixed_cycle_lengths_not_two_cancellative():
    spec = ExtensionSpec(flip(2), flip(3), cyc(2, (0, 1)), cyc(3, (0, 1, 2)))
    prof = predicted_orbit_profile(spec)
    assert not prof.direct_two_cancellative and not prof.literal_condition and prof.matches


def test_literal_rule_counterexample():
    # sigma is not a product of equal-length cycles, yet Z is 2-cancellative
    spec = ExtensionSpec(flip(3), flip(4), cyc(3, (0, 1)), cyc(4, (0, 1), (2, 3)))
    prof = predicted_orbit_profile(spec)
    assert prof.direct_two_cancellative and not prof.literal_condition
    assert prof.predicted_two_cancellative and prof.matches


def _random_specs(count, seed=7):
    pool = [flip(2), flip(3), dihedral_quandle(3).base, flip(4), dihedral_quandle(4).base]
    rng = random.Random(seed)
    for _ in range(count):
        X, Y = rng.choice(pool), rng.choice(pool)
        yield ExtensionSpec(X, Y, Permutation(tuple(rng.sample(range(X.n), X.n))), Permutation(tuple(rng.sample(range(Y.n), Y.n))))


def test_nondegenerate_and_involutive_parts():
    for spec in _random_specs(60):
        z = check_conditions(build_sigma_tau(spec))
        X, Y = check_conditions(spec.xpart), check_conditions(spec.ypart)
        assert z.nondegenerate == (X.nondegenerate and Y.nondegenerate)
        sq = (spec.sigma * spec.sigma).is_identity() and (spec.tau * spec.tau).is_identity()
        assert z.involutive == (sq and X.involutive and Y.involutive)


def test_partition_parse_and_validate(fixtures):
    part = Partition2.parse("0,1,2|3 4 5")
    assert part == Partition2.from_sizes(3, 3)
    part.validate(fixtures["ex64"])
    with pytest.raises(BlocksNotInvariant):
        Partition2.parse("0,1,3|2,4,5").validate(fixtures["ex64"])


def test_stu_on_examples(fixtures):
    z = fixtures["ex64"]
    part = Partition2.from_sizes(3, 3)
    assert is_generalized_stu(z, part).verdict
    assert stu_monoid_bounded(z, part, 3).ok
    mixed = mixed_l1_r2(z, part)
    assert mixed.applicable and mixed.verdict and mixed.consistent
    q = fixtures["ex517"]
    p3 = Partition2(((0, 3, 6), (1, 4, 8), (2, 5, 7)))
    assert is_generalized_stu(q, p3).verdict


def test_stu_equivalences_on_fixtures(fixtures):
    cases = [
        (fixtures["ex64"], Partition2.from_sizes(3, 3)),
        (flip(4), Partition2.from_sizes(2, 2)),
        (flip(5), Partition2.from_sizes(2, 3)),
    ]
    for z, part in cases:
        rep = is_generalized_stu(z, part)
        failing = {tag for tag, *_ in rep.failures}
        auts = restricted_automorphisms(z, part)
        for tag in ("stu1", "stu2", "stu3", "stu4"):
            assert auts[tag] == (tag not in failing)
    # Ex 5.17: the actions of one block move the others around
    with pytest.raises(BlocksNotInvariant):
        restricted_automorphisms(fixtures["ex517"], Partition2(((0, 3, 6), (1, 4, 8), (2, 5, 7))))


def test_two_of_three_on_mixed_triples(fixtures):
    for z, part in ((fixtures["ex64"], Partition2.from_sizes(3, 3)),):
        for _, _, X, Y in part.pairs():
            for A, B in ((X, Y), (Y, X)):
                for a, y, x in product(B, A, A):
                    assert sum(mixed_triple_conditions(z, a, y, x)) != 2
