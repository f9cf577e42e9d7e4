import pytest

from ybsets.core import flip
from ybsets.monoid import (
    MonoidView,
    NotBraided,
    cancellativity_bounded,
    check_matched_pair,
    collision_classes,
    power_identities,
    push_left,
    push_right,
    r_s_involutive,
    word_action_left,
    word_action_right,
)


def test_push_matches_r_on_letters(fixtures):
    qs = fixtures["q5"]
    for x in range(5):
        for y in range(5):
            assert push_left(qs, x, (y,)) == ((qs.left(x, y),), qs.right(x, y))
            assert push_right(qs, (x,), y) == (qs.left(x, y), (qs.right(x, y),))


def test_actions_reject_non_braided(fixtures):
    with pytest.raises(NotBraided):
        word_action_left(fixtures["ex33b"], (0,), (1,))


def test_actions_on_trivial():
    qs = flip(3)
    assert word_action_left(qs, (0, 1), (2, 1, 0)) == (2, 1, 0)
    assert word_action_right(qs, (2, 1, 0), (0, 1)) == (2, 1, 0)


@pytest.mark.parametrize("name", ["q5", "ex519", "triv3", "ex64", "perm3"])
def test_matched_pair_at_length_three(fixtures, name):
    rep = check_matched_pair(fixtures[name], 3)
    assert rep.ok, rep.failed()


def test_matched_pair_detects_non_braided(fixtures):
    assert not check_matched_pair(fixtures["ex33b"], 3).ok


def test_q5_cancellation():
    from ybsets import io

    qs = io.load_fixture("q5")
    rep = cancellativity_bounded(qs, 3)
    assert not rep.ok and rep.side == "left"
    assert ((1, 1), (4, 4)) in rep.collisions  # 1.22 = 1.55, letters 1-based
    groups = collision_classes(qs, 0, 2)
    assert [(1, 1), (2, 2), (3, 3), (4, 4)] in groups


def test_ex519_cancellation(fixtures):
    qs = fixtures["ex519"]
    assert cancellativity_bounded(qs, 3).ok
    rep = cancellativity_bounded(qs, 4)
    assert not rep.ok
    assert ((1, 1, 1), (3, 3, 3)) in rep.collisions  # 1.222 = 1.444


def test_power_identities(fixtures):
    rep = power_identities(fixtures["q5"])
    assert rep.p == 2 and rep.identities_hold
    assert rep.collision == (0, 1, 2) and rep.distinct_collision == (0, 1, 2)
    rep = power_identities(flip(3))
    assert rep.identities_hold and rep.collision is None


def test_r_s_involutive(fixtures):
    assert r_s_involutive(flip(3))
    assert not r_s_involutive(fixtures["q5"])


def test_monoid_view_classes(fixtures):
    mv = MonoidView(fixtures["q5"], 3)
    assert mv.same((0, 2, 2), (0, 4, 4))
    assert not mv.same((0, 2), (0, 4))
    assert len(mv.reps(2)) == 9
