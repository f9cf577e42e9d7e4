"""The braided monoid S(X, r) at bounded length.

Two words are equal in S iff they have the same length and lie in the same
D_m(r)-orbit.  The self-actions of S are computed letter by letter: pushing a
letter x through a word u with r yields ^x u on one side and x^u on the other.
Longer acting words are handled by ML1 / MR1.  Every check here is labelled
"up to length L"; nothing is claimed about unbounded lengths.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .core import BudgetExceeded, QuadraticSet, YBError, actions, check_conditions
from .orbits import DEFAULT_BUDGET, dm_orbits

Word = tuple[int, ...]


class NotBraided(YBError):
    pass


def push_left(qs: QuadraticSet, x: int, u: Word) -> tuple[Word, int]:
    """(^x u, x^u) for a single letter x."""
    out = []
    cur = x
    for t in u:
        a, cur = qs.r(cur, t)
        out.append(a)
    return tuple(out), cur


def push_right(qs: QuadraticSet, u: Word, y: int) -> tuple[int, Word]:
    """(^u y, u^y) for a single letter y."""
    out = []
    cur = y
    for t in reversed(u):
        cur, b = qs.r(t, cur)
        out.append(b)
    return cur, tuple(reversed(out))


def _require_braided(qs: QuadraticSet) -> None:
    rep = check_conditions(qs)
    if not (rep.braided and rep.nondegenerate):
        raise NotBraided("word actions are only guaranteed well defined for nondegenerate braided sets")


def _left(qs: QuadraticSet, a: Word, u: Word) -> Word:
    for x in reversed(a):
        u = push_left(qs, x, u)[0]
    return u


def _right(qs: QuadraticSet, u: Word, a: Word) -> Word:
    for y in a:
        u = push_right(qs, u, y)[1]
    return u


def word_action_left(qs: QuadraticSet, a: Word, u: Word, check: bool = True) -> Word:
    """^a u, via ML2 for a single letter and ML1 for longer a."""
    if check:
        _require_braided(qs)
    return _left(qs, tuple(a), tuple(u))


def word_action_right(qs: QuadraticSet, u: Word, a: Word, check: bool = True) -> Word:
    """u^a, via MR2 for a single letter and MR1 for longer a."""
    if check:
        _require_braided(qs)
    return _right(qs, tuple(u), tuple(a))


class MonoidView:
    """Classes of S up to degree L as (degree, orbit id) pairs."""

    def __init__(self, qs: QuadraticSet, L: int, budget: int = DEFAULT_BUDGET):
        if qs.n**L > budget:
            raise BudgetExceeded(f"|X^{L}| = {qs.n ** L} exceeds the orbit budget {budget}")
        self.qs = qs
        self.L = L
        self.parts = {m: dm_orbits(qs, m, budget) for m in range(1, L + 1)}

    def cls(self, w: Word) -> tuple[int, int]:
        if not w:
            return (0, 0)
        v = 0
        n = self.qs.n
        for a in w:
            v = v * n + a
        return (len(w), int(self.parts[len(w)].class_of[v]))

    def same(self, u: Word, v: Word) -> bool:
        return len(u) == len(v) and self.cls(u) == self.cls(v)

    def reps(self, m: int) -> list[Word]:
        if m == 0:
            return [()]
        part = self.parts[m]
        return [part.rep_word(j) for j in range(part.count)]

    def rep_of(self, w: Word) -> Word:
        m, j = self.cls(w)
        return () if m == 0 else self.parts[m].rep_word(j)

    def words(self, m: int) -> list[Word]:
        return list(product(range(self.qs.n), repeat=m))


@dataclass
class MatchedPairReport:
    L: int
    witnesses: dict[str, tuple | None] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(w is None for w in self.witnesses.values())

    def failed(self) -> list[str]:
        return [k for k, w in self.witnesses.items() if w is not None]


AXIOMS = ("ML0", "ML1", "ML2", "MR0", "MR1", "MR2", "M3", "well_defined_left", "well_defined_right")


def check_matched_pair(qs: QuadraticSet, L: int = 3, budget: int = DEFAULT_BUDGET) -> MatchedPairReport:
    """ML0-ML2, MR0-MR2, M3 and well-definedness on classes, all lengths <= L.

    Well-definedness is checked on all pairs of words; the identities are then
    checked on class representatives, which suffices once the actions are known
    to descend to classes.  Non-braided input is accepted so that failures can
    be witnessed.
    """
    mv = MonoidView(qs, L, budget)
    rep = MatchedPairReport(L, {k: None for k in AXIOMS})
    wit = rep.witnesses

    def note(name, w):
        if wit[name] is None:
            wit[name] = w

    for m in range(1, L + 1):
        for u in mv.words(m):
            if _left(qs, u, ()) != () or _right(qs, (), u) != ():
                note("ML0" if _left(qs, u, ()) != () else "MR0", (u,))
            if _left(qs, (), u) != u:
                note("ML0", ((), u))
            if _right(qs, u, ()) != u:
                note("MR0", (u, ()))

    # well-definedness: results must only depend on the classes of the inputs
    for mu in range(1, L + 1):
        for mv_ in range(1, L + 1):
            for u in mv.words(mu):
                ru = mv.rep_of(u)
                for v in mv.words(mv_):
                    rv = mv.rep_of(v)
                    if wit["well_defined_left"] is None and not mv.same(_left(qs, u, v), _left(qs, ru, rv)):
                        note("well_defined_left", (u, v, ru, rv))
                    if wit["well_defined_right"] is None and not mv.same(_right(qs, u, v), _right(qs, ru, rv)):
                        note("well_defined_right", (u, v, ru, rv))

    reps = {m: mv.reps(m) for m in range(0, L + 1)}
    for ma in range(1, L):
        for mb in range(1, L - ma + 1):
            for a in reps[ma]:
                for b in reps[mb]:
                    ab = mv.rep_of(a + b)
                    for mu in range(1, L + 1):
                        for u in reps[mu]:
                            if not mv.same(_left(qs, ab, u), _left(qs, a, _left(qs, b, u))):
                                note("ML1", (a, b, u))
                            if not mv.same(_right(qs, u, ab), _right(qs, _right(qs, u, a), b)):
                                note("MR1", (u, a, b))
    for ma in range(1, L + 1):
        for a in reps[ma]:
            for mu in range(1, L):
                for mvv in range(1, L - mu + 1):
                    for u in reps[mu]:
                        for v in reps[mvv]:
                            uv = mv.rep_of(u + v)
                            lhs = _left(qs, a, uv)
                            rhs = _left(qs, a, u) + _left(qs, _right(qs, a, u), v)
                            if not mv.same(lhs, rhs):
                                note("ML2", (a, u, v))
                            lhs = _right(qs, uv, a)
                            rhs = _right(qs, u, _left(qs, v, a)) + _right(qs, v, a)
                            if not mv.same(lhs, rhs):
                                note("MR2", (u, v, a))
    for mu in range(1, L):
        for mvv in range(1, L - mu + 1):
            for u in reps[mu]:
                for v in reps[mvv]:
                    if not mv.same(_left(qs, u, v) + _right(qs, u, v), u + v):
                        note("M3", (u, v))
    return rep


@dataclass(frozen=True)
class CancellationReport:
    L: int
    ok: bool
    side: str | None = None
    witness: tuple | None = None  # (a, u, v) with a.u = a.v (or u.a = v.a), u != v in S
    collisions: tuple = ()  # all colliding pairs for the first failing (side, degree, letter)


def cancellativity_bounded(qs: QuadraticSet, L: int, budget: int = DEFAULT_BUDGET) -> CancellationReport:
    """Injectivity of class(u) -> class(a.u) and class(u) -> class(u.a) for |u| < L."""
    mv = MonoidView(qs, L, budget)
    n = qs.n
    for m in range(1, L):
        reps = mv.reps(m)
        for side in ("left", "right"):
            for a in range(n):
                seen: dict[tuple[int, int], Word] = {}
                pairs = []
                for u in reps:
                    w = (a,) + u if side == "left" else u + (a,)
                    c = mv.cls(w)
                    if c in seen:
                        pairs.append((seen[c], u))
                    else:
                        seen[c] = u
                if pairs:
                    # every member of a collision class against its first member
                    return CancellationReport(L, False, side, (a,) + pairs[0], tuple(pairs))
    return CancellationReport(L, True)


def collision_classes(qs: QuadraticSet, a: int, m: int, side: str = "left") -> list[list[Word]]:
    """Groups of degree-m class representatives identified after multiplying by a."""
    mv = MonoidView(qs, m + 1)
    groups: dict[tuple[int, int], list[Word]] = {}
    for u in mv.reps(m):
        w = (a,) + u if side == "left" else u + (a,)
        groups.setdefault(mv.cls(w), []).append(u)
    return [g for g in groups.values() if len(g) > 1]


@dataclass
class PowerReport:
    p: int
    witnesses: dict[str, tuple | None]
    collision: tuple | None  # (a, x, y), x != y, a x^p = a y^p
    distinct_collision: tuple | None  # same with a, x, y pairwise distinct

    @property
    def identities_hold(self) -> bool:
        return all(w is None for w in self.witnesses.values())


def power_identities(qs: QuadraticSet, budget: int = DEFAULT_BUDGET) -> PowerReport:
    acts = actions(qs)
    if not acts.nondegenerate:
        raise NotBraided("power identities need a nondegenerate set")
    p = acts.p
    n = qs.n
    mv = MonoidView(qs, 2 * p, budget)
    L, R = qs.left, qs.right
    wit: dict[str, tuple | None] = {"power_push": None, "power_actions": None, "power_absorb": None, "powers_commute": None}

    def note(k, w):
        if wit[k] is None:
            wit[k] = w

    def Rpow(a, x, m):
        for _ in range(m):
            a = R(a, x)
        return a

    for a, x in product(range(n), repeat=2):
        for m in range(1, p + 1):
            xm = (x,) * m
            if not mv.same((a,) + xm, (L(a, x),) * m + (Rpow(a, x, m),)):
                note("power_push", (a, x, m))
            if not mv.same(_left(qs, (a,), xm), (L(a, x),) * m) or not mv.same(
                _right(qs, xm, (a,)), (R(x, a),) * m
            ):
                note("power_actions", (a, x, m))
        xp = (x,) * p
        if not mv.same((a,) + xp, (a,) + (R(L(a, x), a),) * p):
            note("power_absorb", (a, x, "left"))
        if not mv.same(xp + (a,), (L(a, R(x, a)),) * p + (a,)):
            note("power_absorb", (a, x, "right"))
    for x, y in product(range(n), repeat=2):
        if not mv.same((x,) * p + (y,) * p, (y,) * p + (x,) * p):
            note("powers_commute", (x, y))
    collision = None
    distinct = None
    for a, x, y in product(range(n), repeat=3):
        if x < y and mv.same((a,) + (x,) * p, (a,) + (y,) * p):
            if collision is None:
                collision = (a, x, y)
            if distinct is None and a != x and a != y:
                distinct = (a, x, y)
    return PowerReport(p, wit, collision, distinct)


def r_s_involutive(qs: QuadraticSet, L: int = 2) -> bool:
    """r_S(u, v) = (^u v, u^v) squared is the identity on classes of length <= L."""
    mv = MonoidView(qs, L)
    for mu in range(1, L + 1):
        for mvv in range(1, L + 1):
            for u in mv.reps(mu):
                for v in mv.reps(mvv):
                    a, b = _left(qs, u, v), _right(qs, u, v)
                    c, d = _left(qs, a, b), _right(qs, a, b)
                    if not (mv.same(c, u) and mv.same(d, v)):
                        return False
    return True
