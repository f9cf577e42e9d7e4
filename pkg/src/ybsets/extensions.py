"""Extensions Z = X ⊔ Y: the σ/τ construction, strong twisted unions and mixed conditions.

Labels: X keeps [0, |X|), Y is shifted to [|X|, |X| + |Y|).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .core import (
    Permutation,
    QuadraticSet,
    YBError,
    braid_relation_witness,
    check_conditions,
    from_table,
    lcm,
    order_of_r,
    r_power_orbits,
)


class BlocksNotInvariant(YBError):
    pass


@dataclass(frozen=True)
class ExtensionSpec:
    xpart: QuadraticSet
    ypart: QuadraticSet
    sigma: Permutation
    tau: Permutation

    def __post_init__(self) -> None:
        if self.sigma.size != self.xpart.n or self.tau.size != self.ypart.n:
            raise ValueError("sigma and tau must act on xpart and ypart respectively")


def build_sigma_tau(spec: ExtensionSpec) -> QuadraticSet:
    """r(x, y) = (τ(y), σ(x)) and r(y, x) = (σ(x), τ(y)) on mixed pairs."""
    m, k = spec.xpart.n, spec.ypart.n
    n = m + k
    table = []
    for a in range(n):
        for b in range(n):
            if a < m and b < m:
                table.append(spec.xpart.r(a, b))
            elif a >= m and b >= m:
                c, d = spec.ypart.r(a - m, b - m)
                table.append((c + m, d + m))
            elif a < m:
                table.append((spec.tau(b - m) + m, spec.sigma(a)))
            else:
                table.append((spec.sigma(b), spec.tau(a - m) + m))
    return from_table(n, table)


def is_automorphism(qs: QuadraticSet, f: Sequence[int]) -> bool:
    """(f × f) ∘ r = r ∘ (f × f)."""
    for x, y in product(range(qs.n), repeat=2):
        a, b = qs.r(x, y)
        if qs.r(f[x], f[y]) != (f[a], f[b]):
            return False
    return True


def _square_invariant(qs: QuadraticSet, s2: Sequence[int]) -> bool:
    n = qs.n
    return all(
        qs.left(s2[x], y) == qs.left(x, y) and qs.right(y, s2[x]) == qs.right(y, x)
        for x in range(n)
        for y in range(n)
    )


@dataclass
class ExtensionReport:
    parts_braided: bool
    sigma_aut: bool
    tau_aut: bool
    sigma_square_condition: bool
    tau_square_condition: bool
    verdict: bool
    direct_braided: bool
    witness: tuple | None

    @property
    def consistent(self) -> bool:
        return self.verdict == self.direct_braided


def check_extension_conditions(spec: ExtensionSpec) -> ExtensionReport:
    """Predict the braid relation on Z from σ, τ; compare with the direct check."""
    X, Y = spec.xpart, spec.ypart
    braided = check_conditions(X).braided and check_conditions(Y).braided
    s, t = spec.sigma, spec.tau
    s_aut = is_automorphism(X, s.images)
    t_aut = is_automorphism(Y, t.images)
    s_sq = _square_invariant(X, (s * s).images)
    t_sq = _square_invariant(Y, (t * t).images)
    verdict = braided and s_aut and t_aut and s_sq and t_sq
    z = build_sigma_tau(spec)
    w = braid_relation_witness(z)
    return ExtensionReport(braided, s_aut, t_aut, s_sq, t_sq, verdict, w is None, w)


def _square_cycle_lengths(p: Permutation) -> dict[int, int]:
    """Length of the σ²-cycle through each point."""
    out = {}
    for cyc in p.cycles():
        c = len(cyc)
        ln = c // 2 if c % 2 == 0 else c
        for i in cyc:
            out[i] = ln
    return out


def _uniform(p: Permutation) -> int | None:
    ct = set(p.cycle_type())
    return ct.pop() if len(ct) == 1 else None


@dataclass
class OrbitProfile:
    parts_two_cancellative: bool
    sigma_cycle_type: tuple[int, ...]
    tau_cycle_type: tuple[int, ...]
    q: int | None  # common cycle length when σ and τ are uniform with the same length
    literal_condition: bool  # parts 2-cancellative and σ, τ uniform with the same q
    literal_order: int | None  # LCM(|r_X|, |r_Y|, q or 2q) when literal_condition
    predicted_two_cancellative: bool  # parts 2-cancellative and σ², τ² share one cycle length
    predicted_mixed_lengths: dict[int, int]  # length -> number of mixed orbits
    predicted_order: int
    direct_two_cancellative: bool
    direct_mixed_lengths: dict[int, int]
    direct_order: int

    @property
    def matches(self) -> bool:
        return (
            self.predicted_two_cancellative == self.direct_two_cancellative
            and self.predicted_mixed_lengths == self.direct_mixed_lengths
            and self.predicted_order == self.direct_order
        )

    @property
    def literal_sound(self) -> bool:
        """The literal condition implies 2-cancellativity and its order formula."""
        if not self.literal_condition:
            return True
        return self.direct_two_cancellative and self.literal_order == self.direct_order


def predicted_orbit_profile(spec: ExtensionSpec) -> OrbitProfile:
    """Orbit structure of Z predicted from σ, τ versus direct computation.

    A mixed pair (x, y) returns to X × Y every two steps as (σ²x, τ²y), so its
    orbit has length 2·lcm(a, b) where a, b are the σ²- and τ²-cycle lengths
    through x and y.  Coordinates inside the orbit are distinct exactly when
    a = b.
    """
    X, Y = spec.xpart, spec.ypart
    m = X.n
    parts_2c = check_conditions(X).two_cancellative and check_conditions(Y).two_cancellative
    s, t = spec.sigma, spec.tau
    qs_, qt = _uniform(s), _uniform(t)
    q = qs_ if qs_ is not None and qs_ == qt else None
    literal = parts_2c and q is not None
    rx, ry = order_of_r(X), order_of_r(Y)
    literal_order = lcm(rx, ry, q if q % 2 == 0 else 2 * q) if literal else None
    a = _square_cycle_lengths(s)
    b = _square_cycle_lengths(t)
    sq_lengths = set(a.values()) | set(b.values())
    pred_2c = parts_2c and len(sq_lengths) == 1
    # each mixed orbit of length 2L meets X × Y in L points
    halves: dict[int, int] = {}
    for x in range(m):
        for y in range(Y.n):
            ln = 2 * lcm(a[x], b[y])
            halves[ln] = halves.get(ln, 0) + 1
    pred_mixed = {ln: 2 * cnt // ln for ln, cnt in halves.items()}
    pred_order = lcm(rx, ry, *pred_mixed.keys())
    z = build_sigma_tau(spec)
    zrep = check_conditions(z)
    direct_mixed: dict[int, int] = {}
    for cyc in r_power_orbits(z):
        x, y = divmod(cyc[0], z.n)
        if (x < m) != (y < m):
            direct_mixed[len(cyc)] = direct_mixed.get(len(cyc), 0) + 1
    return OrbitProfile(
        parts_2c,
        s.cycle_type(),
        t.cycle_type(),
        q,
        literal,
        literal_order,
        pred_2c,
        pred_mixed,
        pred_order,
        zrep.two_cancellative,
        direct_mixed,
        order_of_r(z),
    )


# ---------------------------------------------------------------------------
# partitions and strong twisted unions


@dataclass(frozen=True)
class Partition2:
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_sizes(cls, *sizes: int) -> "Partition2":
        out, start = [], 0
        for s in sizes:
            out.append(tuple(range(start, start + s)))
            start += s
        return cls(tuple(out))

    @classmethod
    def parse(cls, text: str) -> "Partition2":
        """Blocks separated by '|', elements by ',' or spaces: "0,1,2|3,4,5"."""
        blocks = []
        for chunk in text.split("|"):
            items = chunk.replace(",", " ").split()
            blocks.append(tuple(int(v) for v in items))
        return cls(tuple(blocks))

    def validate(self, z: QuadraticSet) -> None:
        flat = sorted(x for b in self.blocks for x in b)
        if flat != list(range(z.n)):
            raise BlocksNotInvariant("blocks must partition the label set")
        for blk in self.blocks:
            s = set(blk)
            for x, y in product(blk, repeat=2):
                a, b = z.r(x, y)
                if a not in s or b not in s:
                    raise BlocksNotInvariant(f"block {blk} is not r-invariant at {(x, y)}")

    def pairs(self):
        k = len(self.blocks)
        for i in range(k):
            for j in range(i + 1, k):
                yield i, j, self.blocks[i], self.blocks[j]


def _stu_tags(z: QuadraticSet, X: Sequence[int], Y: Sequence[int]):
    L, R = z.left, z.right
    for a, y, x in product(Y, X, X):
        if L(R(a, y), x) != L(a, x):
            yield "stu1", (a, y, x)
            break
    for a, y, x in product(Y, X, X):
        if R(x, L(y, a)) != R(x, a):
            yield "stu2", (a, y, x)
            break
    for x, b, a in product(X, Y, Y):
        if L(R(x, b), a) != L(x, a):
            yield "stu3", (x, b, a)
            break
    for x, b, a in product(X, Y, Y):
        if R(a, L(b, x)) != R(a, x):
            yield "stu4", (x, b, a)
            break


@dataclass
class STUReport:
    verdict: bool
    failures: list[tuple[str, int, int, tuple]] = field(default_factory=list)

    @property
    def failing_tag(self) -> str | None:
        return self.failures[0][0] if self.failures else None


def is_generalized_stu(z: QuadraticSet, part: Partition2) -> STUReport:
    part.validate(z)
    fails = []
    for i, j, X, Y in part.pairs():
        for tag, w in _stu_tags(z, X, Y):
            fails.append((tag, i, j, w))
    return STUReport(not fails, fails)


def restricted_automorphisms(z: QuadraticSet, part: Partition2) -> dict[str, bool]:
    """For blocks X (first) and Y (second) of each pair: are L_{α|X}, R_{α|X}, L_{x|Y}, R_{x|Y} automorphisms?

    Keys are "stu1".."stu4" paired with the equivalent automorphism statement.
    The restrictions only make sense when the mixed actions preserve the
    blocks, which is automatic for two blocks of a nondegenerate set.
    """
    part.validate(z)
    out = {"stu1": True, "stu2": True, "stu3": True, "stu4": True}
    for _, _, X, Y in part.pairs():
        sx, sy = set(X), set(Y)
        for a, x in product(Y, X):
            if not {z.left(a, x), z.right(x, a)} <= sx or not {z.left(x, a), z.right(a, x)} <= sy:
                raise BlocksNotInvariant(f"mixed actions move letters out of their blocks at {(a, x)}")
        subX = z.restrict(X)
        subY = z.restrict(Y)
        posX = {x: i for i, x in enumerate(X)}
        posY = {y: i for i, y in enumerate(Y)}
        for a in Y:
            if not is_automorphism(subX, [posX[z.left(a, x)] for x in X]):
                out["stu1"] = False
            if not is_automorphism(subX, [posX[z.right(x, a)] for x in X]):
                out["stu2"] = False
        for x in X:
            if not is_automorphism(subY, [posY[z.left(x, a)] for a in Y]):
                out["stu3"] = False
            if not is_automorphism(subY, [posY[z.right(a, x)] for a in Y]):
                out["stu4"] = False
    return out


def mixed_triple_conditions(z: QuadraticSet, a: int, y: int, x: int) -> tuple[bool, bool, bool]:
    """(l1, laut, stu1) at the mixed triple (α, y, x)."""
    L, R = z.left, z.right
    l1 = L(a, L(y, x)) == L(L(a, y), L(R(a, y), x))
    laut = L(a, L(y, x)) == L(L(a, y), L(a, x))
    stu1 = L(R(a, y), x) == L(a, x)
    return l1, laut, stu1


@dataclass
class STUMonoidReport:
    L: int
    witnesses: dict[str, tuple | None]

    @property
    def ok(self) -> bool:
        return all(w is None for w in self.witnesses.values())


def stu_monoid_bounded(z: QuadraticSet, part: Partition2, L: int = 3) -> STUMonoidReport:
    """stu1-stu4 for words a, b over one block and u, v over the other, lengths <= L."""
    from .monoid import MonoidView, word_action_left, word_action_right

    part.validate(z)
    mv = MonoidView(z, L)

    def left(a, u):
        return word_action_left(z, a, u, check=False)

    def right(u, a):
        return word_action_right(z, u, a, check=False)

    wit: dict[str, tuple | None] = {k: None for k in ("stu1", "stu2", "stu3", "stu4")}
    for _, _, X, Y in part.pairs():
        S = [w for m in range(1, L + 1) for w in product(X, repeat=m)]
        T = [w for m in range(1, L + 1) for w in product(Y, repeat=m)]
        for u, b, a in product(T, S, S):
            if wit["stu1"] is None and not mv.same(left(right(u, b), a), left(u, a)):
                wit["stu1"] = (u, b, a)
            if wit["stu2"] is None and not mv.same(right(a, left(b, u)), right(a, u)):
                wit["stu2"] = (u, b, a)
        for a, u, v in product(S, T, T):
            if wit["stu3"] is None and not mv.same(left(right(a, u), v), left(a, v)):
                wit["stu3"] = (a, u, v)
            if wit["stu4"] is None and not mv.same(right(v, left(u, a)), right(v, a)):
                wit["stu4"] = (a, u, v)
    return STUMonoidReport(L, wit)


@dataclass
class MixedReport:
    mixed: dict[str, tuple | None]
    homomorphisms: dict[str, tuple | None]
    parts_braided: bool
    hypotheses: dict[str, bool]
    verdict: bool
    direct_braided: bool

    @property
    def applicable(self) -> bool:
        return all(self.hypotheses.values())

    @property
    def consistent(self) -> bool:
        return (not self.applicable) or self.verdict == self.direct_braided


def _mixed_conditions(z: QuadraticSet, X: Sequence[int], Y: Sequence[int]) -> dict[str, tuple | None]:
    L, R, r = z.left, z.right, z.r

    def l1(x, y, w):
        return L(x, L(y, w)) == L(L(x, y), L(R(x, y), w))

    def r2(x, y, w):
        # r((x, y)^w) = (r(x, y))^w with (x, y)^w = (x^{^y w}, y^w)
        lhs = r(R(x, L(y, w)), R(y, w))
        a, b = r(x, y)
        return lhs == (R(a, L(b, w)), R(b, w))

    out: dict[str, tuple | None] = {}
    for tag, A, B in (("XYX", X, Y), ("YXY", Y, X)):
        out[f"l1({tag})"] = next(((x, a, y) for x, a, y in product(A, B, A) if not l1(x, a, y)), None)
        out[f"r2({tag})"] = next(((x, a, y) for x, a, y in product(A, B, A) if not r2(x, a, y)), None)
    return out


def _homomorphisms(z: QuadraticSet, X: Sequence[int], Y: Sequence[int], tag: str) -> dict[str, tuple | None]:
    """x -> L_{x|Y} and x -> R_{x|Y} land in Aut(Y) and respect xy = (^x y)(x^y)."""
    L, R = z.left, z.right
    subY = z.restrict(Y)
    posY = {y: i for i, y in enumerate(Y)}
    out: dict[str, tuple | None] = {f"L_{tag}": None, f"R_{tag}": None}
    for x in X:
        if out[f"L_{tag}"] is None and not is_automorphism(subY, [posY[L(x, a)] for a in Y]):
            out[f"L_{tag}"] = ("aut", x)
        if out[f"R_{tag}"] is None and not is_automorphism(subY, [posY[R(a, x)] for a in Y]):
            out[f"R_{tag}"] = ("aut", x)
    for x, y, a in product(X, X, Y):
        if out[f"L_{tag}"] is None and L(x, L(y, a)) != L(L(x, y), L(R(x, y), a)):
            out[f"L_{tag}"] = ("relation", x, y, a)
        if out[f"R_{tag}"] is None and R(R(a, x), y) != R(R(a, L(x, y)), R(x, y)):
            out[f"R_{tag}"] = ("relation", x, y, a)
    return out


def mixed_l1_r2(z: QuadraticSet, part: Partition2) -> MixedReport:
    """The four mixed conditions and the homomorphism conditions for each block pair.

    The combined verdict equals the braid relation on z whenever z is a
    nondegenerate strong twisted union of 2-cancellative braided blocks;
    `hypotheses` records whether that is the case.
    """
    part.validate(z)
    mixed: dict[str, tuple | None] = {}
    homs: dict[str, tuple | None] = {}
    for i, j, X, Y in part.pairs():
        for k, v in _mixed_conditions(z, X, Y).items():
            mixed[f"{k}[{i},{j}]"] = v
        for k, v in _homomorphisms(z, X, Y, f"X{i}|X{j}").items():
            homs[k] = v
        for k, v in _homomorphisms(z, Y, X, f"X{j}|X{i}").items():
            homs[k] = v
    subs = [check_conditions(z.restrict(b)) for b in part.blocks]
    parts_braided = all(s.braided for s in subs)
    zrep = check_conditions(z)
    hyp = {
        "nondegenerate": zrep.nondegenerate,
        "stu": is_generalized_stu(z, part).verdict,
        "blocks_two_cancellative": all(s.two_cancellative for s in subs),
    }
    verdict = parts_braided and all(v is None for v in mixed.values()) and all(v is None for v in homs.values())
    return MixedReport(mixed, homs, parts_braided, hyp, verdict, zrep.braided)
