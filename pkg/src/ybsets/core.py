"""Finite quadratic sets (X, r) and their pointwise properties.

A quadratic set on X = {0, ..., n-1} is stored as a row-major table: entry
``x*n + y`` holds r(x, y) = (^x y, x^y).  Everything else (left and right
actions, property flags, fixed points) is derived from that table.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from math import gcd
from typing import Iterable, Sequence

Pair = tuple[int, int]


class YBError(Exception):
    """Base class for errors raised by this package."""


class NotBijective(YBError):
    pass


class BadLabel(YBError):
    pass


class BudgetExceeded(YBError):
    pass


def lcm(*values: int) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        imgs = tuple(int(i) for i in self.images)
        object.__setattr__(self, "images", imgs)
        if sorted(imgs) != list(range(len(imgs))):
            raise NotBijective(f"not a permutation: {imgs}")

    @classmethod
    def identity(cls, size: int) -> "Permutation":
        return cls(tuple(range(size)))

    @classmethod
    def from_cycles(cls, size: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        imgs = list(range(size))
        seen: set[int] = set()
        for cyc in cycles:
            for i, a in enumerate(cyc):
                if not 0 <= a < size:
                    raise BadLabel(f"label {a} outside [0, {size})")
                if a in seen:
                    raise NotBijective(f"label {a} repeated in cycle notation")
                seen.add(a)
                imgs[a] = cyc[(i + 1) % len(cyc)]
        return cls(tuple(imgs))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (self * other)(i) = self(other(i))
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def power(self, k: int) -> "Permutation":
        p = self if k >= 0 else self.inverse()
        out = Permutation.identity(self.size)
        for _ in range(abs(k)):
            out = p * out
        return out

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * self.size
        out = []
        for start in range(self.size):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i)
                i = self.images[i]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def order(self) -> int:
        return lcm(*self.cycle_type()) if self.size else 1

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def __str__(self) -> str:
        cyc = [c for c in self.cycles() if len(c) > 1]
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


@dataclass(frozen=True)
class QuadraticSet:
    n: int
    rmap: tuple[Pair, ...]

    def r(self, x: int, y: int) -> Pair:
        return self.rmap[x * self.n + y]

    def left(self, x: int, y: int) -> int:
        """^x y"""
        return self.rmap[x * self.n + y][0]

    def right(self, x: int, y: int) -> int:
        """x^y"""
        return self.rmap[x * self.n + y][1]

    @cached_property
    def perm(self) -> tuple[int, ...]:
        """r as a permutation of pair indices x*n + y."""
        n = self.n
        return tuple(a * n + b for a, b in self.rmap)

    @cached_property
    def inverse_rmap(self) -> tuple[Pair, ...]:
        n = self.n
        inv: list[Pair] = [(0, 0)] * (n * n)
        for i, (a, b) in enumerate(self.rmap):
            inv[a * n + b] = divmod(i, n)
        return tuple(inv)

    def relabel(self, s: Sequence[int]) -> "QuadraticSet":
        """The isomorphic copy r'(s x, s y) = (s a, s b) where r(x, y) = (a, b)."""
        n = self.n
        table: list[Pair] = [(0, 0)] * (n * n)
        for x in range(n):
            for y in range(n):
                a, b = self.r(x, y)
                table[s[x] * n + s[y]] = (s[a], s[b])
        return QuadraticSet(n, tuple(table))

    def restrict(self, block: Sequence[int]) -> "QuadraticSet":
        """Restriction to an r-invariant subset, relabelled 0..len(block)-1 in the given order."""
        pos = {x: i for i, x in enumerate(block)}
        table = []
        for x in block:
            for y in block:
                a, b = self.r(x, y)
                if a not in pos or b not in pos:
                    raise ValueError(f"block {list(block)} is not r-invariant at {(x, y)}")
                table.append((pos[a], pos[b]))
        return from_table(len(block), table)


def from_table(n: int, rmap: Iterable[Sequence[int]]) -> QuadraticSet:
    """Validate a row-major table of n*n image pairs and wrap it."""
    if n < 1:
        raise BadLabel(f"n must be positive, got {n}")
    pairs = []
    for entry in rmap:
        a, b = entry
        a, b = int(a), int(b)
        if not (0 <= a < n and 0 <= b < n):
            raise BadLabel(f"label out of range in {(a, b)} for n={n}")
        pairs.append((a, b))
    if len(pairs) != n * n:
        raise NotBijective(f"expected {n * n} entries, got {len(pairs)}")
    seen: dict[Pair, int] = {}
    for i, p in enumerate(pairs):
        if p in seen:
            j = seen[p]
            raise NotBijective(
                f"r{divmod(j, n)} = r{divmod(i, n)} = {p}: image pair repeated"
            )
        seen[p] = i
    return QuadraticSet(n, tuple(pairs))


def from_function(n: int, f) -> QuadraticSet:
    return from_table(n, [f(x, y) for x in range(n) for y in range(n)])


def flip(n: int) -> QuadraticSet:
    """Triv(n): r(x, y) = (y, x)."""
    return from_function(n, lambda x, y: (y, x))


@dataclass(frozen=True)
class ActionTables:
    left: tuple[tuple[int, ...], ...]
    right: tuple[tuple[int, ...], ...]
    nondegenerate: bool
    p: int | None

    def L(self, x: int) -> Permutation:
        return Permutation(self.left[x])

    def R(self, y: int) -> Permutation:
        return Permutation(self.right[y])


def _is_perm(row: Sequence[int]) -> bool:
    return len(set(row)) == len(row)


def actions(qs: QuadraticSet) -> ActionTables:
    n = qs.n
    left = tuple(tuple(qs.left(x, y) for y in range(n)) for x in range(n))
    right = tuple(tuple(qs.right(x, y) for x in range(n)) for y in range(n))
    nondeg = all(_is_perm(row) for row in left) and all(_is_perm(row) for row in right)
    p = None
    if nondeg:
        p = lcm(*(Permutation(row).order() for row in left + right))
    return ActionTables(left, right, nondeg, p)


def r_power_orbits(qs: QuadraticSet) -> list[list[int]]:
    """Cycles of r on pair indices, each starting at its smallest index."""
    perm = qs.perm
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = perm[i]
        out.append(cyc)
    return out


def order_of_r(qs: QuadraticSet) -> int:
    return lcm(*(len(c) for c in r_power_orbits(qs)))


def fixed_points(qs: QuadraticSet) -> set[Pair]:
    n = qs.n
    return {(x, y) for x in range(n) for y in range(n) if qs.r(x, y) == (x, y)}


FLAGS = (
    "nondegenerate",
    "involutive",
    "square_free",
    "two_cancellative",
    "l1",
    "r1",
    "lr3",
    "braided",
    "cl1",
    "cr1",
    "cl2",
    "cr2",
    "lri",
    "sd",
    "quantum_binomial",
)


@dataclass(frozen=True)
class PropertyReport:
    """Named boolean flags with the lexicographically first counterexample per failed flag."""

    flags: dict[str, bool]
    witnesses: dict[str, tuple | None] = field(default_factory=dict)

    def __getattr__(self, name: str):
        flags = self.__dict__.get("flags", {})
        if name in flags:
            return flags[name]
        raise AttributeError(name)

    def holds(self, *names: str) -> bool:
        return all(self.flags[nm] for nm in names)

    def as_record(self) -> dict:
        return {
            "flags": {k: self.flags[k] for k in FLAGS},
            "witnesses": {k: list(v) if v is not None else None for k, v in self.witnesses.items()},
        }


def _first(tuples: Iterable[tuple], pred) -> tuple | None:
    for t in tuples:
        if not pred(*t):
            return t
    return None


def two_cancellative_witness(qs: QuadraticSet) -> tuple | None:
    """First (x, y, k, a, b) with r^k(x, y) = (a, b), 0 < k < |r|, sharing exactly one coordinate.

    Walks every pair through r^1, ..., r^{|r|-1} literally.  Within an orbit of
    length l the iterates repeat with period l, so only k < min(l, |r|) are
    visited; this is the same set of images as the literal k < |r| loop.
    """
    n = qs.n
    perm = qs.perm
    for start in range(n * n):
        x, y = divmod(start, n)
        i = perm[start]
        k = 1
        while i != start:
            a, b = divmod(i, n)
            if (a == x) != (b == y):
                return (x, y, k, a, b)
            i = perm[i]
            k += 1
    return None


def braid_relation_witness(qs: QuadraticSet) -> tuple | None:
    """Direct check of r12 r23 r12 = r23 r12 r23 on X^3; first failing triple."""
    r = qs.r
    n = qs.n
    for x, y, z in product(range(n), repeat=3):
        # r12 r23 r12 applied right to left
        a, b = r(x, y)
        b, c = r(b, z)
        a, b = r(a, b)
        lhs = (a, b, c)
        b, c = r(y, z)
        a, b = r(x, b)
        b, c = r(b, c)
        if lhs != (a, b, c):
            return (x, y, z)
    return None


def check_conditions(qs: QuadraticSet) -> PropertyReport:
    n = qs.n
    X = range(n)
    L = qs.left
    R = qs.right
    pairs = list(product(X, repeat=2))
    triples = list(product(X, repeat=3))
    acts = actions(qs)
    flags: dict[str, bool] = {}
    wit: dict[str, tuple | None] = {}

    def record(name: str, w: tuple | None) -> None:
        flags[name] = w is None
        wit[name] = w

    nd_wit = None
    for x in X:
        if not _is_perm(acts.left[x]):
            nd_wit = ("L", x)
            break
    if nd_wit is None:
        for y in X:
            if not _is_perm(acts.right[y]):
                nd_wit = ("R", y)
                break
    record("nondegenerate", nd_wit)

    def involutive(x, y):
        return qs.r(*qs.r(x, y)) == (x, y)

    record("involutive", _first(pairs, involutive))
    record("square_free", _first(((x, x) for x in X), lambda x, _: qs.r(x, x) == (x, x)))
    record("two_cancellative", two_cancellative_witness(qs))

    # l1: ^x(^y z) = ^{^x y}(^{x^y} z)
    record("l1", _first(triples, lambda x, y, z: L(x, L(y, z)) == L(L(x, y), L(R(x, y), z))))
    # r1: (x^y)^z = (x^{^y z})^{y^z}
    record("r1", _first(triples, lambda x, y, z: R(R(x, y), z) == R(R(x, L(y, z)), R(y, z))))
    # lr3: (^x y)^{(^{x^y} z)} = ^{(x^{^y z})}(y^z)
    record(
        "lr3",
        _first(triples, lambda x, y, z: R(L(x, y), L(R(x, y), z)) == L(R(x, L(y, z)), R(y, z))),
    )
    braided_wit = None
    for nm in ("l1", "r1", "lr3"):
        if wit[nm] is not None:
            braided_wit = (nm,) + wit[nm]
            break
    record("braided", braided_wit)

    # cyclic conditions
    record("cl1", _first(pairs, lambda x, y: L(R(y, x), x) == L(y, x)))
    record("cr1", _first(pairs, lambda x, y: R(x, L(x, y)) == R(x, y)))
    record("cl2", _first(pairs, lambda x, y: L(L(x, y), x) == L(y, x)))
    record("cr2", _first(pairs, lambda x, y: R(x, R(y, x)) == R(x, y)))
    record("lri", _first(pairs, lambda x, y: R(L(x, y), x) == y and L(x, R(y, x)) == y))
    record("sd", _first(pairs, lambda x, y: R(x, y) == x))

    qb_wit = None
    for nm in ("nondegenerate", "square_free", "involutive"):
        if wit[nm] is not None:
            qb_wit = (nm,) + wit[nm]
            break
    record("quantum_binomial", qb_wit)
    return PropertyReport(flags, wit)
