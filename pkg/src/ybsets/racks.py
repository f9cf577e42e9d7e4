"""Racks, quandles and self-distributive solutions r(x, y) = (x ▷ y, x)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd
from typing import Sequence

from .core import BudgetExceeded, Permutation, QuadraticSet, YBError, check_conditions, from_table

SUBSET_SEARCH_BOUND = 16
INN_BUDGET = 10**6


class NotAUnit(YBError):
    pass


class NotARack(YBError):
    pass


@dataclass(frozen=True)
class RackStructure:
    base: QuadraticSet
    op: tuple[tuple[int, ...], ...]  # op[x][y] = x ▷ y

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def inner_generators(self) -> tuple[Permutation, ...]:
        return tuple(Permutation(row) for row in self.op)

    @property
    def is_quandle(self) -> bool:
        return all(self.op[x][x] == x for x in range(self.n))


def laut_witness(op: Sequence[Sequence[int]]) -> tuple[int, int, int] | None:
    """First triple violating x▷(y▷z) = (x▷y)▷(x▷z)."""
    n = len(op)
    for x, y, z in product(range(n), repeat=3):
        if op[x][op[y][z]] != op[op[x][y]][op[x][z]]:
            return (x, y, z)
    return None


def from_operation(op: Sequence[Sequence[int]], check: bool = True) -> RackStructure:
    n = len(op)
    table = tuple(tuple(int(v) for v in row) for row in op)
    if check:
        for x, row in enumerate(table):
            if sorted(row) != list(range(n)):
                raise NotARack(f"L_{x} is not a bijection")
        w = laut_witness(table)
        if w is not None:
            raise NotARack(f"self-distributivity fails at {w}")
    base = from_table(n, [(table[x][y], x) for x in range(n) for y in range(n)])
    return RackStructure(base, table)


def rack_of(qs: QuadraticSet) -> RackStructure:
    """The rack of an SD braided solution."""
    n = qs.n
    if any(qs.right(x, y) != x for x in range(n) for y in range(n)):
        raise NotARack("not of SD shape r(x, y) = (x ▷ y, x)")
    return from_operation([[qs.left(x, y) for y in range(n)] for x in range(n)])


def dihedral_quandle(p: int) -> RackStructure:
    if p < 2:
        raise ValueError("p must be at least 2")
    return from_operation([[(2 * x - y) % p for y in range(p)] for x in range(p)])


def affine_quandle(n: int, g: int) -> RackStructure:
    g %= n
    if gcd(g, n) != 1:
        raise NotAUnit(f"{g} is not a unit modulo {n}")
    return from_operation([[((1 - g) * x + g * y) % n for y in range(n)] for x in range(n)])


def _closure_orbits(gens: Sequence[Sequence[int]], n: int) -> list[set[int]]:
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        orb = {start}
        stack = [start]
        seen[start] = True
        while stack:
            i = stack.pop()
            for g in gens:
                j = g[i]
                if not seen[j]:
                    seen[j] = True
                    orb.add(j)
                    stack.append(j)
        out.append(orb)
    return out


def _invariant(qs: QuadraticSet, block: set[int]) -> bool:
    for x in block:
        for y in block:
            a, b = qs.r(x, y)
            if a not in block or b not in block:
                return False
    return True


@dataclass(frozen=True)
class Decomposition:
    indecomposable: bool
    blocks: tuple[tuple[int, ...], ...] | None
    method: str


def is_indecomposable(qs: QuadraticSet, bound: int = SUBSET_SEARCH_BOUND) -> Decomposition:
    """SD sets use Inn-transitivity and return the Inn-orbits as blocks.

    Other sets are searched for a proper nonempty Y with Y and its complement
    both r-invariant; the first such Y (by bitmask, containing 0) is returned.
    """
    n = qs.n
    if check_conditions(qs).sd:
        gens = [[qs.left(x, y) for y in range(n)] for x in range(n)]
        orbs = _closure_orbits(gens, n)
        if len(orbs) == 1:
            return Decomposition(True, None, "inn-transitivity")
        return Decomposition(False, tuple(tuple(sorted(o)) for o in orbs), "inn-transitivity")
    if n > bound:
        raise BudgetExceeded(f"subset search over 2^{n - 1} sets exceeds bound n <= {bound}")
    for mask in range(1, 2 ** (n - 1)):
        Y = {0} | {i + 1 for i in range(n - 1) if mask >> i & 1}
        if len(Y) == n:
            continue
        Yc = set(range(n)) - Y
        if _invariant(qs, Y) and _invariant(qs, Yc):
            return Decomposition(False, (tuple(sorted(Y)), tuple(sorted(Yc))), "subset-search")
    return Decomposition(True, None, "subset-search")


def is_faithful(rack: RackStructure) -> bool:
    return len(set(rack.op)) == rack.n


def inner_group_order(rack: RackStructure, budget: int = INN_BUDGET) -> int:
    n = rack.n
    gens = [tuple(row) for row in rack.op]
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                gh = tuple(h[g[i]] for i in range(n))
                if gh not in seen:
                    seen.add(gh)
                    if len(seen) > budget:
                        raise BudgetExceeded(f"inner group larger than {budget}")
                    nxt.append(gh)
        frontier = nxt
    return len(seen)


def fixed_point_report(rack: RackStructure) -> dict[int, int]:
    """Observational: number of fixed points of each L_x."""
    return {x: sum(1 for y in range(rack.n) if rack.op[x][y] == y) for x in range(rack.n)}


def invariant_partitions(qs: QuadraticSet, k: int):
    """Partitions of X into blocks of size k, each r-invariant on its own square.

    Mixed pairs are unconstrained, so a set can split this way and still be
    indecomposable as a rack (blocks may be permuted by the actions).
    """
    from itertools import combinations

    n = qs.n
    if k <= 0 or n % k:
        return

    def rec(free: list[int], acc: list[tuple[int, ...]]):
        if not free:
            yield tuple(acc)
            return
        x, rest = free[0], free[1:]
        for others in combinations(rest, k - 1):
            blk = (x,) + others
            if _invariant(qs, set(blk)):
                left = [v for v in rest if v not in others]
                yield from rec(left, acc + [blk])

    yield from rec(list(range(n)), [])
