"""Enumeration and isomorphism classification of small quadratic sets.

Isomorphism of (X, r) and (X, r') means r' = (s × s) r (s × s)^{-1} for a
bijection s of X.  The canonical form is the lexicographically smallest
relabelled table, where a table is read as the sequence of codes a*n + b of
its image pairs in row-major order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from math import factorial
from typing import Iterable, Iterator

import numpy as np

from .core import FLAGS, BudgetExceeded, QuadraticSet, check_conditions, from_table, lcm
from .orbits import r_orbits

SEARCH_BUDGET = 5 * 10**7
STRUCTURAL = ("minimality_M",)


@lru_cache(maxsize=16)
def _perms(n: int) -> np.ndarray:
    return np.array(list(permutations(range(n))), dtype=np.int64)


def _codes(qs: QuadraticSet) -> np.ndarray:
    n = qs.n
    return np.array([a * n + b for a, b in qs.rmap], dtype=np.int64)


def _lexmin_rows(arr: np.ndarray) -> np.ndarray:
    """Index of the lexicographically smallest row along axis -2 for each leading index.

    arr has shape (N, k, width); returns shape (N,).
    """
    N, k, width = arr.shape
    alive = np.ones((N, k), dtype=bool)
    big = np.iinfo(np.int64).max
    for c in range(width):
        col = np.where(alive, arr[:, :, c], big)
        m = col.min(axis=1, keepdims=True)
        alive &= col == m
        if (alive.sum(axis=1) == 1).all():
            break
    return alive.argmax(axis=1)


def canonical_codes(tables: np.ndarray, n: int) -> np.ndarray:
    """Canonical code rows for a batch of code tables of shape (N, n*n)."""
    if n > 8:
        raise BudgetExceeded("canonical form limited to n <= 8")
    P = _perms(n)  # (k, n)
    k = len(P)
    xs, ys = np.divmod(np.arange(n * n), n)
    pos = P[:, xs] * n + P[:, ys]  # (k, n*n) new position of entry (x, y)
    out = np.empty((len(tables), n * n), dtype=np.int64)
    chunk = max(1, 2_000_000 // (k * n * n))
    for s in range(0, len(tables), chunk):
        T = tables[s : s + chunk]
        a, b = np.divmod(T, n)  # (N, n*n)
        vals = P[:, a] * n + P[:, b]  # (k, N, n*n)
        vals = vals.transpose(1, 0, 2)
        rel = np.empty_like(vals)
        idx = np.broadcast_to(pos[None, :, :], vals.shape)
        np.put_along_axis(rel, idx, vals, axis=2)
        best = _lexmin_rows(rel)
        out[s : s + chunk] = rel[np.arange(len(T)), best]
    return out


@dataclass(frozen=True)
class CanonicalForm:
    n: int
    codes: tuple[int, ...]

    def qs(self) -> QuadraticSet:
        return from_table(self.n, [divmod(c, self.n) for c in self.codes])


def canonical_form(qs: QuadraticSet) -> CanonicalForm:
    row = canonical_codes(_codes(qs)[None, :], qs.n)[0]
    return CanonicalForm(qs.n, tuple(int(v) for v in row))


def canonical_relabeling(qs: QuadraticSet) -> tuple[int, ...]:
    """A bijection s with qs.relabel(s) equal to the canonical form."""
    target = canonical_form(qs).qs()
    for s in permutations(range(qs.n)):
        if qs.relabel(s) == target:
            return s
    raise AssertionError("canonical form not reached")


def isomorphic(a: QuadraticSet, b: QuadraticSet) -> bool:
    return a.n == b.n and canonical_form(a) == canonical_form(b)


@dataclass(frozen=True)
class SearchFilter:
    require: frozenset = field(default_factory=frozenset)
    forbid: frozenset = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        req = frozenset(_norm(v) for v in self.require)
        forb = frozenset(_norm(v) for v in self.forbid)
        object.__setattr__(self, "require", req)
        object.__setattr__(self, "forbid", forb)
        known = set(FLAGS) | set(STRUCTURAL)
        bad = (req | forb) - known
        if bad:
            raise ValueError(f"unknown filter names: {sorted(bad)}")
        both = req & forb
        if both:
            raise ValueError(f"required and forbidden at once: {sorted(both)}")

    @classmethod
    def of(cls, require: Iterable[str] = (), forbid: Iterable[str] = ()) -> "SearchFilter":
        return cls(frozenset(require), frozenset(forbid))

    def accepts(self, qs: QuadraticSet) -> bool:
        flags = dict(check_conditions(qs).flags)
        if "minimality_M" in self.require | self.forbid:
            flags["minimality_M"] = r_orbits(qs).count == 2 * qs.n - 1
        return all(flags[f] for f in self.require) and not any(flags[f] for f in self.forbid)


_ALIASES = {
    "2-cancellative": "two_cancellative",
    "2cancellative": "two_cancellative",
    "square-free": "square_free",
    "squarefree": "square_free",
    "sf": "square_free",
    "nd": "nondegenerate",
    "2c": "two_cancellative",
    "SD": "sd",
    "M": "minimality_M",
    "minimality": "minimality_M",
    "quantum-binomial": "quantum_binomial",
}


def _norm(name: str) -> str:
    return _ALIASES.get(name, name.replace("-", "_"))


# ---------------------------------------------------------------------------
# candidate generators, each yielding code tables (N, n*n)


def _perm_rows(n: int, fixed: int | None) -> np.ndarray:
    P = _perms(n)
    if fixed is None:
        return P
    return P[P[:, fixed] == fixed]


def _bijective_mask(codes: np.ndarray, n: int) -> np.ndarray:
    full = (1 << (n * n)) - 1
    bits = np.bitwise_or.reduce(np.left_shift(np.int64(1), codes), axis=-1)
    return bits == full


def _lr_candidates(n: int, square_free: bool, budget: int) -> Iterator[np.ndarray]:
    """Nondegenerate tables r(x, y) = (L_x(y), R_y(x)); L_x, R_x fix x if square_free."""
    opts = [_perm_rows(n, x if square_free else None) for x in range(n)]
    total = 1
    for o in opts:
        total *= len(o) ** 2
    if total > budget:
        raise BudgetExceeded(f"{total} candidate action tables exceed the search budget {budget}")
    # all L-tuples: shape (NL, n, n) with Ltab[i, x, y] = L_x(y)
    Ltab = np.array([np.stack(t) for t in product(*opts)], dtype=np.int64)
    Rtab = Ltab  # R-tuples range over the same sets: Rtab[j, y, x] = R_y(x)
    xs, ys = np.divmod(np.arange(n * n), n)
    right = Rtab[:, ys, xs]  # (NR, n*n): R_y(x) at position (x, y)
    for i in range(len(Ltab)):
        left = Ltab[i][xs, ys]  # (n*n,)
        codes = left[None, :] * n + right
        yield codes[_bijective_mask(codes, n)]


def _all_bijections(n: int, budget: int) -> Iterator[np.ndarray]:
    N = n * n
    if factorial(N) > budget:
        raise BudgetExceeded(f"{factorial(N)} bijections of X^2 exceed the search budget {budget}")
    perms = np.array(list(permutations(range(N))), dtype=np.int64)
    yield perms


def _sd_candidates(n: int, quandle: bool, braided: bool, budget: int) -> Iterator[np.ndarray]:
    """Tuples (L_0, ..., L_{n-1}) with r(x, y) = (L_x(y), x), laut-pruned when braided."""
    opts = [[tuple(int(v) for v in row) for row in _perm_rows(n, x if quandle else None)] for x in range(n)]
    if not braided:
        total = 1
        for o in opts:
            total *= len(o)
        if total > budget:
            raise BudgetExceeded(f"{total} SD tables exceed the search budget {budget}")
    found: list[list[int]] = []
    chosen: list[tuple[int, ...]] = []

    def consistent(k: int) -> bool:
        # laut: L_x L_y = L_{L_x y} L_x on every triple whose three maps are assigned
        for x in range(k + 1):
            Lx = chosen[x]
            for y in range(k + 1):
                if x != k and y != k and Lx[y] != k:
                    continue
                w = Lx[y]
                if w > k:
                    continue
                Ly, Lw = chosen[y], chosen[w]
                for z in range(n):
                    if Lx[Ly[z]] != Lw[Lx[z]]:
                        return False
        return True

    def rec(k: int) -> None:
        if k == n:
            found.append([chosen[x][y] * n + x for x in range(n) for y in range(n)])
            if len(found) > budget:
                raise BudgetExceeded("too many SD tables")
            return
        for L in opts[k]:
            chosen.append(L)
            if not braided or consistent(k):
                rec(k + 1)
            chosen.pop()

    rec(0)
    if found:
        yield np.array(found, dtype=np.int64)


def _candidates(n: int, filt: SearchFilter, budget: int) -> Iterator[np.ndarray]:
    req = filt.require
    if "sd" in req:
        quandle = bool(req & {"square_free", "two_cancellative"})
        yield from _sd_candidates(n, quandle, "braided" in req, budget)
    elif "nondegenerate" in req or "quantum_binomial" in req:
        sf = bool(req & {"square_free", "quantum_binomial"})
        yield from _lr_candidates(n, sf, budget)
    else:
        yield from _all_bijections(n, budget)


def _two_cancellative_mask(codes: np.ndarray, n: int) -> np.ndarray:
    """Vectorised 2-cancellativity: no r^k (0 < k < orbit length) fixes exactly one coordinate."""
    N = len(codes)
    start = np.broadcast_to(np.arange(n * n), codes.shape)
    cur = codes.copy()
    ok = np.ones(N, dtype=bool)
    sx, sy = np.divmod(start, n)
    live = np.ones(codes.shape, dtype=bool)
    rows = np.arange(N)[:, None]
    for _ in range(n * n):
        live &= cur != start
        if not live.any():
            break
        cx, cy = np.divmod(cur, n)
        bad = live & ((cx == sx) != (cy == sy))
        ok &= ~bad.any(axis=1)
        cur = codes[rows, cur]
    return ok


def enumerate_classes(n: int, filt: SearchFilter, budget: int = SEARCH_BUDGET) -> list[QuadraticSet]:
    """One canonical representative per isomorphism class satisfying the filter, sorted."""
    seen: set[tuple[int, ...]] = set()
    for batch in _candidates(n, filt, budget):
        if len(batch) == 0:
            continue
        if "two_cancellative" in filt.require:
            batch = batch[_two_cancellative_mask(batch, n)]
        if len(batch) == 0:
            continue
        canon = canonical_codes(batch, n)
        for row in np.unique(canon, axis=0):
            seen.add(tuple(int(v) for v in row))
    out = []
    for codes in sorted(seen):
        qs = from_table(n, [divmod(c, n) for c in codes])
        if filt.accepts(qs):
            out.append(qs)
    return out


def enumerate(n: int, filt: SearchFilter, budget: int = SEARCH_BUDGET) -> Iterator[QuadraticSet]:  # noqa: A001
    yield from enumerate_classes(n, filt, budget)


# ---------------------------------------------------------------------------
# algebra-level grouping and surveys


def orbit_partition_key(qs: QuadraticSet) -> tuple:
    """Canonical form of the r-orbit partition of X^2 under relabeling of X.

    Two quadratic sets with equal keys have the same defining relations up to
    renaming generators, hence isomorphic algebras A(k, X, r).
    """
    n = qs.n
    orbits = r_orbits(qs).orbits()
    best = None
    for s in permutations(range(n)):
        key = tuple(
            sorted(tuple(sorted(s[w // n] * n + s[w % n] for w in orb)) for orb in orbits)
        )
        if best is None or key < best:
            best = key
    return best


def algebra_classes(sets: Iterable[QuadraticSet]) -> list[list[QuadraticSet]]:
    groups: dict[tuple, list[QuadraticSet]] = {}
    for qs in sets:
        groups.setdefault(orbit_partition_key(qs), []).append(qs)
    return [groups[k] for k in sorted(groups)]


@dataclass
class SurveyRecord:
    qs: QuadraticSet
    dim_a2: int
    orbit_lengths_ok: bool
    relation_shape_ok: bool
    dual_dim3: int
    growth_degree: int | None
    growth_ok: bool
    indecomposable: bool

    @property
    def all_checks(self) -> bool:
        return (
            self.orbit_lengths_ok
            and self.relation_shape_ok
            and self.dual_dim3 == 0
            and self.growth_ok
            and self.indecomposable
        )

    def as_record(self) -> dict:
        return {
            "n": self.qs.n,
            "r": [list(p) for p in self.qs.rmap],
            "dim_A2": self.dim_a2,
            "orbit_lengths_ok": self.orbit_lengths_ok,
            "relation_shape_ok": self.relation_shape_ok,
            "dim_dual_A3": self.dual_dim3,
            "growth_poly_degree": self.growth_degree,
            "growth_ok": self.growth_ok,
            "indecomposable": self.indecomposable,
        }


def relation_shape_ok(qs: QuadraticSet) -> bool:
    """Each nontrivial orbit has minimum 0·i and its other words use first letters X∖{0}, second letters X∖{i}."""
    n = qs.n
    mins = set()
    for orb in r_orbits(qs).orbits():
        if len(orb) == 1:
            continue
        low = orb[0]
        a, i = divmod(low, n)
        if a != 0:
            return False
        mins.add(i)
        rest = [divmod(w, n) for w in orb[1:]]
        if sorted(x for x, _ in rest) != [x for x in range(n) if x != 0]:
            return False
        if sorted(y for _, y in rest) != [y for y in range(n) if y != i]:
            return False
    return mins == set(range(1, n))


def growth_degrees(n: int, limit: int = 10**6, cap: int = 10) -> int:
    M = 3
    while M < cap and n ** (M + 1) <= limit:
        M += 1
    return M


def survey_record(qs: QuadraticSet) -> SurveyRecord:
    from .algebra import growth_estimate, linear_dims, reduced_relations
    from .orbits import graded_dims
    from .racks import is_indecomposable

    n = qs.n
    part = r_orbits(qs)
    lengths_ok = all(ln == n for ln in part.lengths if ln > 1)
    dual3 = linear_dims(reduced_relations(qs), 3)[1]
    M = growth_degrees(n)
    g = growth_estimate(graded_dims(qs, M).dims)
    growth_ok = g.conclusive and g.poly_degree is not None and g.poly_degree <= 1
    return SurveyRecord(
        qs,
        part.count,
        lengths_ok,
        relation_shape_ok(qs),
        dual3,
        g.poly_degree,
        growth_ok,
        is_indecomposable(qs).indecomposable,
    )


def minimality_survey(n: int, sd_only: bool = False, budget: int = SEARCH_BUDGET) -> list[SurveyRecord]:
    """Classes with dim A_2 = 2n - 1 among 2-cancellative braided sets (SD ones if sd_only)."""
    base = {"braided", "two_cancellative", "nondegenerate", "square_free"}
    if sd_only:
        base |= {"sd"}
    filt = SearchFilter.of(base | {"minimality_M"})
    return [survey_record(qs) for qs in enumerate_classes(n, filt, budget)]


def random_permutation_solutions(n: int) -> list[QuadraticSet]:
    """Braided permutation solutions r(x, y) = (f(y), g(x)) with fg = gf, up to isomorphism."""
    P = [tuple(int(v) for v in p) for p in _perms(n)]
    seen = set()
    out = []
    for f in P:
        for g in P:
            if any(f[g[i]] != g[f[i]] for i in range(n)):
                continue
            qs = from_table(n, [(f[y], g[x]) for x in range(n) for y in range(n)])
            cf = canonical_form(qs)
            if cf not in seen:
                seen.add(cf)
                out.append(cf.qs())
    return out


__all__ = [
    "CanonicalForm",
    "SearchFilter",
    "SurveyRecord",
    "algebra_classes",
    "canonical_form",
    "enumerate",
    "enumerate_classes",
    "isomorphic",
    "lcm",
    "minimality_survey",
    "orbit_partition_key",
]
