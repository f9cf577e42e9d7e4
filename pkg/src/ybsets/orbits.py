"""D_m(r)-orbits on X^m, graded dimensions and the X^3 orbit census.

A word (a_1, ..., a_m) is encoded as the base-n integer a_1 n^{m-1} + ... + a_m,
so integer order is lexicographic order on words.  The orbits of the group
generated by the maps r^{i,i+1} are the connected components of the graph
with edges w -> r^{i,i+1}(w); every generator is a permutation of a finite set,
so forward edges already give the full group orbits.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .core import BudgetExceeded, QuadraticSet

DEFAULT_BUDGET = 10**7

Word = tuple[int, ...]


def encode(word: Word, n: int) -> int:
    v = 0
    for a in word:
        v = v * n + a
    return v


def decode(index: int, n: int, m: int) -> Word:
    out = [0] * m
    for i in range(m - 1, -1, -1):
        index, out[i] = divmod(index, n)
    return tuple(out)


@dataclass(frozen=True, eq=False)
class OrbitPartition:
    m: int
    n: int
    class_of: np.ndarray  # orbit id per word index
    reps: tuple[int, ...]  # minimal word index per orbit, increasing
    lengths: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.reps)

    @property
    def fixed_count(self) -> int:
        return sum(1 for ln in self.lengths if ln == 1)

    @property
    def q(self) -> int:
        return sum(1 for ln in self.lengths if ln > 1)

    def rep_word(self, j: int) -> Word:
        return decode(self.reps[j], self.n, self.m)

    def orbit_id(self, word: Word) -> int:
        return int(self.class_of[encode(word, self.n)])

    def members(self, j: int) -> list[Word]:
        idx = np.flatnonzero(self.class_of == j)
        return [decode(int(i), self.n, self.m) for i in idx]

    def orbits(self) -> list[list[int]]:
        """Word indices per orbit, each sorted."""
        order = np.argsort(self.class_of, kind="stable")
        bounds = np.cumsum((0,) + self.lengths)
        return [order[bounds[j] : bounds[j + 1]].tolist() for j in range(self.count)]


def _step_images(qs: QuadraticSet, m: int) -> list[np.ndarray]:
    """Image arrays of r^{i,i+1} on X^m for i = 1..m-1."""
    n = qs.n
    N = n**m
    idx = np.arange(N, dtype=np.int64)
    rp = np.asarray(qs.perm, dtype=np.int64)
    out = []
    for i in range(m - 1):
        # positions i, i+1 (0-based from the left) have weights n^{m-1-i}, n^{m-2-i}
        hi_w = n ** (m - 1 - i)
        lo_w = n ** (m - 2 - i)
        a = (idx // hi_w) % n
        b = (idx // lo_w) % n
        ab = rp[a * n + b]
        img = idx - a * hi_w - b * lo_w + (ab // n) * hi_w + (ab % n) * lo_w
        out.append(img)
    return out


def _partition(qs: QuadraticSet, m: int, budget: int) -> OrbitPartition:
    n = qs.n
    N = n**m
    if N > budget:
        raise BudgetExceeded(f"|X^{m}| = {N} exceeds the orbit budget {budget}")
    if m <= 1:
        class_of = np.arange(N, dtype=np.int64)
        return OrbitPartition(m, n, class_of, tuple(range(N)), (1,) * N)
    imgs = _step_images(qs, m)
    src = np.concatenate([np.arange(N, dtype=np.int64)] * len(imgs))
    dst = np.concatenate(imgs)
    graph = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(N, N)).tocsr()
    _, labels = connected_components(graph, directed=True, connection="weak")
    # relabel components in order of their minimal word
    first = np.full(labels.max() + 1, N, dtype=np.int64)
    np.minimum.at(first, labels, np.arange(N, dtype=np.int64))
    order = np.argsort(first)
    rank = np.empty_like(order)
    rank[order] = np.arange(len(order))
    class_of = rank[labels]
    reps = tuple(int(v) for v in first[order])
    lengths = tuple(int(v) for v in np.bincount(class_of))
    return OrbitPartition(m, n, class_of, reps, lengths)


@lru_cache(maxsize=256)
def _cached(qs: QuadraticSet, m: int, budget: int) -> OrbitPartition:
    return _partition(qs, m, budget)


def dm_orbits(qs: QuadraticSet, m: int, budget: int = DEFAULT_BUDGET) -> OrbitPartition:
    return _cached(qs, m, budget)


def r_orbits(qs: QuadraticSet) -> OrbitPartition:
    return dm_orbits(qs, 2)


@dataclass(frozen=True)
class GradedDims:
    dims: tuple[int, ...]

    def __getitem__(self, m: int) -> int:
        return self.dims[m]

    def __len__(self) -> int:
        return len(self.dims)


def graded_dims(qs: QuadraticSet, M: int, budget: int = DEFAULT_BUDGET) -> GradedDims:
    return GradedDims(tuple([1] + [dm_orbits(qs, m, budget).count for m in range(1, M + 1)]))


@dataclass(frozen=True)
class X3Census:
    counts: dict[str, int]
    min_length: dict[str, int | None]
    max_length: dict[str, int | None]
    bounds_checked: bool
    bounds_ok: bool | None

    def as_record(self) -> dict:
        return {
            "counts": self.counts,
            "min_length": self.min_length,
            "max_length": self.max_length,
            "bounds_checked": self.bounds_checked,
            "bounds_ok": self.bounds_ok,
        }


def classify_x3(qs: QuadraticSet) -> X3Census:
    """Tag each D_3 orbit as diagonal (meets the constant words), type_ii or square_free.

    type_ii means the orbit meets E(O) = O ∩ (Δ2×X ∪ X×Δ2) minus Δ3; square_free
    orbits avoid Δ2×X ∪ X×Δ2 entirely.
    """
    from .core import check_conditions

    part = dm_orbits(qs, 3)
    kinds = ("diagonal", "type_ii", "square_free")
    tags = [t for t, _ in x3_orbit_tags(qs)]
    counts = {k: 0 for k in kinds}
    lo: dict[str, int | None] = {k: None for k in kinds}
    hi: dict[str, int | None] = {k: None for k in kinds}
    for t, ln in zip(tags, part.lengths):
        counts[t] += 1
        lo[t] = ln if lo[t] is None else min(lo[t], ln)
        hi[t] = ln if hi[t] is None else max(hi[t], ln)
    rep = check_conditions(qs)
    checked = rep.square_free and rep.nondegenerate
    ok = None
    if checked:
        ok = all(
            (t != "type_ii" or ln >= 3) and (t != "square_free" or ln >= 6) and (t != "diagonal" or ln == 1)
            for t, ln in zip(tags, part.lengths)
        )
    return X3Census(counts, lo, hi, checked, ok)


def x3_orbit_tags(qs: QuadraticSet) -> list[tuple[str, int]]:
    """(tag, length) per D_3 orbit in orbit-id order."""
    part = dm_orbits(qs, 3)
    out = []
    for members, ln in zip(part.orbits(), part.lengths):
        words = [decode(w, qs.n, 3) for w in members]
        if any(a == b == c for a, b, c in words):
            out.append(("diagonal", ln))
        elif any(a == b or b == c for a, b, c in words):
            out.append(("type_ii", ln))
        else:
            out.append(("square_free", ln))
    return out


def dihedral_orbit_closed_form(p: int, x: int, y: int, k: int) -> tuple[int, int]:
    """r^k(x, y) for the dihedral quandle of order p."""
    return (((k + 1) * x - k * y) % p, (k * x - (k - 1) * y) % p)
