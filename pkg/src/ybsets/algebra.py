"""Quadratic algebras A(k, X, r): reduced relations, Koszul duals, Gröbner bases.

Polynomials are dicts mapping words (tuples of generator indices) to exact
rationals.  Monomials are compared degree-lexicographically with respect to a
generator ordering given as the list of generators from smallest to largest.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from math import comb
from typing import Iterable, Sequence

from .core import QuadraticSet, YBError, fixed_points
from .orbits import GradedDims, decode, r_orbits

Word = tuple[int, ...]
Poly = dict[Word, Fraction]


class DegreeBudgetExceeded(YBError):
    pass


def _ranks(ordering: Sequence[int]) -> tuple[int, ...]:
    rank = [0] * len(ordering)
    for k, g in enumerate(ordering):
        rank[g] = k
    return tuple(rank)


class DegLex:
    """Degree-lexicographic monomial order induced by a generator ordering."""

    def __init__(self, ordering: Sequence[int]):
        self.ordering = tuple(ordering)
        self.rank = _ranks(self.ordering)

    def key(self, w: Word) -> tuple:
        rank = self.rank
        return (len(w), tuple(rank[a] for a in w))

    def lead(self, poly: Poly) -> Word:
        return max(poly, key=self.key)


@dataclass(frozen=True)
class Binomial:
    """lead + coeff * tail; a pure monomial when tail is None."""

    lead: Word
    tail: Word | None = None
    coeff: int = -1

    def poly(self) -> Poly:
        out: Poly = {self.lead: Fraction(1)}
        if self.tail is not None:
            out[self.tail] = out.get(self.tail, Fraction(0)) + self.coeff
        return out


def render_word(w: Word, base: int = 1) -> str:
    if base == 1 and all(a < 9 for a in w):
        return "".join(str(a + 1) for a in w)
    return ".".join(str(a + base) for a in w)


def render_poly(poly: Poly, order: DegLex, base: int = 1) -> str:
    terms = sorted(poly.items(), key=lambda t: order.key(t[0]), reverse=True)
    out = ""
    for i, (w, c) in enumerate(terms):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        coef = "" if mag == 1 else f"{mag}*"
        if i == 0:
            out += ("-" if c < 0 else "") + coef + render_word(w, base)
        else:
            out += sign + coef + render_word(w, base)
    return out


@dataclass(frozen=True)
class Presentation:
    n: int
    ordering: tuple[int, ...]
    relations: tuple[Binomial, ...]
    dual_relations: tuple[Binomial, ...]

    @property
    def s(self) -> int:
        return len(self.relations)

    @property
    def order(self) -> DegLex:
        return DegLex(self.ordering)


def reduced_relations(qs: QuadraticSet, ordering: Sequence[int] | None = None) -> Presentation:
    """One relation w - min(O) for every non-minimal w of each nontrivial r-orbit O.

    The Koszul dual uses the convention R⊥ = {ξ_w + ξ_min} ∪ {ξ_f : f fixed by r}.
    """
    n = qs.n
    ordering = tuple(range(n)) if ordering is None else tuple(ordering)
    order = DegLex(ordering)
    part = r_orbits(qs)
    rels = []
    duals = []
    for members in part.orbits():
        if len(members) == 1:
            continue
        words = sorted((decode(w, n, 2) for w in members), key=order.key)
        low = words[0]
        for w in words[1:]:
            rels.append(Binomial(w, low, -1))
            duals.append(Binomial(w, low, +1))
    for f in sorted(fixed_points(qs)):
        duals.append(Binomial(f))
    rels.sort(key=lambda b: order.key(b.lead))
    return Presentation(n, ordering, tuple(rels), tuple(duals))


# ---------------------------------------------------------------------------
# exact rank


def sparse_rank(rows: Iterable[dict[int, Fraction]]) -> int:
    """Rank over Q of sparse rows given as {column: value}.

    Incremental row echelon form: every stored pivot row is normalised to 1 at
    its smallest column, and incoming rows are reduced on their leading column
    until they vanish or expose a new pivot.
    """
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        row = {c: Fraction(v) for c, v in row.items() if v}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                inv = 1 / row[c]
                pivots[c] = {k: v * inv for k, v in row.items()}
                break
            f = row[c]
            for k, v in piv.items():
                nv = row.get(k, 0) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return len(pivots)


def _ideal_rank(n: int, rels: Sequence[Binomial], m: int) -> int:
    """dim of sum_{i+j=m-2} V^i R V^j inside V^m."""
    rows = []
    polys = [b.poly() for b in rels]
    for i in range(m - 1):
        j = m - 2 - i
        for pre in product(range(n), repeat=i):
            for suf in product(range(n), repeat=j):
                for p in polys:
                    row: dict[int, Fraction] = {}
                    for w, c in p.items():
                        col = 0
                        for a in pre + w + suf:
                            col = col * n + a
                        row[col] = row.get(col, 0) + c
                    rows.append(row)
    return sparse_rank(rows)


LINEAR_BUDGET = 200_000


def linear_dims(pres: Presentation, m: int) -> tuple[int, int]:
    """(dim A_m, dim A!_m) from exact ranks of the degree-m parts of the ideals."""
    n = pres.n
    if m < 0:
        raise ValueError("degree must be non-negative")
    if m < 2:
        return (n**m, n**m)
    size = (m - 1) * n ** (m - 2) * max(len(pres.relations), len(pres.dual_relations))
    if size > LINEAR_BUDGET:
        from .core import BudgetExceeded

        raise BudgetExceeded(f"{size} rows at degree {m} exceeds {LINEAR_BUDGET}")
    total = n**m
    return (
        total - _ideal_rank(n, pres.relations, m),
        total - _ideal_rank(n, pres.dual_relations, m),
    )


def dual_dims(pres: Presentation, M: int) -> GradedDims:
    return GradedDims(tuple(linear_dims(pres, m)[1] for m in range(M + 1)))


# ---------------------------------------------------------------------------
# noncommutative Gröbner bases


def _add_scaled(target: Poly, src: Poly, c: Fraction, pre: Word = (), suf: Word = ()) -> None:
    for w, v in src.items():
        key = pre + w + suf
        nv = target.get(key, 0) + c * v
        if nv:
            target[key] = nv
        else:
            target.pop(key, None)


class _Reducer:
    def __init__(self, order: DegLex):
        self.order = order
        self.by_lead: dict[Word, Poly] = {}
        self.lead_lengths: set[int] = set()

    def add(self, poly: Poly) -> Word:
        lead = self.order.lead(poly)
        c = poly[lead]
        monic = {w: v / c for w, v in poly.items()}
        self.by_lead[lead] = monic
        self.lead_lengths.add(len(lead))
        return lead

    def divisor(self, w: Word) -> tuple[int, Word] | None:
        for ln in sorted(self.lead_lengths):
            for i in range(len(w) - ln + 1):
                sub = w[i : i + ln]
                if sub in self.by_lead:
                    return i, sub
        return None

    def reduce(self, poly: Poly, skip: Word | None = None) -> Poly:
        work = dict(poly)
        out: Poly = {}
        key = self.order.key
        while work:
            w = max(work, key=key)
            c = work[w]
            hit = self._divisor_skip(w, skip)
            if hit is None:
                out[w] = c
                del work[w]
                continue
            i, lead = hit
            _add_scaled(work, self.by_lead[lead], -c, w[:i], w[i + len(lead) :])
        return out

    def _divisor_skip(self, w: Word, skip: Word | None):
        if skip is None:
            return self.divisor(w)
        for ln in sorted(self.lead_lengths):
            for i in range(len(w) - ln + 1):
                sub = w[i : i + ln]
                if sub in self.by_lead and sub != skip:
                    return i, sub
        return None


def _overlaps(a: Word, b: Word) -> Iterable[tuple[Word, Word, Word]]:
    """Splittings a = A·B, b = B·C with A, B, C nonempty."""
    for k in range(1, min(len(a), len(b))):
        if a[-k:] == b[:k]:
            yield a[:-k], a[-k:], b[k:]


def _spoly(f: Poly, g: Poly, A: Word, C: Word) -> Poly:
    s: Poly = {}
    _add_scaled(s, f, Fraction(1), (), C)
    _add_scaled(s, g, Fraction(-1), A, ())
    return s


@dataclass
class GroebnerBasis:
    n: int
    ordering: tuple[int, ...]
    elements: list[Poly]
    max_degree: int
    complete_to_degree: int
    complete: bool
    failing_degree: int | None = None
    quadratic_leads: frozenset = field(default_factory=frozenset)

    @property
    def order(self) -> DegLex:
        return DegLex(self.ordering)

    def leads(self) -> list[Word]:
        return [self.order.lead(p) for p in self.elements]

    def extras(self) -> list[Poly]:
        """Elements not among the quadratic input relations."""
        return [p for p in self.elements if self.order.lead(p) not in self.quadratic_leads]

    def rendered(self, base: int = 1, extras_only: bool = False) -> list[str]:
        src = self.extras() if extras_only else self.elements
        return [render_poly(p, self.order, base) for p in src]

    def normal_word_count(self, m: int) -> int:
        leads = set(self.leads())
        lens = sorted({len(w) for w in leads})
        count = 0
        stack: list[Word] = [()]
        while stack:
            w = stack.pop()
            if len(w) == m:
                count += 1
                continue
            for a in range(self.n):
                nw = w + (a,)
                if any(len(nw) >= ln and nw[-ln:] in leads for ln in lens):
                    continue
                stack.append(nw)
        return count


def groebner(pres: Presentation, D: int = 6, strict: bool = False) -> GroebnerBasis:
    """Degree-bounded Buchberger over Q for the homogeneous ideal of pres.

    Overlaps are processed degree by degree up to D, so the result is a Gröbner
    basis of the ideal truncated at degree D.  Overlaps among the final
    elements above D are then tested; if all resolve the basis is complete.
    """
    if D < 2:
        raise ValueError("D must be at least 2")
    order = DegLex(pres.ordering)
    red = _Reducer(order)
    for b in pres.relations:
        p = red.reduce(b.poly())
        if p:
            red.add(p)
    quad = frozenset(red.by_lead)
    done_pairs: set[tuple[Word, Word, int]] = set()
    for d in range(3, D + 1):
        while True:
            pending = []
            leads = sorted(red.by_lead, key=order.key)
            for la in leads:
                for lb in leads:
                    for A, B, C in _overlaps(la, lb):
                        if len(A) + len(B) + len(C) != d:
                            continue
                        tag = (la, lb, len(B))
                        if tag in done_pairs:
                            continue
                        pending.append((la, lb, A, C, tag))
            if not pending:
                break
            for la, lb, A, C, tag in pending:
                done_pairs.add(tag)
                if la not in red.by_lead or lb not in red.by_lead:
                    continue
                s = red.reduce(_spoly(red.by_lead[la], red.by_lead[lb], A, C))
                if s:
                    red.add(s)
    # interreduce tails
    final: dict[Word, Poly] = {}
    for lead in sorted(red.by_lead, key=order.key):
        final[lead] = red.reduce(red.by_lead[lead], skip=lead)
    red.by_lead = final
    elements = [final[k] for k in sorted(final, key=order.key)]
    # completeness probe above D
    failing = None
    leads = sorted(final, key=order.key)
    for la in leads:
        for lb in leads:
            for A, B, C in _overlaps(la, lb):
                d = len(A) + len(B) + len(C)
                if d <= D:
                    continue
                if red.reduce(_spoly(final[la], final[lb], A, C)):
                    failing = d if failing is None else min(failing, d)
    if failing is not None and strict:
        raise DegreeBudgetExceeded(f"overlap at degree {failing} does not resolve; basis incomplete above {D}")
    return GroebnerBasis(
        pres.n, pres.ordering, elements, D, D, failing is None, failing, quad
    )


def overlaps_resolve(pres: Presentation) -> tuple[Word, Word] | None:
    """First pair of quadratic leads whose degree-3 overlap fails to reduce to zero."""
    order = DegLex(pres.ordering)
    red = _Reducer(order)
    for b in pres.relations:
        red.add(b.poly())
    leads = sorted(red.by_lead, key=order.key)
    for la in leads:
        for lb in leads:
            for A, _, C in _overlaps(la, lb):
                if red.reduce(_spoly(red.by_lead[la], red.by_lead[lb], A, C)):
                    return (la, lb)
    return None


@dataclass(frozen=True)
class PBWVerdict:
    pbw: bool
    ordering: tuple[int, ...] | None
    tried: int
    obstruction: tuple[Word, Word] | None = None


def is_pbw(
    qs: QuadraticSet, exhaustive: bool = False, ordering: Sequence[int] | None = None
) -> PBWVerdict:
    """PBW test: the reduced quadratic relations resolve all degree-3 overlaps.

    With exhaustive=True every generator ordering is tried (n! of them) and the
    first witness in lexicographic order of orderings is returned.
    """
    n = qs.n
    if exhaustive:
        if n > 7:
            raise ValueError("exhaustive PBW search limited to n <= 7")
        cands: Iterable[tuple[int, ...]] = permutations(range(n))
    else:
        cands = [tuple(range(n)) if ordering is None else tuple(ordering)]
    tried = 0
    first_obstruction = None
    for ordr in cands:
        tried += 1
        bad = overlaps_resolve(reduced_relations(qs, ordr))
        if bad is None:
            return PBWVerdict(True, ordr, tried)
        if first_obstruction is None:
            first_obstruction = bad
    return PBWVerdict(False, None, tried, first_obstruction)


def koszul_hilbert_check(dimsA: Sequence[int], dimsAdual: Sequence[int], M: int) -> list[int]:
    """Coefficients of H_A(z) H_{A!}(-z) - 1 in degrees 0..M."""
    a = list(dimsA)
    b = list(dimsAdual)
    if len(a) < M + 1 or len(b) < M + 1:
        raise ValueError("need dims through degree M for both algebras")
    out = []
    for k in range(M + 1):
        c = sum(a[i] * (-1) ** (k - i) * b[k - i] for i in range(k + 1))
        out.append(c - (1 if k == 0 else 0))
    return out


@dataclass(frozen=True)
class GrowthVerdict:
    """Polynomial degree of m -> dim A_m fitted on a trailing window.

    poly_degree d means the (d+1)-th differences vanish on the window, which is
    consistent with GK-dimension d+1.  This is an estimate, not a proof.
    """

    poly_degree: int | None
    gk_estimate: int | None
    window: int
    conclusive: bool

    def as_record(self) -> dict:
        return {
            "poly_degree": self.poly_degree,
            "gk_estimate": self.gk_estimate,
            "window": self.window,
            "conclusive": self.conclusive,
            "proxy": True,
        }


def growth_estimate(dims: Sequence[int], window: int | None = None) -> GrowthVerdict:
    """Smallest d whose d-th differences of m -> dim A_m end in a run of zeros.

    By default the differences are taken over degrees 1..M and the run of
    trailing zeros must have length at least two; the reported window is the
    number of dims values that run depends on.  With an explicit window only
    the last `window` values are used and every d-th difference inside it
    must vanish.  Sequences that never settle are reported as inconclusive.
    """
    seq = list(dims)
    if len(seq) < 4:
        raise ValueError("growth estimate needs at least 4 data points")
    if window is not None:
        diff = seq[-window:]
        for d in range(0, window - 1):
            if all(v == 0 for v in diff):
                return GrowthVerdict(d - 1, d, window, True)
            diff = [b - a for a, b in zip(diff, diff[1:])]
        return GrowthVerdict(None, None, window, False)
    diff = seq[1:]
    for d in range(0, len(diff) - 1):
        run = 0
        for v in reversed(diff):
            if v != 0:
                break
            run += 1
        if run >= 2:
            return GrowthVerdict(d - 1, d, run + d, True)
        diff = [b - a for a, b in zip(diff, diff[1:])]
    return GrowthVerdict(None, None, len(seq) - 1, False)


def trivial_dims(n: int, M: int) -> list[int]:
    return [comb(n + m - 1, m) for m in range(M + 1)]
