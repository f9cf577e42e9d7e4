"""Regenerate src/ybsets/fixtures/*.json from the published data.

Literature labels are 1-based; files store 0-based labels.  Run from the repo root:
    python3 scripts/make_fixtures.py
"""

from __future__ import annotations

from pathlib import Path

from ybsets import io
from ybsets.core import Permutation, flip, from_function, from_table
from ybsets.extensions import ExtensionSpec, build_sigma_tau
from ybsets.racks import dihedral_quandle

OUT = Path(__file__).resolve().parents[1] / "src" / "ybsets" / "fixtures"


def sd_from_cycles(n: int, cycles_1based: dict[int, list[tuple[int, ...]]]):
    """SD set r(x, y) = (L_x(y), x), with L_x given as 1-based cycles."""
    L = {
        x - 1: Permutation.from_cycles(n, [[a - 1 for a in c] for c in cyc])
        for x, cyc in cycles_1based.items()
    }
    return from_function(n, lambda x, y: (L[x](y), x))


def from_r_cycles(n: int, cycles: list[list[tuple[int, int]]]):
    """r given by its orbits on X^2; pairs not listed are fixed."""
    table = {(x, y): (x, y) for x in range(n) for y in range(n)}
    for cyc in cycles:
        for i, p in enumerate(cyc):
            table[p] = cyc[(i + 1) % len(cyc)]
    return from_table(n, [table[(x, y)] for x in range(n) for y in range(n)])


def fixtures():
    rho = Permutation.from_cycles(3, [[0, 1, 2]])
    yield "perm3", from_function(3, lambda a, b: (rho(b), a)), (
        "permutation solution r(a,b) = (rho(b), a), rho = (x y z); braided, not 2-cancellative "
        "(non-2-cancellative example (a) of the quadratic-sets section)"
    )
    x, y, z = 0, 1, 2
    yield "ex33b", from_r_cycles(
        3,
        [
            [(x, y), (x, z), (y, z), (y, y)],
            [(x, x), (z, z), (y, x), (z, y)],
        ],
    ), "non-2-cancellative example (b); orbits xy>xz>yz>yy and xx>zz>yx>zy, zx fixed"
    for n in (3, 4, 5):
        yield f"triv{n}", flip(n), f"trivial solution r(x,y) = (y,x) on {n} letters"
    yield "triv3a", flip(3), "trivial solution on 3 letters (first part of the sigma/tau extension example)"
    yield "triv3b", flip(3), "trivial solution on 3 letters (second part of the sigma/tau extension example)"
    yield "dih3", dihedral_quandle(3).base, "dihedral quandle x > y = 2x - y mod 3, r(x,y) = (x > y, x)"
    yield "dih5", dihedral_quandle(5).base, "dihedral quandle x > y = 2x - y mod 5, r(x,y) = (x > y, x)"
    yield "q5", sd_from_cycles(
        5,
        {
            1: [(2, 4), (3, 5)],
            2: [(1, 3), (4, 5)],
            3: [(2, 5), (1, 4)],
            4: [(1, 5), (2, 3)],
            5: [(3, 4), (1, 2)],
        },
    ), "Ex 5.16: square-free SD set of order 5 given by its left actions; a relabeling of Dih(5)"
    yield "ex517", sd_from_cycles(
        9,
        {
            9: [(1, 6), (2, 5), (3, 4), (7, 8)],
            8: [(1, 9), (2, 7), (3, 6), (4, 5)],
            7: [(1, 4), (2, 3), (5, 8), (6, 9)],
            6: [(1, 2), (3, 8), (4, 9), (5, 7)],
            5: [(1, 8), (2, 9), (3, 7), (4, 6)],
            4: [(1, 7), (2, 6), (3, 5), (8, 9)],
            3: [(1, 5), (2, 4), (6, 8), (9, 7)],
            2: [(1, 3), (4, 8), (6, 7), (5, 9)],
            1: [(2, 8), (3, 9), (5, 6), (4, 7)],
        },
    ), "Ex 5.17: SD set of order 9 with involutive left actions and an r-orbit of length 9"
    yield "ex519", sd_from_cycles(
        4,
        {1: [(3, 4, 2)], 2: [(4, 3, 1)], 3: [(2, 4, 1)], 4: [(3, 2, 1)]},
    ), "Ex 5.19: square-free SD set of order 4, indecomposable, dim A_2 = 8"
    t3 = flip(3)
    c = Permutation.from_cycles(3, [[0, 1, 2]])
    yield "ex64", build_sigma_tau(ExtensionSpec(t3, t3, c, c)), (
        "Ex 6.4: sigma/tau extension of two trivial solutions on 3 letters, sigma = tau = (0 1 2)"
    )


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    for name, qs, prov in fixtures():
        (OUT / f"{name}.json").write_text(io.dumps(qs, {"name": name, "provenance": prov}) + "\n", encoding="utf-8")
        print(name, qs.n)


if __name__ == "__main__":
    main()
