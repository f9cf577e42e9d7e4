"""Command-line front end.

Human-readable output renders letters 1-based, as in the literature; JSON
records keep 0-based labels.  Both say which convention they use.  Commands
that construct a solution (quandle, extend) write a solution file to stdout
and a short summary to stderr, so they can be piped into the others.

Exit codes: 0 success, 2 parse or validation error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from . import io
from .algebra import DegLex, groebner, growth_estimate, linear_dims, reduced_relations, render_word
from .core import (
    FLAGS,
    BudgetExceeded,
    Permutation,
    QuadraticSet,
    YBError,
    actions,
    check_conditions,
    fixed_points,
    order_of_r,
)
from .extensions import (
    ExtensionSpec,
    Partition2,
    build_sigma_tau,
    check_extension_conditions,
    is_generalized_stu,
    predicted_orbit_profile,
    stu_monoid_bounded,
)
from .orbits import classify_x3, dm_orbits, graded_dims, r_orbits
from .racks import affine_quandle, dihedral_quandle
from .search import SearchFilter, enumerate_classes, minimality_survey

EXIT_OK, EXIT_PARSE, EXIT_BUDGET = 0, 2, 3


def _pairs1(pairs) -> str:
    return "{" + ", ".join(f"({a + 1},{b + 1})" for a, b in sorted(pairs)) + "}"


def _emit_json(rec: dict) -> None:
    print(io.canonical_json(rec))


def parse_cycles(text: str, size: int) -> Permutation:
    """Parenthesised 0-based cycles such as "(0 1 2)(3 4)"; "()" is the identity."""
    text = text.strip()
    if not re.fullmatch(r"(\(\s*[\d\s,]*\))*", text):
        raise io.ParseError(f"bad cycle notation: {text!r}")
    cycles = []
    for body in re.findall(r"\(([^)]*)\)", text):
        items = [int(v) for v in body.replace(",", " ").split()]
        if items:
            cycles.append(items)
    return Permutation.from_cycles(size, cycles)


def parse_ordering(text: str, n: int) -> tuple[int, ...]:
    items = tuple(int(v) for v in text.replace(",", " ").split())
    if sorted(items) != list(range(n)):
        raise io.ParseError(f"ordering must list each of 0..{n - 1} once, smallest first")
    return items


# ---------------------------------------------------------------------------
# commands


def cmd_check(args) -> int:
    qs, meta = io.load(args.path)
    rep = check_conditions(qs)
    acts = actions(qs)
    F = fixed_points(qs)
    order = order_of_r(qs)
    if args.json:
        rec = {"base": 0, "n": qs.n, "order": order, "fixed_points": sorted(list(p) for p in F), "p": acts.p}
        rec.update(rep.as_record())
        _emit_json(rec)
        return EXIT_OK
    name = meta.get("name", args.path)
    print(f"# {name}  (labels 1-based)")
    print(f"n = {qs.n}")
    print(f"|r| = {order}")
    print(f"fixed points F = {_pairs1(F)}  (|F| = {len(F)})")
    if acts.p is not None:
        print(f"p = lcm of orders of L_x, R_x = {acts.p}")
    for flag in FLAGS:
        val = rep.flags[flag]
        line = f"{flag:18s} {'yes' if val else 'no'}"
        w = rep.witnesses.get(flag)
        if not val and w is not None:
            line += f"   witness {_render_witness(w)}"
        print(line)
    return EXIT_OK


def _render_witness(w: tuple) -> str:
    parts = []
    for v in w:
        parts.append(str(v + 1) if isinstance(v, int) else str(v))
    return "(" + ", ".join(parts) + ")"


def cmd_dims(args) -> int:
    qs, _ = io.load(args.path)
    dims = graded_dims(qs, args.max_degree).dims
    if args.json:
        rec = {"base": 0, "dims": list(dims)}
        if len(dims) >= 4:
            rec["growth"] = growth_estimate(dims).as_record()
        _emit_json(rec)
    else:
        print(" ".join(str(d) for d in dims))
    return EXIT_OK


def cmd_orbits(args) -> int:
    qs, _ = io.load(args.path)
    part = dm_orbits(qs, args.degree)
    if args.json:
        _emit_json(
            {
                "base": 0,
                "degree": args.degree,
                "count": part.count,
                "reps": [list(part.rep_word(j)) for j in range(part.count)],
                "lengths": list(part.lengths),
            }
        )
        return EXIT_OK
    print(f"# D_{args.degree}-orbits  (letters 1-based)")
    print(f"orbits = {part.count}  (= dim A_{args.degree})")
    if args.degree == 2:
        print(f"nontrivial q = {part.q}, fixed = {part.fixed_count}")
    if args.degree == 3:
        c = classify_x3(qs)
        print(f"X^3 census: {c.counts}")
    for j in range(part.count):
        print(f"{render_word(part.rep_word(j))}  length {part.lengths[j]}")
    return EXIT_OK


def cmd_groebner(args) -> int:
    qs, _ = io.load(args.path)
    ordering = parse_ordering(args.order, qs.n) if args.order else None
    pres = reduced_relations(qs, ordering)
    gb = groebner(pres, args.max_degree)
    if args.json:
        _emit_json(
            {
                "base": 0,
                "ordering": list(pres.ordering),
                "max_degree": gb.max_degree,
                "complete": gb.complete,
                "elements": [
                    [[list(w), str(c)] for w, c in sorted(p.items(), key=lambda t: gb.order.key(t[0]), reverse=True)]
                    for p in gb.elements
                ],
            }
        )
        return EXIT_OK
    print(f"# Groebner basis to degree {gb.max_degree}  (letters 1-based, ordering {' < '.join(str(g + 1) for g in pres.ordering)})")
    print(f"quadratic relations: {pres.s}")
    status = "complete" if gb.complete else f"incomplete above degree {gb.max_degree} (overlap fails at degree {gb.failing_degree})"
    print(f"status: {status}")
    for line in gb.rendered(extras_only=not args.all):
        print(line)
    return EXIT_OK


def cmd_quandle(args) -> int:
    if args.kind == "dihedral":
        if len(args.params) != 1:
            raise io.ParseError("usage: quandle dihedral P")
        rack = dihedral_quandle(args.params[0])
        meta = {"name": f"dihedral quandle of order {args.params[0]}", "provenance": "x ▷ y = 2x - y"}
    else:
        if len(args.params) != 2:
            raise io.ParseError("usage: quandle affine N G")
        n, g = args.params
        rack = affine_quandle(n, g)
        meta = {"name": f"affine quandle Aff({n},{g})", "provenance": "x ▷ y = (1-g)x + gy"}
    print(io.dumps(rack.base, meta))
    print(f"quandle: n = {rack.n}, |r| = {order_of_r(rack.base)}", file=sys.stderr)
    return EXIT_OK


def cmd_extend(args) -> int:
    X, _ = io.load(args.x)
    Y, _ = io.load(args.y)
    spec = ExtensionSpec(X, Y, parse_cycles(args.sigma, X.n), parse_cycles(args.tau, Y.n))
    z = build_sigma_tau(spec)
    ext = check_extension_conditions(spec)
    prof = predicted_orbit_profile(spec)
    meta = {
        "name": "sigma/tau extension",
        "provenance": f"X = {args.x}, Y = {args.y}, sigma = {spec.sigma}, tau = {spec.tau} (0-based cycles)",
    }
    print(io.dumps(z, meta))
    err = sys.stderr
    rep = check_conditions(z)
    print(f"|Z| = {z.n}, |r| = {order_of_r(z)}", file=err)
    print(
        f"predicted braided: {ext.verdict}, direct braided: {ext.direct_braided}, "
        f"2-cancellative: {rep.two_cancellative}, square-free: {rep.square_free}, "
        f"nondegenerate: {rep.nondegenerate}",
        file=err,
    )
    print(f"mixed orbit lengths: {prof.direct_mixed_lengths}", file=err)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    req = [v for v in (args.require or "").replace(",", " ").split() if v]
    forb = [v for v in (args.forbid or "").replace(",", " ").split() if v]
    try:
        filt = SearchFilter.of(req, forb)
    except ValueError as exc:
        raise io.ParseError(str(exc)) from exc
    classes = enumerate_classes(args.n, filt)
    for i, qs in enumerate(classes):
        rec = {"base": 0, "index": i, "n": qs.n, "r": [list(p) for p in qs.rmap], "dim_A2": r_orbits(qs).count}
        _emit_json(rec)
        sys.stdout.flush()
    print(f"{len(classes)} isomorphism classes", file=sys.stderr)
    return EXIT_OK


def cmd_survey(args) -> int:
    recs = minimality_survey(args.n, sd_only=args.sd_only)
    for rec in recs:
        out = {"base": 0}
        out.update(rec.as_record())
        _emit_json(out)
    print(f"{len(recs)} classes satisfy the minimality condition", file=sys.stderr)
    return EXIT_OK


def cmd_stu(args) -> int:
    z, _ = io.load(args.path)
    part = Partition2.parse(args.blocks)
    ground = is_generalized_stu(z, part)
    print(f"# strong twisted union check  (labels 1-based)")
    print(f"blocks: " + " | ".join(" ".join(str(x + 1) for x in b) for b in part.blocks))
    if ground.verdict:
        print("ground level: stu1-stu4 hold for every block pair")
    else:
        tag, i, j, w = ground.failures[0]
        print(f"ground level: {tag} fails for blocks {i + 1},{j + 1} at {_render_witness(w)}")
    if args.length and check_conditions(z).braided:
        mono = stu_monoid_bounded(z, part, args.length)
        status = "hold" if mono.ok else "fail: " + ", ".join(k for k, v in mono.witnesses.items() if v)
        print(f"monoid level up to length {args.length}: {status}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ybsets", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="all property flags with witnesses")
    c.add_argument("path")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("dims", help="dim A_m for m = 0..M via orbit counts")
    c.add_argument("path")
    c.add_argument("--max-degree", type=int, default=3)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_dims)

    c = sub.add_parser("orbits", help="D_m-orbits in X^m")
    c.add_argument("path")
    c.add_argument("--degree", type=int, default=2)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_orbits)

    c = sub.add_parser("groebner", help="degree-bounded Groebner basis; extras by default")
    c.add_argument("path", nargs="?", default="-")
    c.add_argument("--max-degree", type=int, default=6)
    c.add_argument("--order", help="generators smallest first, 0-based, e.g. '2,0,1'")
    c.add_argument("--all", action="store_true", help="print the quadratic relations too")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_groebner)

    c = sub.add_parser("quandle", help="dihedral P | affine N G")
    c.add_argument("kind", choices=["dihedral", "affine"])
    c.add_argument("params", type=int, nargs="+")
    c.set_defaults(func=cmd_quandle)

    c = sub.add_parser("extend", help="sigma/tau extension of two solutions")
    c.add_argument("x")
    c.add_argument("y")
    c.add_argument("--sigma", required=True)
    c.add_argument("--tau", required=True)
    c.set_defaults(func=cmd_extend)

    c = sub.add_parser("enumerate", help="isomorphism classes of small quadratic sets")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--require", default="")
    c.add_argument("--forbid", default="")
    c.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("survey", help="classes satisfying the minimality condition")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--sd-only", action="store_true")
    c.set_defaults(func=cmd_survey)

    c = sub.add_parser("stu", help="strong twisted union check for a block partition")
    c.add_argument("path")
    c.add_argument("--blocks", required=True, help="0-based blocks, e.g. '0,1,2|3,4,5'")
    c.add_argument("--length", type=int, default=0)
    c.set_defaults(func=cmd_stu)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (YBError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
