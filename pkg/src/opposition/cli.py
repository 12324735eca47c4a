"""Command-line front end.

Exit codes: 0 all checks pass, 1 a violation or counterexample was found,
2 invalid input or usage.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from .core import ClassCStructure, NotInClassC, StructureError, admit, load_structure, validate_axioms
from .diagrams import (
    Claim,
    Hypothesis,
    Shape,
    build_diagram,
    classify_pair,
    counterexample_search,
    render_dot,
    verify_shape,
)
from .harness import MAX_SIZE, EnumerationConfig, sample_check_instance, structures_of_size, sweep_theorems
from .statements import AbsUndefined, StatementKind, truth

OK, FOUND, BAD_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _hypothesis(args) -> Hypothesis:
    return Hypothesis(args.forward, args.backward, args.distinct, args.nondual)


def _load_admitted(path: str) -> ClassCStructure:
    raw = load_structure(path)
    try:
        return admit(raw)
    except NotInClassC as exc:
        raise InputError(f"{exc}\n{exc.report.describe(raw)}") from None


def _fmt_set(s: ClassCStructure, idx) -> str:
    return "{" + ", ".join(s.labels[i] for i in sorted(idx)) + "}"


def cmd_check(args) -> int:
    raw = load_structure(args.file)
    report = validate_axioms(raw)
    print(f"structure {raw.name} ({len(raw)} elements)")
    print(report.describe(raw))
    if not report.ok:
        print("RESULT rejected")
        return FOUND
    s = admit(raw)
    print(f"Z = {_fmt_set(s, s.zeros)}")
    print("RESULT admitted")
    return OK


def cmd_diagram(args) -> int:
    s = _load_admitted(args.structure)
    h = _hypothesis(args)
    report = verify_shape(s, args.shape, h, args.abs)
    sys.stdout.write(report.to_text())
    if args.p is not None or args.q is not None:
        if args.p is None or args.q is None:
            raise InputError("--p and --q must be given together")
        p, q = s.index(args.p), s.index(args.q)
        print(f"# point P={s.labels[p]} Q={s.labels[q]} admissible={h.admits(s, p, q)}")
        for kind in build_diagram(args.shape, args.abs).vertices:
            try:
                value = truth(s, kind, p, q)
            except AbsUndefined:
                value = "undefined"
            print(f"VALUE {kind}={value}")
    if args.dot:
        Path(args.dot).write_text(render_dot(build_diagram(args.shape, args.abs), report))
        print(f"# wrote {args.dot}")
    return OK if report.ok else FOUND


def cmd_relations(args) -> int:
    s = _load_admitted(args.structure)
    s1, s2 = StatementKind.parse(args.s1, args.abs), StatementKind.parse(args.s2, args.abs)
    rel = classify_pair(s, s1, s2, _hypothesis(args))
    names = ",".join(sorted(str(r) for r in rel)) or "none"
    print(
        f"RELATIONS pair={s1},{s2} hypothesis={_hypothesis(args).flags()} admissible_points={rel.admissible} "
        f"vacuous={rel.vacuous} relations={names}"
    )
    return OK


def cmd_counterexample(args) -> int:
    s = _load_admitted(args.structure)
    try:
        claim = Claim.parse(args.claim, args.abs)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    h = _hypothesis(args)
    pt = counterexample_search(s, claim, h)
    if pt is None:
        print(f"COUNTEREXAMPLE claim={claim} hypothesis={h.flags()} none")
        return OK
    p, q = pt
    values = {k: truth(s, k, p, q) for k in claim.pair}
    shown = " ".join(f"{k}={v}" for k, v in values.items())
    print(f"COUNTEREXAMPLE claim={claim} hypothesis={h.flags()} P={s.labels[p]} Q={s.labels[q]} {shown}")
    return FOUND


def cmd_enumerate(args) -> int:
    total = 0
    for n in range(1, args.max_size + 1):
        structures = list(structures_of_size(n, args.iso))
        total += len(structures)
        print(f"COUNT size={n} structures={len(structures)}")
        if args.list:
            for s in structures:
                neg = " ".join(f"{s.labels[i]}->{s.labels[s.neg[i]]}" for i in range(n))
                print(f"  {s.name} neg[{neg}] zeros={_fmt_set(s, s.zeros)}")
    print(f"# total={total} ({'isomorphism classes' if args.iso else 'labelled'})")
    return OK


def cmd_sweep(args) -> int:
    shapes = tuple(dict.fromkeys(args.shape or ["square"]))
    cfg = EnumerationConfig(args.max_size, args.iso, _hypothesis(args), shapes, args.abs, args.workers)
    report = sweep_theorems(cfg)
    sys.stdout.write(report.to_text(include_timing=args.timing))
    if args.json:
        Path(args.json).write_text(report.to_json())
    return OK if report.ok else FOUND


def _demo_three_valued() -> int:
    from .instances import three_valued

    s = three_valued()
    print(f"T3 admitted, Z = {_fmt_set(s, s.zeros)}")
    code = OK
    for shape in Shape:
        report = verify_shape(s, shape)
        sys.stdout.write(report.to_text())
        code = max(code, OK if report.ok else FOUND)
    return code


def _demo_multiset() -> int:
    from .instances import (
        SignedMultiset,
        multiset_leq,
        multiset_leq_literal,
        multiset_neg,
        multiset_union,
    )

    a = SignedMultiset.of({"x": 2, "y": -1})
    empty = SignedMultiset.of({})
    print(f"A = {a}")
    print(f"neg A = {multiset_neg(a)}")
    print(f"A (+) neg A = {multiset_union(a, multiset_neg(a))}")
    print(f"neg {{}} <= {{}}: {multiset_leq(multiset_neg(empty), empty)}")
    one = SignedMultiset.of({"x": 1})
    print(f"pointwise: {one} <= {{}}: {multiset_leq(one, empty)}, {{}} <= {one}: {multiset_leq(empty, one)}")
    lit = multiset_leq_literal(one, empty), multiset_leq_literal(empty, one)
    print(f"one-sided rule: {one} <= {{}}: {lit[0]}, {{}} <= {one}: {lit[1]}  (antisymmetry fails: {all(lit)})")
    return OK


def _demo_sets() -> int:
    from itertools import combinations

    from .instances import SignedMultiset, classical_complement, multiset_neg, multiset_union

    keys = ("a", "b", "c", "d")
    universe = SignedMultiset.of({k: 1 for k in keys})
    bad = 0
    for r in range(len(keys) + 1):
        for subset in combinations(keys, r):
            a = SignedMultiset.of({k: 1 for k in subset})
            comp = classical_complement(a, universe)
            expected = SignedMultiset.of({k: 1 for k in keys if k not in subset})
            round_trip = multiset_union(comp, multiset_neg(universe)) == multiset_neg(a)
            ok = comp == expected and round_trip
            bad += not ok
            print(f"SET {{{', '.join(subset)}}} complement={comp} ok={ok}")
    print(f"# {16 - bad}/16 subsets agree")
    return OK if bad == 0 else FOUND


def _demo_prop_square() -> int:
    from .instances import prop_square, prop_vertices

    for kind, tv in prop_vertices().items():
        print(f"VECTOR {kind} {list(tv.bits)}")
    report = prop_square()
    sys.stdout.write(report.to_text())
    return OK if report.ok else FOUND


def _demo_matrix(samples: int, seed: int) -> int:
    code = OK
    for dim in (2, 3):
        report = sample_check_instance("matrix", samples, seed, dim=dim)
        sys.stdout.write(report.to_text())
        code = max(code, OK if report.ok else FOUND)
    return code


def _demo_negation(samples: int, seed: int) -> int:
    from .instances import NegationGenerator

    code = OK
    for p in (0.5, 1.0, 2.0):
        report = sample_check_instance("negation", samples, seed, generator=NegationGenerator.power(p))
        sys.stdout.write(report.to_text())
        code = max(code, OK if report.ok else FOUND)
    return code


def cmd_instance_demo(args) -> int:
    demos = {
        "three-valued": _demo_three_valued,
        "multiset": _demo_multiset,
        "sets": _demo_sets,
        "prop-square": _demo_prop_square,
        "matrix": lambda: _demo_matrix(args.samples or 1000, args.seed),
        "negation": lambda: _demo_negation(args.samples or 10_000, args.seed),
    }
    return demos[args.name]()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="opposition", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    hyp = argparse.ArgumentParser(add_help=False)
    g = hyp.add_argument_group("hypothesis")
    g.add_argument("--forward", action=argparse.BooleanOptionalAction, default=True, help="require P above a zero")
    g.add_argument("--backward", action="store_true", help="require neg(P) above a zero")
    g.add_argument("--distinct", action="store_true", help="require P != Q")
    g.add_argument("--nondual", action="store_true", help="require P != neg(Q)")
    g.add_argument("--abs", action="store_true", help="use the |Q| forms of U and Y")

    p = sub.add_parser("check", help="validate a structure file")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("diagram", parents=[hyp], help="verify a shape's claims on a structure")
    p.add_argument("--shape", choices=[s.value for s in Shape], required=True)
    p.add_argument("--structure", required=True)
    p.add_argument("--p")
    p.add_argument("--q")
    p.add_argument("--dot", help="write DOT output here")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("relations", parents=[hyp], help="classify a pair of statements")
    p.add_argument("--structure", required=True)
    p.add_argument("--s1", required=True, choices=[k.value for k in StatementKind][:10])
    p.add_argument("--s2", required=True, choices=[k.value for k in StatementKind][:10])
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("counterexample", parents=[hyp], help="search for a point falsifying a claim")
    p.add_argument("--structure", required=True)
    p.add_argument("--claim", required=True, help="e.g. 'A->I', 'contrary(a,e)'")
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("enumerate", help="count class-C structures by size")
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--iso", action="store_true", help="one representative per isomorphism class")
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("sweep", parents=[hyp], help="exhaustively check claims over all small structures")
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--shape", action="append", choices=[s.value for s in Shape])
    p.add_argument("--iso", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", help="write machine-readable summary here")
    p.add_argument("--timing", action="store_true", help="append wall time (breaks byte-identity)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("instance-demo", help="run one of the example carriers")
    p.add_argument("name", choices=["three-valued", "multiset", "sets", "prop-square", "matrix", "negation"])
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_instance_demo)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else OK
    if getattr(args, "max_size", None) is not None and not 1 <= args.max_size <= MAX_SIZE:
        print(f"error: --max-size must be between 1 and {MAX_SIZE}", file=sys.stderr)
        return BAD_INPUT
    try:
        return args.func(args)
    except (InputError, StructureError, AbsUndefined, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT


def main() -> None:
    np.set_printoptions(precision=4)
    sys.exit(run())


if __name__ == "__main__":
    main()
