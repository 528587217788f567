"""Command line front end.

Exit codes: 0 all checks passed, 1 a check failed (a witness is
printed), 2 bad input (unreadable file, malformed document, or
arguments that do not fit the requested operation). The DCOSPAN_SEED
environment variable overrides the default seed of every seeded
command; an explicit --seed wins over both.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .base import BASES, FiniteGraph, FiniteSet
from .cobordism import CombCobordism, catalog, euler_characteristic, glue_h, glue_v
from .cospans import Cospan, associator, compose_cospans, pentagon, triangle
from .documents import KINDS, dumps, load, save
from .double import DoubleCospan, SquareClass, hcompose, square_iso, vcompose
from .errors import DiagramError, MismatchError, ParseError
from .extraction import (
    BicatPresentation,
    DoubleCatPresentation,
    build_DC0,
    check_bicat_axioms,
    check_composability_condition,
    extract_bicategory,
)
from .generate import (
    DiagramSampler,
    chain_poset_presentation,
    cyclic_bicat_presentation,
    generate,
)
from .report import AxiomReport
from .verity import build_2cosp0, check_action_conditions, check_verity_axioms


def _seed(args) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    env = os.environ.get("DCOSPAN_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ParseError(f"DCOSPAN_SEED: not an integer: {env!r}") from exc
    return 0


def _load_as(path, cls, what):
    value = load(path)
    if not isinstance(value, cls):
        raise ParseError(f"{path}: expected a {what} document")
    return value


def _emit_report(report: AxiomReport, as_json: bool) -> int:
    if as_json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        for line in report.summary_lines():
            print(line)
    return 0 if report.ok else 1


def _emit_verdict(verdict, as_json: bool) -> int:
    if as_json:
        print(json.dumps(verdict.to_dict(), indent=2))
    else:
        mark = "ok" if verdict.ok else "FAIL"
        print(f"{verdict.law}: {mark}" + (f" ({verdict.detail})" if verdict.detail else ""))
        if not verdict.ok and verdict.witness is not None:
            print(f"  witness: {verdict.witness!r}")
    return 0 if verdict.ok else 1


def _center_label(x) -> str:
    if isinstance(x, FiniteSet):
        return str(x.size)
    return f"{x.vertices}v/{x.edges}e"


# ---------------------------------------------------------------------------
# subcommands


def cmd_compose(args) -> int:
    a, b = load(args.first), load(args.second)
    if isinstance(a, Cospan) and isinstance(b, Cospan):
        out = compose_cospans(a, b)
    elif isinstance(a, DoubleCospan) and isinstance(b, DoubleCospan):
        out = hcompose(a, b) if args.dir == "h" else vcompose(a, b)
    else:
        raise ParseError("compose expects two cospan or two double_cospan documents")
    print(dumps(out))
    return 0


def cmd_assoc(args) -> int:
    f = _load_as(args.f, Cospan, "cospan")
    g = _load_as(args.g, Cospan, "cospan")
    h = _load_as(args.h, Cospan, "cospan")
    cell = associator(f, g, h)
    print(dumps(cell))
    return 0


def cmd_pentagon(args) -> int:
    legs = [_load_as(p, Cospan, "cospan") for p in (args.f, args.g, args.h, args.j)]
    return _emit_verdict(pentagon(*legs), args.json)


def cmd_iso(args) -> int:
    a = _load_as(args.first, DoubleCospan, "double_cospan")
    b = _load_as(args.second, DoubleCospan, "double_cospan")
    try:
        phi = square_iso(a, b)
    except MismatchError as err:
        print(f"iso: FAIL (boundaries differ: {err})")
        return 1
    if phi is None:
        la, lb = _center_label(a.center), _center_label(b.center)
        if la != lb:
            print(f"iso: FAIL (center cardinality {la} != {lb})")
        else:
            print("iso: FAIL (no boundary-fixing center isomorphism)")
        return 1
    if args.json:
        print(json.dumps({"ok": True, "iso": repr(phi)}, indent=2))
    else:
        print(f"iso: ok ({phi!r})")
    return 0


def cmd_class_eq(args) -> int:
    a = _load_as(args.first, DoubleCospan, "double_cospan")
    b = _load_as(args.second, DoubleCospan, "double_cospan")
    if SquareClass(a) == SquareClass(b):
        print("class-eq: ok")
        return 0
    print("class-eq: FAIL (squares are not equal as classes)")
    return 1


def cmd_axioms(args) -> int:
    base = BASES[args.base]
    seed = _seed(args)
    rounds = args.generated if args.generated is not None else 25

    if args.which == "verity":
        if args.input is not None:
            raise ParseError("verity axioms run on generated configurations; use --generated")
        sampler = DiagramSampler(base=base, seed=seed, max_size=args.bound)
        report = check_verity_axioms(build_2cosp0(base), sampler, rounds=rounds)
        return _emit_report(report, args.json)

    if args.which == "bicat":
        if args.input is not None:
            p = _load_as(args.input, BicatPresentation, "bicat_presentation")
        else:
            p = cyclic_bicat_presentation(max(2, args.bound))
        return _emit_report(check_bicat_axioms(p), args.json)

    if args.input is not None:
        raise ParseError("action-conditions run on generated fragments; use --generated")
    sampler = DiagramSampler(base=base, seed=seed, max_size=min(args.bound, 2), pad=1)
    report = AxiomReport()
    for _ in range(max(1, rounds)):
        report.merge(check_action_conditions(sampler.fragment()))
    return _emit_report(report, args.json)


def cmd_extract(args) -> int:
    res = extract_bicategory(
        max_object=args.objects,
        max_apex=args.bound,
        seed=_seed(args),
        co=args.co,
    )
    report = check_bicat_axioms(res.presentation)
    report.inconclusive = report.inconclusive or res.inconclusive
    report.notes.extend(res.notes)
    if args.out:
        save(res.presentation, args.out)
    return _emit_report(report, args.json)


def cmd_dc0(args) -> int:
    if args.presentation is not None:
        p = _load_as(args.presentation, DoubleCatPresentation, "doublecat_presentation")
    else:
        p = chain_poset_presentation(args.chain)
    if args.condition_only:
        return _emit_report(check_composability_condition(p), args.json)
    cat, report = build_DC0(p)
    if not args.json:
        print(f"objects: {len(cat.objects)}, morphisms: {len(cat.morphisms)}")
    return _emit_report(report, args.json)


def _resolve_cobordism(token):
    entries = catalog()
    if token in entries:
        return entries[token]
    value = load(token)
    if isinstance(value, DoubleCospan) and isinstance(value.center, FiniteGraph):
        return CombCobordism(value)
    raise ParseError(f"{token}: not a catalog name or graph double_cospan document")


def cmd_cob(args) -> int:
    if args.action == "catalog":
        entries = catalog()
        if args.json:
            print(
                json.dumps(
                    {name: {"chi": c.chi(), "center": _center_label(c.center)} for name, c in entries.items()},
                    indent=2,
                )
            )
        else:
            for name, c in entries.items():
                print(f"{name}: chi={c.chi()}, center {_center_label(c.center)}")
        return 0
    if args.action == "chi":
        if not args.items:
            raise ParseError("cob chi needs a catalog name or document path")
        for token in args.items:
            c = _resolve_cobordism(token)
            print(f"{token}: chi={c.chi()}")
        return 0
    if len(args.items) != 2:
        raise ParseError("cob glue needs exactly two cobordisms")
    a, b = (_resolve_cobordism(t) for t in args.items)
    glued = glue_h(a, b) if args.dir == "h" else glue_v(a, b)
    shared = a.square.right if args.dir == "h" else a.square.bottom
    expected = a.chi() + b.chi() - euler_characteristic(shared.apex)
    ok = glued.chi() == expected
    print(f"glue: chi={glued.chi()} (additivity {'ok' if ok else 'VIOLATED'})")
    if args.json:
        print(dumps(glued.square))
    return 0 if ok else 1


def cmd_generate(args) -> int:
    value = generate(args.kind, BASES[args.base], args.bound, _seed(args))
    text = dumps(value)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
            fh.write("\n")
    else:
        print(text)
    return 0


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit structured reports")

    p = argparse.ArgumentParser(
        prog="dcospan",
        description="Compose cospans and squares by pushout and check the laws they satisfy.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("compose", parents=[common], help="compose two documents")
    sp.add_argument("first")
    sp.add_argument("second")
    sp.add_argument("--dir", choices=("h", "v"), default="h")
    sp.set_defaults(handler=cmd_compose)

    sp = sub.add_parser("assoc", parents=[common], help="associator of three cospans")
    sp.add_argument("f")
    sp.add_argument("g")
    sp.add_argument("h")
    sp.set_defaults(handler=cmd_assoc)

    sp = sub.add_parser("pentagon", parents=[common], help="pentagon check on four cospans")
    for name in ("f", "g", "h", "j"):
        sp.add_argument(name)
    sp.set_defaults(handler=cmd_pentagon)

    sp = sub.add_parser("iso", parents=[common], help="center isomorphism of two squares")
    sp.add_argument("first")
    sp.add_argument("second")
    sp.set_defaults(handler=cmd_iso)

    sp = sub.add_parser("class-eq", parents=[common], help="square class equality")
    sp.add_argument("first")
    sp.add_argument("second")
    sp.set_defaults(handler=cmd_class_eq)

    sp = sub.add_parser("axioms", parents=[common], help="run a law battery")
    sp.add_argument("which", choices=("verity", "bicat", "action-conditions"))
    sp.add_argument("input", nargs="?")
    sp.add_argument("--generated", type=int, default=None, metavar="N")
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--base", choices=sorted(BASES), default="finset")
    sp.add_argument("--bound", type=int, default=3)
    sp.set_defaults(handler=cmd_axioms)

    sp = sub.add_parser("extract-bicat", parents=[common], help="extract the globular fragment")
    sp.add_argument("--bound", type=int, default=3, help="largest apex size")
    sp.add_argument("--objects", type=int, default=2, help="largest object size")
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--co", action="store_true", help="check the reversed presentation")
    sp.add_argument("--out", help="write the presentation document here")
    sp.set_defaults(handler=cmd_extract)

    sp = sub.add_parser("dc0", parents=[common], help="merge a double category presentation")
    sp.add_argument("presentation", nargs="?")
    sp.add_argument("--chain", type=int, default=3, help="chain poset size when generating")
    sp.add_argument("--condition-only", action="store_true", dest="condition_only")
    sp.set_defaults(handler=cmd_dc0)

    sp = sub.add_parser("cob", parents=[common], help="combinatorial cobordisms")
    sp.add_argument("action", choices=("catalog", "chi", "glue"))
    sp.add_argument("items", nargs="*")
    sp.add_argument("--dir", choices=("h", "v"), default="h")
    sp.set_defaults(handler=cmd_cob)

    sp = sub.add_parser("generate", parents=[common], help="emit a random document")
    sp.add_argument("kind", choices=KINDS)
    sp.add_argument("--base", choices=sorted(BASES), default="finset")
    sp.add_argument("--bound", type=int, default=3)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--out")
    sp.set_defaults(handler=cmd_generate)

    return p


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as err:
        print(f"input error: {err}", file=sys.stderr)
        return 2
    except FileNotFoundError as err:
        print(f"input error: {err}", file=sys.stderr)
        return 2
    except DiagramError as err:
        print(f"input error: {err}", file=sys.stderr)
        return 2


run_command = main


if __name__ == "__main__":
    sys.exit(main())
