"""Command-line surface over every computation.

Subcommands: check, pi, components, nerve, loop, exact, examples.
Output is deterministic for identical input; ``--format json`` emits one
parseable object.  Exit codes: 0 success, 1 validation failure, 2 usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import exactseq, loop, nerve
from .documents import (
    candidate_of_document,
    load_document,
    parse_xmod,
    serialize_xmod,
)
from .errors import PreconditionFailed, XModError
from .groups import FiniteGroup, conjugacy_classes, image, kernel
from .xmod import CrossedModule, check_axioms, homotopy


def describe_group(group: FiniteGroup) -> str:
    n = len(group)
    if n == 1:
        return "trivial"
    if any(group.element_order(x) == n for x in group):
        return f"C{n}"
    if group.is_abelian():
        return f"abelian of order {n}"
    return f"nonabelian of order {n}"


def _group_summary(group: FiniteGroup) -> dict:
    return {
        "order": len(group),
        "structure": describe_group(group),
        "elements": list(group.elements),
    }


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _load(args) -> CrossedModule:
    text = Path(args.file).read_text(encoding="utf-8")
    return parse_xmod(text)


def _require_base(x: CrossedModule, base: str | None) -> str:
    if base is None:
        raise PreconditionFailed("--base is required for this command")
    if base not in x.P:
        raise XModError(f"base element {base!r} is not an element of P")
    return base


def _cmd_check(args) -> int:
    text = Path(args.file).read_text(encoding="utf-8")
    doc = load_document(text)
    report = check_axioms(candidate_of_document(doc))
    payload = {
        "command": "check",
        "valid": not report,
        "violations": [
            {"kind": v.kind, "message": v.message, "witness": list(v.witness)}
            for v in report
        ],
    }
    if report:
        lines = [f"invalid crossed module: {len(report)} violation(s)"]
        lines += [f"  - {v.kind}: {v.message}" for v in report]
        _emit(args, payload, lines)
        return 1
    _emit(args, payload, ["valid crossed module"])
    return 0


def _cmd_pi(args) -> int:
    x = _load(args)
    if args.space == "base":
        data = homotopy(x)
        payload = {"command": "pi", "space": "base",
                   "pi1": _group_summary(data.pi1), "pi2": _group_summary(data.pi2)}
        lines = [
            "space: base",
            f"pi1: order {len(data.pi1)} ({describe_group(data.pi1)})",
            f"pi2: order {len(data.pi2)} ({describe_group(data.pi2)})",
        ]
    else:
        base = _require_base(x, args.base)
        data = loop.pi_loop(x, base)
        payload = {"command": "pi", "space": "loop", "base": base,
                   "pi1": _group_summary(data.pi1), "pi2": _group_summary(data.pi2)}
        lines = [
            f"space: loop at base {base}",
            f"pi1: order {len(data.pi1)} ({describe_group(data.pi1)})",
            f"pi2: order {len(data.pi2)} ({describe_group(data.pi2)})",
        ]
    _emit(args, payload, lines)
    return 0


def _cmd_components(args) -> int:
    x = _load(args)
    classes = loop.components(x)
    expected = len(conjugacy_classes(homotopy(x).pi1))
    payload = {
        "command": "components",
        "count": len(classes),
        "classes": [{"representative": cls[0], "elements": cls} for cls in classes],
        "pi1_conjugacy_classes": expected,
        "match": len(classes) == expected,
    }
    lines = [f"components: {len(classes)}"]
    for i, cls in enumerate(classes, start=1):
        lines.append(f"class {i}: representative {cls[0]}, size {len(cls)}: "
                     + ", ".join(cls))
    verdict = "match" if len(classes) == expected else "MISMATCH"
    lines.append(f"conjugacy classes of pi1: {expected} ({verdict})")
    _emit(args, payload, lines)
    return 0


def _cmd_nerve(args) -> int:
    x = _load(args)
    if args.dim == 2:
        simplices = nerve.nerve_k2(x)
        formula = nerve.k2_count_formula(x)
        payload = {"command": "nerve", "dim": 2, "count": len(simplices),
                   "formula": formula}
        lines = [f"K2 count: {len(simplices)}", f"formula |M|*|P|^2: {formula}"]
        if args.list:
            payload["simplices"] = [
                {"m": s.m, "c": s.c, "a": s.a, "b": s.b} for s in simplices
            ]
            lines += [str(s) for s in simplices]
    else:
        simplices = nerve.nerve_k3(x)
        payload = {"command": "nerve", "dim": 3, "count": len(simplices)}
        lines = [f"K3 count: {len(simplices)}"]
        if args.list:
            payload["simplices"] = [
                {"a": s.a, "b": s.b, "c": s.c, "d": s.d, "e": s.e, "f": s.f,
                 "m0": s.m0, "m1": s.m1, "m2": s.m2, "m3": s.m3}
                for s in simplices
            ]
            lines += [
                f"edges(a={s.a}, b={s.b}, c={s.c}, d={s.d}, e={s.e}, f={s.f}) "
                f"faces(m0={s.m0}, m1={s.m1}, m2={s.m2}, m3={s.m3})"
                for s in simplices
            ]
    _emit(args, payload, lines)
    return 0


def _cmd_loop(args) -> int:
    x = _load(args)
    base = _require_base(x, args.base)
    lx = loop.loop_xmod_at(x, base)
    if args.emit:
        sys.stdout.write(serialize_xmod(lx))
        return 0
    data = loop.pi_loop(x, base)
    payload = {
        "command": "loop", "base": base,
        "Pa": _group_summary(lx.P),
        "pi1": _group_summary(data.pi1),
        "pi2": _group_summary(data.pi2),
    }
    lines = [
        f"base: {base}",
        f"P({base}): order {len(lx.P)} ({describe_group(lx.P)})",
        f"pi1: order {len(data.pi1)} ({describe_group(data.pi1)})",
        f"pi2: order {len(data.pi2)} ({describe_group(data.pi2)})",
    ]
    _emit(args, payload, lines)
    return 0


def _cmd_exact(args) -> int:
    x = _load(args)
    base = _require_base(x, args.base)
    seq = exactseq.exact_sequence(x, base)
    term_labels = ("pi^a", "pi", "pi1(fibre)", "pi1(loop)", "centralizer")
    map_labels = ("inclusion", "connecting", "j", "q")
    maps_payload = []
    for label, f in zip(map_labels, seq.maps):
        maps_payload.append({
            "map": label,
            "image_order": len(image(f)),
            "kernel_order": len(kernel(f)),
        })
    payload = {
        "command": "exact", "base": base, "class_in_pi1": seq.abar,
        "terms": [{"term": label, "order": len(term)}
                  for label, term in zip(term_labels, seq.terms)],
        "maps": maps_payload,
        "exact": True,
        "coinvariants_order": len(seq.coinvariants),
        "induced_injective": True,
    }
    lines = [f"base: {base} (class {seq.abar} in pi1)"]
    lines.append("terms: " + ", ".join(
        f"{label}={len(term)}" for label, term in zip(term_labels, seq.terms)))
    for entry in maps_payload:
        lines.append(f"map {entry['map']}: image order {entry['image_order']}, "
                     f"kernel order {entry['kernel_order']}")
    lines.append("exact at every node: yes")
    lines.append(f"coinvariants pi/{{a}}: order {len(seq.coinvariants)}; "
                 "induced map into pi1(loop) injective: yes")
    _emit(args, payload, lines)
    return 0


def _cmd_examples(args) -> int:
    x = _load(args)
    base = _require_base(x, args.base)
    results = {}
    lines = []
    for label, check in (("example1", exactseq.example1_check),
                         ("example2", exactseq.example2_check)):
        try:
            report = check(x, base, max_order=args.max_order)
        except PreconditionFailed as exc:
            results[label] = {"ran": False, "passed": None, "reason": str(exc)}
            lines.append(f"{label}: skipped ({exc})")
            continue
        passed = not report
        results[label] = {
            "ran": True, "passed": passed,
            "violations": [{"kind": v.kind, "message": v.message} for v in report],
        }
        lines.append(f"{label}: {'passed' if passed else 'FAILED'}")
        lines += [f"  - {v.kind}: {v.message}" for v in report]
    payload = {"command": "examples", "base": base, **results}
    _emit(args, payload, lines)
    ran_and_failed = any(r.get("ran") and not r.get("passed") for r in results.values())
    return 1 if ran_and_failed else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format (default: text)")
    common.add_argument("--max-order", type=int, default=512,
                        help="order bound for the isomorphism search (default: 512)")
    parser = argparse.ArgumentParser(
        prog="xmodloop",
        description="Homotopy 2-types of free loop spaces of finite crossed modules.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="validate a crossed module file")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("pi", parents=[common], help="homotopy groups of the base or loop space")
    p.add_argument("file")
    p.add_argument("--space", choices=("base", "loop"), required=True)
    p.add_argument("--base", help="base element of P (required for --space loop)")
    p.set_defaults(handler=_cmd_pi)

    p = sub.add_parser("components", parents=[common],
                       help="components of the free loop space")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_components)

    p = sub.add_parser("nerve", parents=[common], help="nerve counts or listings")
    p.add_argument("file")
    p.add_argument("--dim", type=int, choices=(2, 3), required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--count", action="store_true", default=True)
    group.add_argument("--list", action="store_true")
    p.set_defaults(handler=_cmd_nerve)

    p = sub.add_parser("loop", parents=[common], help="the loop crossed module at a base element")
    p.add_argument("file")
    p.add_argument("--base", required=True)
    p.add_argument("--emit", action="store_true",
                   help="write the loop crossed module back out as a document")
    p.set_defaults(handler=_cmd_loop)

    p = sub.add_parser("exact", parents=[common], help="the five-term exact sequence at a base")
    p.add_argument("file")
    p.add_argument("--base", required=True)
    p.set_defaults(handler=_cmd_exact)

    p = sub.add_parser("examples", parents=[common],
                       help="run the module/central special-case checks")
    p.add_argument("file")
    p.add_argument("--base", required=True)
    p.set_defaults(handler=_cmd_examples)
    return parser


def run_cli(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        code = exc.code
        return 0 if code in (None, 0) else int(code)
    if getattr(args, "space", None) == "loop" and getattr(args, "base", None) is None:
        print("error: --base is required with --space loop", file=sys.stderr)
        return 2
    try:
        return args.handler(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except PreconditionFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except XModError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))
