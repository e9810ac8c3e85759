"""Command line interface.

Codimension convention: ``-p`` is the codimension of the cycles.  Cycles of
dimension q on an n-dimensional variety are reached with ``-p n-q``.

Exit codes: 0 success, 1 mathematical mismatch or validation failure,
2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import builtins
from .cohomology import build_presentation, cohomology_rank, orbit_class_table
from .fan import FanError, InvalidFan, parse_fan, validate_fan
from .polyring import format_monomial
from .series import (
    SeriesError,
    WeightFunctional,
    equivariant_series,
    euler_from_classes,
    find_positive_functional,
    orbit_weights,
    pushforward_J,
)
from .verify import EXAMPLES, run_checks

PROJECTIVITY_NOTE = "note: projectivity of the fan is assumed, not checked"


class UsageError(Exception):
    pass


def class_monomial(coords, names=None):
    """Multiplicative notation for a class vector, e.g. (-2, 1) -> t1^-2*t2."""
    parts = []
    for i, c in enumerate(coords):
        if c:
            name = names[i] if names else f"t{i + 1}"
            parts.append(name if c == 1 else f"{name}^{c}")
    return "*".join(parts) or "1"


def vec(v):
    return "(" + ", ".join(str(x) for x in v) + ")"


def format_product(factors, names=None):
    out = []
    for v, m in factors:
        f = f"(1/(1-{class_monomial(v, names)}))"
        out.append(f if m == 1 else f"{f}^{m}")
    return " ".join(out) if out else "1"


def load_fan(args):
    if args.gen:
        try:
            return builtins.from_spec(args.gen), f"gen {args.gen}"
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    try:
        with open(args.fan, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.fan}: {exc.strerror}") from None
    return parse_fan(text), args.fan


def _presentation(args):
    fan, source = load_fan(args)
    if not 0 <= args.p <= fan.dim:
        raise UsageError(f"codimension {args.p} outside 0..{fan.dim}")
    return build_presentation(fan), source


def emit(args, data, render):
    if getattr(args, "format", "text") == "json":
        print(json.dumps(data, indent=2))
    else:
        print(render(data))


# --- commands ---------------------------------------------------------------


def cmd_validate(args):
    fan, source = load_fan(args)
    report = validate_fan(fan)
    data = {"fan": source, **report.to_dict(), "projectivity": "assumed"}

    def render(d):
        yes = {True: "yes", False: "no"}
        lines = [f"fan: {d['fan']}"]
        for k in ("simplicial", "smooth", "complete", "fan_property"):
            lines.append(f"{k}: {yes[d[k]]}")
        for v in d["violations"]:
            cones = " ".join(str(c) for c in v["cones"])
            lines.append(f"violation [{v['kind']}] {cones}: {v['detail']}")
        lines.append(PROJECTIVITY_NOTE)
        return "\n".join(lines)

    emit(args, data, render)
    return 0 if report.ok else 1


def _table_rows(pres, table):
    names = [f"t{i + 1}" for i in range(pres.nvars)]
    return [
        {"cone": list(cone), "monomial": format_monomial(mono, names), "class": list(cls.coords)}
        for cone, mono, cls in table.rows
    ]


def _basis_block(pres, p):
    return [{"label": f"t{i + 1}", "element": e} for i, e in enumerate(pres.basis_labels(p))]


def cmd_orbits(args):
    pres, source = _presentation(args)
    table = orbit_class_table(pres, args.p)
    data = {
        "fan": source,
        "p": args.p,
        "rank": cohomology_rank(pres, args.p),
        "basis": _basis_block(pres, args.p),
        "orbits": _table_rows(pres, table),
        "grouped": [{"class": list(c.coords), "multiplicity": m} for c, m in table.grouped.items()],
    }

    def render(d):
        lines = [f"fan: {d['fan']}", f"codimension {d['p']}, rank {d['rank']}"]
        lines += [f"basis {b['label']} = {b['element']}" for b in d["basis"]]
        lines.append("cone\tmonomial\tclass")
        for r in d["orbits"]:
            lines.append(f"{r['cone']}\t{r['monomial']}\t{vec(r['class'])}")
        lines.append("class\tmultiplicity")
        for g in d["grouped"]:
            lines.append(f"{vec(g['class'])}\t{g['multiplicity']}")
        return "\n".join(lines)

    emit(args, data, render)
    return 0


def _parse_weights(text, rank):
    try:
        coeffs = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--weights must be comma separated integers, got {text!r}") from None
    if len(coeffs) != rank:
        raise UsageError(f"--weights needs {rank} entries, got {len(coeffs)}")
    return WeightFunctional(coeffs)


def cmd_euler(args):
    pres, source = _presentation(args)
    table = orbit_class_table(pres, args.p)
    expr = euler_from_classes(table.grouped)
    data = {
        "fan": source,
        "p": args.p,
        "rank": cohomology_rank(pres, args.p),
        "basis": _basis_block(pres, args.p),
        "closed_form": format_product(expr.denominator_factors),
        "factors": [{"class": list(v), "multiplicity": m} for v, m in expr.denominator_factors],
    }
    if args.max_weight is not None:
        if args.max_weight < 0:
            raise UsageError("--max-weight must be nonnegative")
        if args.weights:
            weight = _parse_weights(args.weights, expr.rank)
            try:
                weight.check_positive(expr.generators)
            except SeriesError as exc:
                raise UsageError(str(exc)) from None
        else:
            weight = find_positive_functional(expr.generators)
        expansion = expr.expand(weight, args.max_weight)
        data["weight"] = list(weight.coeffs)
        data["max_weight"] = args.max_weight
        data["coefficients"] = [
            {"class": list(k), "weight": weight(k), "chi": c} for k, c in expansion.items()
        ]

    def render(d):
        lines = [f"fan: {d['fan']}", PROJECTIVITY_NOTE, f"codimension {d['p']}, rank {d['rank']}"]
        if args.show_basis:
            lines += [f"basis {b['label']} = {b['element']}" for b in d["basis"]]
        lines.append(f"E_{d['p']} = {d['closed_form']}")
        for f in d["factors"]:
            lines.append(f"factor {vec(f['class'])} multiplicity {f['multiplicity']}")
        if "coefficients" in d:
            lines.append(f"weight {vec(d['weight'])}, max weight {d['max_weight']}")
            lines.append("class\tweight\tchi")
            for c in d["coefficients"]:
                lines.append(f"{vec(c['class'])}\t{c['weight']}\t{c['chi']}")
        return "\n".join(lines)

    emit(args, data, render)
    return 0


def cmd_equivariant(args):
    pres, source = _presentation(args)
    table = orbit_class_table(pres, args.p)
    rows = _table_rows(pres, table)
    data = {
        "fan": source,
        "p": args.p,
        "orbits": rows,
        "closed_form": " ".join(f"(1/(1-e[{r['monomial']}]))" for r in rows),
    }
    status = 0
    if args.max_weight is not None:
        if args.max_weight < 0:
            raise UsageError("--max-weight must be nonnegative")
        classes = table.classes
        weight = find_positive_functional(classes)
        eq = equivariant_series(len(classes)).expand(orbit_weights(classes, weight), args.max_weight)
        pushed = pushforward_J(eq, classes, weight, args.max_weight)
        direct = euler_from_classes(table.grouped).expand(weight, args.max_weight)
        ok = pushed == direct and all(c in (0, 1) for c in eq.support.values())
        data["weight"] = list(weight.coeffs)
        data["max_weight"] = args.max_weight
        data["equivariant_terms"] = len(eq.support)
        data["pushforward_matches"] = ok
        status = 0 if ok else 1

    def render(d):
        lines = [f"fan: {d['fan']}", f"codimension {d['p']}, {len(d['orbits'])} orbits"]
        lines.append(f"E^T_{d['p']} = {d['closed_form']}")
        lines.append("cone\tmonomial\tclass")
        for r in d["orbits"]:
            lines.append(f"{r['cone']}\t{r['monomial']}\t{vec(r['class'])}")
        if "max_weight" in d:
            lines.append(f"weight {vec(d['weight'])}, max weight {d['max_weight']}, "
                         f"{d['equivariant_terms']} equivariant terms")
            lines.append(f"J(E^T) = E: {'ok' if d['pushforward_matches'] else 'MISMATCH'}")
        return "\n".join(lines)

    emit(args, data, render)
    return status


def cmd_gen(args):
    spec = " ".join([args.family] + [str(x) for x in args.params])
    try:
        fan = builtins.from_spec(spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = json.dumps(fan.to_dict())
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        except OSError as exc:
            raise UsageError(f"cannot write {args.output}: {exc.strerror}") from None
    else:
        print(text)
    return 0


def cmd_verify_examples(args):
    checks = run_checks(args.only)
    data = {"checks": [c.to_dict() for c in checks], "all_ok": all(c.ok for c in checks)}

    def render(d):
        lines = []
        for c in d["checks"]:
            status = "PASS" if c["ok"] else "FAIL"
            line = f"{status} {c['example']}: {c['check']}"
            if not c["ok"]:
                line += f" (expected {c['expected']}, got {c['actual']})"
            lines.append(line)
            if "note" in c:
                lines.append(f"     note: {c['note']}")
        n_ok = sum(c["ok"] for c in d["checks"])
        lines.append(f"{n_ok}/{len(d['checks'])} checks passed")
        return "\n".join(lines)

    emit(args, data, render)
    return 0 if data["all_ok"] else 1


# --- parser -----------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="chowseries",
        description="Euler series of restricted Chow varieties of smooth complete toric varieties.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def fan_source(p):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--fan", help="fan JSON file")
        g.add_argument("--gen", help='builtin fan, e.g. "pn 2", "product 2 1", "blowup-pn 3", "hirzebruch 2"')

    def fmt(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("validate", help="check that a fan is simplicial, smooth and complete")
    fan_source(p)
    fmt(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("orbits", help="orbit closures of codimension p and their classes")
    fan_source(p)
    p.add_argument("-p", type=int, required=True, help="codimension")
    fmt(p)
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("euler", help="Euler series in codimension p")
    fan_source(p)
    p.add_argument("-p", type=int, required=True, help="codimension")
    p.add_argument("--max-weight", type=int, help="expand up to this weight")
    p.add_argument("--weights", help="comma separated weight functional (default: found automatically)")
    p.add_argument("--show-basis", action="store_true", help="print what t1..tr stand for")
    fmt(p)
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("equivariant", help="equivariant Euler series in codimension p")
    fan_source(p)
    p.add_argument("-p", type=int, required=True, help="codimension")
    p.add_argument("--max-weight", type=int, help="expand and check J(E^T) = E up to this weight")
    fmt(p)
    p.set_defaults(func=cmd_equivariant)

    p = sub.add_parser("gen", help="write the fan of a standard example as JSON")
    p.add_argument("family", choices=sorted(builtins.GENERATORS))
    p.add_argument("params", type=int, nargs="+")
    p.add_argument("-o", "--output", help="output file (default: stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify-examples", help="recompute the example formulas")
    p.add_argument("--only", choices=EXAMPLES)
    fmt(p)
    p.set_defaults(func=cmd_verify_examples)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidFan, SeriesError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (UsageError, FanError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
