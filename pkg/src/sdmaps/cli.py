"""Command-line front end.

Every command reads one map (``--gen FAMILY ARGS`` or a JSON document path,
``-`` for stdin), runs a library call and prints the result.  Check
commands print a one-line verdict followed by a JSON report (``--out
json`` prints the report alone).

Exit codes: 0 the property holds, 1 it fails, 2 usage or input error,
3 a search budget was exceeded.
"""

import argparse
import json
import re
import sys

from . import derived, families, io
from .antipodality import is_antipodally_self_dual, odd_edge_obstruction
from .duality import enumerate_dualities, is_strongly_involutive
from .errors import BudgetExceeded, MapError
from .symmetry import MODES, is_antipodally_symmetric, theorem_ant1_report

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

GENERATORS = {
    "wheel": (families.wheel, (int,)),
    "ear": (families.ear, (int,)),
    "pancake": (families.pancake, (int, int)),
    "cycle": (families.cycle, (int,)),
    "fixture": (families.fixture, (str,)),
}


class UsageError(Exception):
    pass


# -- input -----------------------------------------------------------------


def _generate(spec):
    family, *args = spec
    if family not in GENERATORS:
        raise UsageError(f"unknown family {family!r}; choose from {', '.join(GENERATORS)}")
    fn, types = GENERATORS[family]
    if len(args) != len(types):
        raise UsageError(f"{family} takes {len(types)} argument(s), got {len(args)}")
    try:
        values = [t(a) for t, a in zip(types, args)]
    except ValueError as exc:
        raise UsageError(f"bad argument for {family}: {exc}") from None
    return fn(*values)


def _load(ns):
    if ns.gen and ns.map:
        raise UsageError("give either --gen or a map file, not both")
    if ns.gen:
        return _generate(ns.gen)
    if not ns.map:
        raise UsageError("no input map: give --gen FAMILY ARGS or a JSON map path")
    if ns.map == "-":
        return io.parse_map(sys.stdin.read(), allow_nonspherical=ns.allow_nonspherical)
    return io.read_map(ns.map, allow_nonspherical=ns.allow_nonspherical)


def _host(m, which):
    if which == "self":
        return m
    return {"dual": derived.dual, "medial": derived.medial,
            "incidence": derived.incidence, "square": derived.square}[which](m)


# -- reports ---------------------------------------------------------------


def _duality_json(w):
    return {
        "psi": list(w.morphism.psi),
        "orientation": w.morphism.orientation.value,
        "vertex_to_face": [w.vertex_image(v) for v in range(w.map.num_vertices)],
        "involutive": w.involutive,
        "strongly_involutive": w.strongly_involutive,
    }


def _check_self_dual(m, ns):
    ws = enumerate_dualities(m, ns.orientation)
    report = {"property": "self-dual", "verdict": bool(ws), "dualities": len(ws),
              "involutive_dualities": sum(w.involutive for w in ws)}
    if ws:
        report["witness"] = _duality_json(ws[0])
    return report


def _check_strong(m, ns):
    v = is_strongly_involutive(m, ns.orientation)
    report = {"property": "strongly-involutive", "verdict": v.verdict, "self_dual": v.self_dual}
    if v.witness is not None:
        report["witness"] = _duality_json(v.witness)
    return report


def _check_antipodal(m, ns):
    v = is_antipodally_self_dual(m, orientations=ns.orientation)
    report = {"property": "antipodally-self-dual", "verdict": v.verdict, "reason": v.reason,
              "dualities": v.dualities, "involutive_dualities": v.involutive_dualities}
    if v.verdict:
        report["witness"] = _duality_json(v.witness)
        report["labeling"] = v.labeling.as_strings()
        report["fixed_vertices"] = len(v.labeling.fixed_vertices)
    elif v.reason != "not_self_dual":
        report["certificate"] = {
            "statement": f"all {v.involutive_dualities} involutive dualities have a fixed square vertex",
            "fixed_cells": [list(c) for c in v.certificate],
        }
        obs = odd_edge_obstruction(m)
        if obs.verdict:
            report["certificate"]["odd_edge_vertex"] = obs.vertex
    return report


def _check_obstruction(m, ns):
    v = odd_edge_obstruction(m)
    report = {"property": "odd-edge-obstruction", "verdict": v.verdict, "vacuous": v.vacuous}
    if v.verdict:
        report["vertex"] = v.vertex
        report["multiplicities"] = list(v.multiplicities)
    return report


def _check_symmetric_cycles(m, ns):
    compare = ("graph",) if ns.mode != "graph" else ("map",)
    r = theorem_ant1_report(m, max_len=ns.max_len, budget=ns.budget, mode=ns.mode, compare=compare)
    report = {
        "property": "symmetric-cycle-lengths-2-mod-4",
        "verdict": r.consistent,
        "mode": r.mode,
        "antipodal": r.antipodal,
        "has_symmetric_cycle": r.has_symmetric_cycle,
        "lengths": list(r.lengths),
        "certifies_not_antipodal": r.certifies_not_antipodal,
        "cycles": [{"length": w.length, "vertices": list(w.cycle.vertices),
                    "automorphism": list(w.automorphism) if ns.mode == "graph" else list(w.automorphism.psi)}
                   for w in r.witnesses],
    }
    # report the other reading of "automorphism" only when it disagrees
    for other, lengths in r.other_lengths.items():
        if lengths != r.lengths:
            report[f"{other}_lengths"] = list(lengths)
    return report


def _check_antipodal_symmetric(m, ns):
    host = _host(m, ns.host)
    v = is_antipodally_symmetric(host)
    report = {"property": "antipodally-symmetric", "host": ns.host, "verdict": v.verdict}
    if v.witness is not None:
        report["witness"] = {"psi": list(v.witness.psi), "orientation": v.witness.orientation.value}
    return report


CHECKS = {
    "self-dual": _check_self_dual,
    "strong": _check_strong,
    "antipodal": _check_antipodal,
    "obstruction": _check_obstruction,
    "symmetric-cycles": _check_symmetric_cycles,
    "antipodal-symmetric": _check_antipodal_symmetric,
}


_SCALAR_ARRAY = re.compile(r"\[\s*([^\[\]{}]*?)\s*\]", re.S)


def dumps_report(report):
    """Indented JSON with arrays of scalars kept on one line."""
    text = json.dumps(report, indent=2)
    return _SCALAR_ARRAY.sub(lambda mt: "[" + re.sub(r",\s+", ", ", mt.group(1)) + "]", text)


def _emit_map(m, ns, out):
    if ns.out == "dot":
        out.write(io.to_dot(m))
    else:
        target = m.map if isinstance(m, derived.DerivedMap) else m
        out.write(io.serialize_map(target))


# -- parser ----------------------------------------------------------------


def _add_input(p):
    p.add_argument("map", nargs="?", help="JSON map document ('-' for stdin)")
    p.add_argument("--gen", nargs="+", metavar="ARG", help="generate the input: wheel N | ear N | pancake N L | cycle N | fixture NAME")
    p.add_argument("--allow-nonspherical", action="store_true", help="accept maps whose Euler characteristic is not 2")


def build_parser():
    parser = argparse.ArgumentParser(prog="sdmaps", description="Self-dual and antipodally self-dual sphere maps.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("derive", help="dual, medial, incidence or squares map")
    p.add_argument("construction", choices=("dual", "medial", "incidence", "square"))
    _add_input(p)
    p.add_argument("--out", choices=("json", "dot"), default="json")

    p = sub.add_parser("check", help="decide a property and print a report")
    p.add_argument("property", choices=tuple(CHECKS))
    _add_input(p)
    p.add_argument("--out", choices=("text", "json"), default="text")
    p.add_argument("--orientation", choices=("both", "preserving", "reversing"), default="both",
                   help="orientation classes of dualities to consider")
    p.add_argument("--max-len", type=int, default=None, help="longest symmetric cycle to look for")
    p.add_argument("--budget", type=int, default=10**6, help="cap on search candidates")
    p.add_argument("--mode", choices=MODES, default="map", help="automorphisms allowed for symmetric cycles")
    p.add_argument("--host", choices=("self", "medial", "incidence"), default="self",
                   help="map tested by antipodal-symmetric")

    p = sub.add_parser("gen", help="print a generated map")
    p.add_argument("family", choices=tuple(GENERATORS))
    p.add_argument("args", nargs="*")
    p.add_argument("--out", choices=("json", "dot"), default="json")

    p = sub.add_parser("adhesion", help="glue a map and its dual at a corner")
    _add_input(p)
    p.add_argument("--corner", type=int, default=0, help="dart naming the corner")
    p.add_argument("--out", choices=("json", "dot"), default="json")

    p = sub.add_parser("export", help="export a map in another format")
    p.add_argument("format", choices=("dot",))
    _add_input(p)
    p.add_argument("--host", choices=("self", "dual", "medial", "incidence", "square"), default="self")
    return parser


def run_command(argv, stdout=None, stderr=None):
    """Run one CLI invocation; returns the exit code."""
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        if ns.command == "gen":
            _emit_map(_generate([ns.family, *ns.args]), ns, out)
            return EXIT_OK
        m = _load(ns)
        if ns.command == "derive":
            _emit_map(_host(m, ns.construction), ns, out)
            return EXIT_OK
        if ns.command == "adhesion":
            _emit_map(families.adhesion(m, ns.corner), ns, out)
            return EXIT_OK
        if ns.command == "export":
            out.write(io.to_dot(_host(m, ns.host)))
            return EXIT_OK
        report = CHECKS[ns.property](m, ns)
        report["map"] = {"name": m.name, "counts": list(m.counts)}
        text = dumps_report(report)
        if ns.out == "text":
            word = "holds" if report["verdict"] else "fails"
            out.write(f"{ns.property}: {word}\n")
        out.write(text + "\n")
        return EXIT_OK if report["verdict"] else EXIT_FAIL
    except BudgetExceeded as exc:
        err.write(f"budget exceeded: {exc}\n")
        return EXIT_BUDGET
    except (UsageError, MapError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def main(argv=None):
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
