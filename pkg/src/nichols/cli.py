"""Command-line front end.

Input is one JSON document, either a matrix

    {"rank": 3, "root_of_unity_order": 6, "q_exponents": [[2, 4, 0], ...]}

or a generalized Dynkin diagram

    {"root_of_unity_order": 6, "vertices": [2, 3, 2], "edges": [[1, 2, 4], [2, 3, 4]]}

where q_ii = zeta^vertices[i] and an edge (i, j, e) sets q_ij = zeta^e,
q_ji = 1 for i < j.  An optional "options" object may carry degree_bound,
cap_objects and format; command-line flags take precedence.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .braided import BraidingMatrix
from .errors import CapExceeded, DegreeBoundExceeded, InputError, MijUnbounded, NicholsError
from .oracle import DEFAULT_DEGREE_BOUND, graded_dims, in_radical
from .pbw import PbwSystem, _gen_name, dimension, hilbert_series
from .presentation import emit_presentation
from .weyl import OBJECT_CAP, GroupoidObject, explore_groupoid, positive_roots
from .words import to_str

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CAP = 3
EXIT_VERIFY = 4


@dataclass
class InputSpec:
    rank: int
    root_of_unity_order: int
    q_exponents: list
    options: dict = field(default_factory=dict)

    def braiding(self) -> BraidingMatrix:
        return BraidingMatrix(self.root_of_unity_order, tuple(tuple(r) for r in self.q_exponents))


def _int(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"field '{name}': expected an integer, got {value!r}")
    return value


def parse_input(text: str) -> InputSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise InputError("top level: expected a JSON object")
    if "root_of_unity_order" not in doc:
        raise InputError("field 'root_of_unity_order': missing")
    n = _int(doc["root_of_unity_order"], "root_of_unity_order")
    if n < 1:
        raise InputError("field 'root_of_unity_order': must be positive")
    options = doc.get("options", {})
    if not isinstance(options, dict):
        raise InputError("field 'options': expected an object")
    if "q_exponents" in doc:
        rows = doc["q_exponents"]
        if not isinstance(rows, list) or not rows:
            raise InputError("field 'q_exponents': expected a non-empty list of rows")
        theta = _int(doc.get("rank", len(rows)), "rank")
        if len(rows) != theta:
            raise InputError(f"field 'q_exponents': {len(rows)} rows for rank {theta}")
        exps = []
        for i, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != theta:
                raise InputError(f"field 'q_exponents[{i}]': expected {theta} entries")
            exps.append([_int(v, f"q_exponents[{i}][{j}]") % n for j, v in enumerate(row)])
    elif "vertices" in doc:
        verts = doc["vertices"]
        if not isinstance(verts, list) or not verts:
            raise InputError("field 'vertices': expected a non-empty list")
        theta = len(verts)
        exps = [[0] * theta for _ in range(theta)]
        for i, v in enumerate(verts):
            exps[i][i] = _int(v, f"vertices[{i}]") % n
        for k, edge in enumerate(doc.get("edges", [])):
            if not isinstance(edge, list) or len(edge) != 3:
                raise InputError(f"field 'edges[{k}]': expected [i, j, exponent]")
            i, j, e = (_int(x, f"edges[{k}]") for x in edge)
            if not (1 <= i <= theta and 1 <= j <= theta) or i == j:
                raise InputError(f"field 'edges[{k}]': bad vertex pair ({i}, {j})")
            i, j = min(i, j), max(i, j)
            exps[i - 1][j - 1] = e % n
            exps[j - 1][i - 1] = 0
    else:
        raise InputError("expected either 'q_exponents' or 'vertices'")
    return InputSpec(len(exps), n, exps, options)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _height(h):
    return None if h == float("inf") else h


def _setup(args):
    spec = parse_input(_read(args.file))
    opts = spec.options
    bound = args.degree_bound if args.degree_bound is not None else opts.get("degree_bound", DEFAULT_DEGREE_BOUND)
    cap = args.cap_objects if args.cap_objects is not None else opts.get("cap_objects", OBJECT_CAP)
    fmt = args.format or opts.get("format", "text")
    B = spec.braiding()
    start = GroupoidObject.of(B)
    explore_groupoid(start, cap)
    rs = positive_roots(start)
    return B, PbwSystem(rs), bound, fmt


def cmd_roots(args, out) -> int:
    B, pbw, _, fmt = _setup(args)
    rows = [
        {"root": list(g.root), "lyndon": to_str(g.lyndon), "height": _height(g.height)}
        for g in pbw.generators
    ]
    if fmt == "json":
        out.write(json.dumps({"roots": rows}, indent=2) + "\n")
    else:
        for r in rows:
            out.write(f"{tuple(r['root'])}  {r['lyndon']}  N={r['height'] if r['height'] is not None else 'inf'}\n")
    return EXIT_OK


def cmd_pbw(args, out) -> int:
    B, pbw, _, fmt = _setup(args)
    rows = [
        {"index": k + 1, "name": _gen_name(g.root), "root": list(g.root), "lyndon": to_str(g.lyndon),
         "q_beta": g.q_beta.to_json(), "height": _height(g.height), "hyperletter": g.vector.to_json()}
        for k, g in enumerate(pbw.generators)
    ]
    if fmt == "json":
        out.write(json.dumps({"generators": rows}, indent=2) + "\n")
    else:
        for k, g in enumerate(pbw.generators):
            h = g.height if g.height != float("inf") else "inf"
            out.write(f"{k + 1}. {_gen_name(g.root)} = [{to_str(g.lyndon)}]_c  q_beta={g.q_beta}  N={h}\n")
    return EXIT_OK


def cmd_present(args, out) -> int:
    B, pbw, bound, fmt = _setup(args)
    pres = emit_presentation(pbw.root_system, mark_redundant=args.mark_redundant, bound=bound)
    if fmt == "json":
        out.write(pres.dumps() + "\n")
    else:
        out.write(pres.to_text() + "\n")
    return EXIT_OK


def cmd_hilbert(args, out) -> int:
    B, pbw, bound, fmt = _setup(args)
    series = hilbert_series(pbw, bound)
    if fmt == "json":
        rows = [{"multidegree": list(a), "coefficient": c} for a, c in series.items()]
        out.write(json.dumps({"degree_bound": bound, "hilbert": rows}, indent=2) + "\n")
    else:
        for a, c in sorted(series.items(), key=lambda t: (sum(t[0]), t[0])):
            out.write(f"{a}: {c}\n")
    return EXIT_OK


def cmd_dim(args, out) -> int:
    B, pbw, _, fmt = _setup(args)
    d = dimension(pbw)
    if fmt == "json":
        out.write(json.dumps({"dimension": _height(d)}) + "\n")
    else:
        out.write(f"{d if d != float('inf') else 'infinite'}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    B, pbw, bound, fmt = _setup(args)
    pres = emit_presentation(pbw.root_system)
    failures = []
    checked = 0
    for r in pres.relations:
        if sum(r.degree) > bound:
            continue
        checked += 1
        if not in_radical(B, r.element(pbw), bound):
            failures.append(f"relation not in radical: {r.kind} {r.root or r.pair}")
    series = hilbert_series(pbw, bound)
    dims = graded_dims(B, bound)
    for a, d in dims.items():
        if series.get(a, 0) != d:
            failures.append(f"graded dim {d} != Hilbert coefficient {series.get(a, 0)} at {a}")
    report = {
        "degree_bound": bound,
        "relations_checked": checked,
        "multidegrees_checked": len(dims),
        "passed": not failures,
        "failures": failures,
    }
    if fmt == "json":
        out.write(json.dumps(report, indent=2) + "\n")
    else:
        out.write(f"relations checked: {checked}, multidegrees checked: {len(dims)}\n")
        for f in failures:
            out.write(f"FAIL {f}\n")
        out.write("PASS\n" if not failures else "FAILED\n")
    return EXIT_OK if not failures else EXIT_VERIFY


COMMANDS = {
    "roots": cmd_roots,
    "pbw": cmd_pbw,
    "present": cmd_present,
    "hilbert": cmd_hilbert,
    "dim": cmd_dim,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nichols", description="Nichols algebras of diagonal type")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("file", help="input JSON file, or - for stdin")
    p.add_argument("--degree-bound", type=int, default=None)
    p.add_argument("--cap-objects", type=int, default=None)
    p.add_argument("--format", choices=["json", "text"], default=None)
    p.add_argument("--mark-redundant", action="store_true")
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (CapExceeded, MijUnbounded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except DegreeBoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except NicholsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
