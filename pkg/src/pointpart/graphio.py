"""Text and JSON surfaces.

Graph files: comment lines start with ``#``; a header ``mgraph <n>``;
edge lines ``e <u> <v> [mult]`` with 1-indexed vertices, default
multiplicity 1, repeated lines for the same pair accumulating. The writer
is canonical: sorted pairs, explicit multiplicity, no comments. Vertices
are 1-indexed only in files and JSON; everything internal is 0-indexed,
and this module is the only place the offset appears.

JSON reports share one envelope ``{format, version, kind, payload}``
validated by the shipped schema.
"""

from __future__ import annotations

import json
from importlib import resources

from .errors import GraphParseError
from .multigraph import Multigraph

REPORT_FORMAT = "pointpart-report"
REPORT_VERSION = 1


def parse_graph(text: str) -> Multigraph:
    """Parse the graph file format; raises GraphParseError with a line number."""
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if fields[0] == "mgraph":
            if n is not None:
                raise GraphParseError(f"line {lineno}: duplicate header")
            if len(fields) != 2:
                raise GraphParseError(f"line {lineno}: header must be 'mgraph <n>'")
            try:
                n = int(fields[1])
            except ValueError:
                raise GraphParseError(f"line {lineno}: vertex count is not an integer")
            if n < 0:
                raise GraphParseError(f"line {lineno}: negative vertex count")
        elif fields[0] == "e":
            if n is None:
                raise GraphParseError(f"line {lineno}: edge before 'mgraph <n>' header")
            if len(fields) not in (3, 4):
                raise GraphParseError(f"line {lineno}: edge lines are 'e <u> <v> [mult]'")
            try:
                u = int(fields[1])
                v = int(fields[2])
                m = int(fields[3]) if len(fields) == 4 else 1
            except ValueError:
                raise GraphParseError(f"line {lineno}: non-integer edge field")
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphParseError(f"line {lineno}: vertex out of range 1..{n}")
            if u == v:
                raise GraphParseError(f"line {lineno}: loops are not allowed")
            if m < 1:
                raise GraphParseError(f"line {lineno}: multiplicity must be >= 1")
            pairs.append((u - 1, v - 1, m))
        else:
            raise GraphParseError(f"line {lineno}: unknown directive {fields[0]!r}")
    if n is None:
        raise GraphParseError("missing 'mgraph <n>' header")
    try:
        return Multigraph(n, pairs)
    except ValueError as exc:
        raise GraphParseError(str(exc))


def write_graph(G: Multigraph) -> str:
    """Canonical text form: header plus sorted explicit-multiplicity lines."""
    lines = [f"mgraph {G.n}"]
    for u, v, m in G.pairs():
        lines.append(f"e {u + 1} {v + 1} {m}")
    return "\n".join(lines) + "\n"


def graph_to_obj(G: Multigraph) -> dict:
    """JSON object form: vertex count plus sorted 1-indexed triples."""
    return {"n": G.n, "edges": [[u + 1, v + 1, m] for u, v, m in G.pairs()]}


def graph_from_obj(obj: dict) -> Multigraph:
    n = obj["n"]
    return Multigraph(n, [(u - 1, v - 1, m) for u, v, m in obj["edges"]])


def make_report(kind: str, payload: dict) -> dict:
    return {
        "format": REPORT_FORMAT,
        "version": REPORT_VERSION,
        "kind": kind,
        "payload": payload,
    }


def dump_report(report: dict) -> str:
    """Deterministic serialization: sorted keys, two-space indent."""
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def load_schema() -> dict:
    with resources.files("pointpart.schemas").joinpath("report.schema.json").open() as fh:
        return json.load(fh)
