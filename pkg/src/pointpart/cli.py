"""Command-line surface.

Subcommands: chi, check-critical, decompose, complement, join, construct,
enumerate, verify. Graph arguments are files in the mgraph format (``-``
reads stdin), so commands compose through pipes. Exit codes: 0 success,
1 verification violation, 2 input error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import sys

from . import graphio
from .coloring import chi_t
from .constructions import (
    HajosSpec,
    complete,
    cycle,
    dirac_join,
    gallai_dirac,
    hajos_join,
    k3t,
    s_clique,
    s_cycle,
)
from .criticality import is_critical
from .decomposition import decompose
from .enumeration import enumerate_critical
from .errors import BudgetExceededError, GraphParseError
from .kernel import DEFAULT_BUDGET
from .multigraph import Multigraph
from .verify import EnvelopeError, run_suite

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _read_graph(path: str) -> Multigraph:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise GraphParseError(f"cannot read {path}: {exc}")
    return graphio.parse_graph(text)


def _emit(args, report: dict, human: str) -> None:
    if args.json:
        sys.stdout.write(graphio.dump_report(report))
    else:
        sys.stdout.write(human)


def _cmd_chi(args) -> int:
    G = _read_graph(args.file)
    k, phi = chi_t(G, args.t, args.budget)
    human = f"chi_t = {k}\n"
    if G.n:
        human += "coloring: " + " ".join(str(c) for c in phi.assignment) + "\n"
    _emit(args, graphio.make_report("chi", {
        "t": args.t, "chi": k, "coloring": list(phi.assignment),
    }), human)
    return EXIT_OK


def _cmd_check_critical(args) -> int:
    G = _read_graph(args.file)
    rep = is_critical(G, args.t, args.budget)
    human = f"chi_t = {rep.k}\ncritical: {'yes' if rep.is_critical else 'no'}\n"
    human += f"vertex_critical: {'yes' if rep.is_vertex_critical else 'no'}\n"
    if rep.failing_edge is not None:
        u, v = rep.failing_edge
        human += f"failing_edge: {u + 1} {v + 1}\n"
    witnesses = [
        {"edge": [u + 1, v + 1], "coloring": list(phi.assignment)}
        for (u, v), phi in sorted(rep.edge_witnesses.items())
    ]
    _emit(args, graphio.make_report("critical", {
        "t": args.t,
        "chi": rep.k,
        "critical": rep.is_critical,
        "vertex_critical": rep.is_vertex_critical,
        "failing_edge": None if rep.failing_edge is None
        else [rep.failing_edge[0] + 1, rep.failing_edge[1] + 1],
        "witnesses": witnesses,
    }), human)
    return EXIT_OK


def _cmd_decompose(args) -> int:
    G = _read_graph(args.file)
    rep = decompose(G, args.t, args.budget)
    lines = [f"factors: {rep.num_factors}"]
    for i, (F, k, vs) in enumerate(zip(rep.factors, rep.ks, rep.vertex_sets), start=1):
        verts = " ".join(str(v + 1) for v in vs)
        lines.append(f"  factor {i}: order={F.n} edges={F.edge_count()} chi_t={k} vertices: {verts}")
    lines.append(f"p = {rep.p}")
    lines.append(f"q = {rep.q}")
    _emit(args, graphio.make_report("decompose", {
        "t": args.t,
        "factors": [graphio.graph_to_obj(F) for F in rep.factors],
        "ks": list(rep.ks),
        "ns": list(rep.ns),
        "p": rep.p,
        "q": rep.q,
    }), "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_complement(args) -> int:
    G = _read_graph(args.file)
    H = G.t_complement(args.t)
    if args.json:
        sys.stdout.write(graphio.dump_report(graphio.make_report("complement", {
            "t": args.t, "graph": graphio.graph_to_obj(H),
        })))
    else:
        sys.stdout.write(graphio.write_graph(H))
    return EXIT_OK


def _cmd_join(args) -> int:
    G1 = _read_graph(args.file1)
    G2 = _read_graph(args.file2)
    if args.kind == "dirac":
        J = dirac_join(G1, G2, args.l)
    else:
        for name in ("u1", "v1", "u2", "v2"):
            if getattr(args, name) is None:
                raise GraphParseError(f"hajos join requires --{name}")
        try:
            spec = HajosSpec(G1, args.u1 - 1, args.v1 - 1, G2, args.u2 - 1, args.v2 - 1, args.l)
        except ValueError as exc:
            raise GraphParseError(str(exc))
        J = hajos_join(spec)
    if args.json:
        sys.stdout.write(graphio.dump_report(graphio.make_report("join", {
            "join": args.kind, "l": args.l, "graph": graphio.graph_to_obj(J),
        })))
    else:
        sys.stdout.write(graphio.write_graph(J))
    return EXIT_OK


_FAMILIES = {
    "complete": (1, lambda p: complete(p[0])),
    "cycle": (1, lambda p: cycle(p[0])),
    "s-clique": (2, lambda p: s_clique(p[0], p[1])),
    "s-cycle": (2, lambda p: s_cycle(p[0], p[1])),
    "k3t": (1, lambda p: k3t(p[0])),
    "gallai-dirac": (2, lambda p: gallai_dirac(p[0], p[1])),
}


def _cmd_construct(args) -> int:
    fam = _FAMILIES.get(args.family)
    if fam is None:
        raise GraphParseError(
            f"unknown family {args.family!r}; families: {', '.join(sorted(_FAMILIES))}"
        )
    arity, builder = fam
    if len(args.params) != arity:
        raise GraphParseError(f"family {args.family} takes {arity} parameter(s)")
    try:
        G = builder(args.params)
    except ValueError as exc:
        raise GraphParseError(str(exc))
    if args.json:
        sys.stdout.write(graphio.dump_report(graphio.make_report("construct", {
            "family": args.family, "params": args.params, "graph": graphio.graph_to_obj(G),
        })))
    else:
        sys.stdout.write(graphio.write_graph(G))
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    res = enumerate_critical(args.t, args.k, args.n, args.m, args.budget, args.jobs)
    payload = {
        "t": res.t, "k": res.k, "n": res.n, "m": res.m,
        "count": len(res.graphs),
        "graphs": [] if args.ext_only else [graphio.graph_to_obj(g) for g in res.graphs],
        "ext": res.ext,
        "extremal": [graphio.graph_to_obj(g) for g in res.extremal],
    }
    lines = [f"Cri_{args.t}({args.k},{args.n}) with multiplicity <= {res.m}: "
             f"{len(res.graphs)} graph(s)"]
    if res.ext is None:
        lines.append("ext: empty class")
    else:
        lines.append(f"ext = {res.ext} attained by {len(res.extremal)} graph(s)")
    if not args.ext_only:
        for g in res.graphs:
            desc = "; ".join(f"{u + 1}-{v + 1}x{m}" for u, v, m in g.pairs())
            lines.append(f"  order={g.n} edges={g.edge_count()}: {desc}")
    _emit(args, graphio.make_report("enumerate", payload), "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_verify(args) -> int:
    try:
        checks = run_suite(args.suite, args.t, args.k, args.n, args.budget, args.jobs)
    except EnvelopeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    passed = all(c.passed for c in checks)
    lines = []
    for c in checks:
        lines.append(f"[{c.name}] {'PASS' if c.passed else 'FAIL'}: {c.detail}")
    lines.append(f"suite {args.suite}: {'PASS' if passed else 'FAIL'} "
                 f"({sum(c.passed for c in checks)}/{len(checks)} checks)")
    _emit(args, graphio.make_report("verify", {
        "suite": args.suite, "t": args.t, "k": args.k, "n": args.n,
        "passed": passed,
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks],
    }), "\n".join(lines) + "\n")
    return EXIT_OK if passed else EXIT_VIOLATION


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="pointpart",
        description="Point partition numbers, critical multigraphs, joins, "
                    "decomposition and enumeration.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, with_t=True):
        if with_t:
            p.add_argument("--t", type=int, required=True, help="degeneracy parameter (>= 1)")
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument("--budget", type=int, default=None,
                       help=f"search node budget (default {DEFAULT_BUDGET})")

    p = sub.add_parser("chi", help="exact point partition number of a graph file")
    p.add_argument("file", help="graph file, or - for stdin")
    common(p)
    p.set_defaults(func=_cmd_chi)

    p = sub.add_parser("check-critical", help="criticality report for a graph file")
    p.add_argument("file")
    common(p)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_check_critical)

    p = sub.add_parser("decompose", help="factor along the multiplicity-t complement")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("complement", help="multiplicity-t complement of a graph file")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=_cmd_complement)

    p = sub.add_parser("join", help="Dirac or Hajos join of two graph files")
    p.add_argument("kind", choices=["dirac", "hajos"])
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--l", type=int, default=1, help="join order (cross multiplicity)")
    p.add_argument("--u1", type=int)
    p.add_argument("--v1", type=int)
    p.add_argument("--u2", type=int)
    p.add_argument("--v2", type=int)
    common(p, with_t=False)
    p.set_defaults(func=_cmd_join)

    p = sub.add_parser("construct", help="build a named family member")
    p.add_argument("family")
    p.add_argument("params", type=int, nargs="*")
    common(p, with_t=False)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("enumerate", help="all critical graphs with given t, k, n")
    common(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None, help="multiplicity cap (default t)")
    p.add_argument("--ext-only", action="store_true", help="report only the edge minimum")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", required=True)
    common(p)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_verify)

    return ap


def main(argv=None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except GraphParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
