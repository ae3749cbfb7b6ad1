"""Single command-line entry point: generation, reduction, solving,
validation, and suite execution.

Exit codes: ``solve``/``reduce`` return 0 on a decided instance or written
reduction, 10 on an input error, 11 on a violated precondition.  ``verify``
returns 0 when every suite passes, 1 on a failure (the counterexample is
printed), 2 when the time budget ran out.

The environment variable ``CHROMATIC_THREADS`` caps suite-level parallelism
for ``verify --suite all`` (0 = one worker per CPU; unset = sequential).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import formats
from .graphs import (
    C6Embedding,
    InputError,
    PreconditionError,
    bipartite_complement,
    diameter,
)
from .hitting import SetFamily, complementary_hitting_sets
from .reductions import (
    appendix_listcol3,
    build_c6_retract,
    build_compaction,
    build_fall3_diam4,
    fall3_turing_queries,
    fall_lift,
    fmps_flawed_instance,
    lift_preext,
    retract_to_preext3,
)
from .solvers import (
    ListAssignment,
    PartialColoring,
    retract_to_cycle,
    solve_biclique_partition,
    solve_fall_coloring,
    solve_h2col,
    solve_list_coloring,
    solve_list_hom,
    solve_preext,
)
from .verify import run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INCOMPLETE = 2
EXIT_INPUT = 10
EXIT_PRECONDITION = 11

PROBLEMS = ("listcol", "preext", "fall", "biclique", "retract", "compact", "surjhom", "h2col", "chs")
RULES = ("prop1", "thm7", "cor3", "lem7", "cor9", "prop10", "prop12", "thm13", "appA", "fmps")
SUITES = ("prop1", "thm7", "cor3", "lem7", "cor8", "cor9", "flaw",
          "prop10", "prop12", "thm13", "appA", "faik", "hitset", "all")


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}") from None


def _need(args, attr: str, flag: str):
    value = getattr(args, attr)
    if value is None:
        raise InputError(f"--problem {args.problem} requires {flag}")
    return value


def _cmd_solve(args) -> int:
    problem = args.problem
    if problem == "h2col":
        h = formats.parse_hypergraph(_read(args.infile))
        cert = solve_h2col(h)
        return _emit_mapping_cert(cert.colors if cert else None)
    if problem == "chs":
        k, fam_a, fam_b = formats.parse_families(_read(args.infile))
        s = complementary_hitting_sets(SetFamily(k, fam_a), SetFamily(k, fam_b), k)
        if s is None:
            print("NO")
        else:
            print("YES")
            print(("S " + " ".join(str(c) for c in sorted(s))).rstrip())
        return EXIT_OK

    text = _read(args.infile)
    if problem == "listcol":
        g = formats.parse_graph(text)
        k = int(_need(args, "k", "--k"))
        lists = ListAssignment(formats.parse_lists(_read(_need(args, "lists", "--lists")), g.n))
        cert = solve_list_coloring(g, lists, k)
        return _emit_mapping_cert(cert.colors if cert else None)
    if problem == "preext":
        g = formats.parse_graph(text)
        k = int(_need(args, "k", "--k"))
        p = PartialColoring(formats.parse_precoloring(_read(_need(args, "pre", "--pre")), g.n))
        cert = solve_preext(g, k, p)
        return _emit_mapping_cert(cert.colors if cert else None)
    if problem == "fall":
        g = formats.parse_graph(text)
        k = int(_need(args, "k", "--k"))
        cert = solve_fall_coloring(g, k)
        return _emit_mapping_cert(cert.colors if cert else None)
    if problem == "biclique":
        b = formats.parse_bipartite(text)
        k = int(_need(args, "k", "--k"))
        cert = solve_biclique_partition(b, k)
        if cert is None:
            print("NO")
        else:
            print("YES")
            print(formats.write_partition(cert.blocks), end="")
        return EXIT_OK
    if problem == "retract":
        b = formats.parse_bipartite(text)
        cycle, _ = formats.parse_sidecar(_read(_need(args, "c6", "--c6")))
        if cycle is None:
            raise InputError("sidecar has no c6 line")
        C6Embedding(b, cycle)  # validates the embedding
        cert = retract_to_cycle(b, cycle)
        return _emit_mapping_cert(None if cert is None else [x + 1 for x in cert.images])
    if problem in ("compact", "surjhom"):
        from .graphs import cycle_graph

        g = formats.parse_graph(text)
        mode = "edge_surjective" if problem == "compact" else "vertex_surjective"
        cert = solve_list_hom(g, cycle_graph(6), mode=mode)
        return _emit_mapping_cert(None if cert is None else [x + 1 for x in cert.images])
    raise InputError(f"unknown problem {problem!r}")


def _emit_mapping_cert(images) -> int:
    """Print YES plus ``m`` lines (values already 1-based), or NO."""
    if images is None:
        print("NO")
    else:
        print("YES")
        print(formats.write_mapping(images), end="")
    return EXIT_OK


def _summary(label: str, b, extra: str = "") -> None:
    tail = f" {extra}" if extra else ""
    print(f"{label}: {b.n} vertices, {b.graph.m} edges, diameter {diameter(b.graph)}{tail}")


def _cmd_reduce(args) -> int:
    rule = args.rule
    out = Path(args.out)
    text = _read(args.infile)

    if rule in ("thm7", "cor3", "lem7", "thm13", "appA"):
        h = formats.parse_hypergraph(text)
        if rule == "thm7":
            inst = build_c6_retract(h)
            out.with_suffix(".gr").write_text(formats.write_bipartite(inst.graph))
            out.with_suffix(".meta").write_text(
                formats.write_sidecar(inst.embedding.cycle, inst.names)
            )
            _summary("thm7", inst.graph)
            return EXIT_OK
        if rule == "cor3":
            inst = build_c6_retract(h)
            red = retract_to_preext3(inst.graph, inst.embedding)
            out.with_suffix(".gr").write_text(formats.write_bipartite(inst.graph))
            out.with_suffix(".pc").write_text(formats.write_precoloring(red.precoloring.assignments))
            out.with_suffix(".meta").write_text(
                formats.write_sidecar(inst.embedding.cycle, inst.names)
            )
            _summary("cor3", inst.graph, f"k=3, {len(red.precoloring.assignments)} precolored")
            return EXIT_OK
        if rule == "lem7":
            base = build_c6_retract(h)
            sw = base.graph.swap_parts()
            inst = build_compaction(sw, C6Embedding(sw, base.embedding.cycle))
            out.with_suffix(".gr").write_text(formats.write_bipartite(inst.graph))
            out.with_suffix(".meta").write_text(
                formats.write_sidecar(inst.embedding.cycle, inst.names)
            )
            _summary("lem7", inst.graph, f"{inst.graph.n - sw.n} gadget vertices added")
            return EXIT_OK
        if rule == "thm13":
            inst = build_fall3_diam4(h)
            out.with_suffix(".gr").write_text(formats.write_bipartite(inst.graph))
            out.with_suffix(".meta").write_text(formats.write_sidecar(None, inst.names))
            _summary("thm13", inst.graph)
            return EXIT_OK
        inst = appendix_listcol3(h)
        out.with_suffix(".gr").write_text(formats.write_bipartite(inst.graph))
        out.with_suffix(".lst").write_text(formats.write_lists(inst.lists))
        _summary("appA", inst.graph, f"palette {inst.palette}")
        return EXIT_OK

    b = formats.parse_bipartite(text)
    if rule == "prop1":
        k = args.k if args.k is not None else 3
        p = PartialColoring(
            formats.parse_precoloring(_read(args.pre), b.n) if args.pre else {}
        )
        lifted = lift_preext(b, p, k)
        out.with_suffix(".gr").write_text(formats.write_bipartite(lifted.graph))
        out.with_suffix(".pc").write_text(
            formats.write_precoloring(lifted.precoloring.assignments)
        )
        _summary("prop1", lifted.graph, f"k={lifted.k}")
        return EXIT_OK
    if rule == "prop10":
        k = args.k if args.k is not None else 3
        lifted = fall_lift(b, k)
        out.with_suffix(".gr").write_text(formats.write_bipartite(lifted.graph))
        _summary("prop10", lifted.graph, f"k={lifted.k}")
        return EXIT_OK
    if rule == "prop12":
        red = fall3_turing_queries(b)
        out.with_suffix(".gr").write_text(formats.write_bipartite(b))
        for i, (_, p) in enumerate(red.queries):
            Path(f"{out}_q{i + 1}.pc").write_text(formats.write_precoloring(p.assignments))
        _summary("prop12", b, f"{len(red.queries)} query file(s) emitted")
        return EXIT_OK
    if rule == "cor9":
        cb = bipartite_complement(b)
        out.with_suffix(".gr").write_text(formats.write_bipartite(cb))
        _summary("cor9", cb)
        return EXIT_OK
    if rule == "fmps":
        lists = ListAssignment(
            formats.parse_lists(_read(_need_reduce(args, "lists", "--lists")), b.n)
        )
        inst = fmps_flawed_instance(b, lists)
        out.with_suffix(".gr").write_text(formats.write_bipartite(inst.graph))
        out.with_suffix(".meta").write_text(formats.write_sidecar(inst.cycle, inst.names))
        _summary("fmps", inst.graph)
        return EXIT_OK
    raise InputError(f"unknown rule {rule!r}")


def _need_reduce(args, attr: str, flag: str):
    value = getattr(args, attr)
    if value is None:
        raise InputError(f"--rule {args.rule} requires {flag}")
    return value


def _workers_from_env() -> int:
    raw = os.environ.get("CHROMATIC_THREADS")
    if raw is None:
        return 1
    try:
        cap = int(raw)
    except ValueError:
        raise InputError(f"CHROMATIC_THREADS must be an integer, got {raw!r}") from None
    if cap < 0:
        raise InputError("CHROMATIC_THREADS must be >= 0")
    if cap == 0:
        return os.cpu_count() or 1
    return cap


def _cmd_verify(args) -> int:
    reports = run_suite(args.suite, seed=args.seed, budget=args.budget,
                        workers=_workers_from_env())
    for report in reports:
        print(report.render(), end="")
    if any(r.mismatches for r in reports):
        return EXIT_FAIL
    if any(r.incomplete for r in reports):
        return EXIT_INCOMPLETE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromatic",
        description="Exact coloring/homomorphism solvers, reduction builders, "
                    "and their verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="decide an instance and print a certificate")
    p_solve.add_argument("--problem", required=True, metavar="|".join(PROBLEMS))
    p_solve.add_argument("--in", dest="infile", required=True)
    p_solve.add_argument("--k", type=int)
    p_solve.add_argument("--lists")
    p_solve.add_argument("--pre")
    p_solve.add_argument("--c6")
    p_solve.set_defaults(func=_cmd_solve)

    p_reduce = sub.add_parser("reduce", help="build a reduction instance and write it out")
    p_reduce.add_argument("--rule", required=True, metavar="|".join(RULES))
    p_reduce.add_argument("--in", dest="infile", required=True)
    p_reduce.add_argument("--out", required=True)
    p_reduce.add_argument("--k", type=int)
    p_reduce.add_argument("--pre")
    p_reduce.add_argument("--lists")
    p_reduce.set_defaults(func=_cmd_reduce)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", required=True, metavar="|".join(SUITES))
    p_verify.add_argument("--seed", type=int, default=1)
    p_verify.add_argument("--budget", type=float, default=None)
    p_verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PreconditionError as e:
        print(f"precondition violated: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except InputError as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
