"""Command-line interface.

Batch semantics: every subcommand writes exactly one JSON object to stdout
(sorted keys, seed recorded) and human-oriented notes to stderr. Exit codes:
0 success or definitive positive, 1 legitimate negative (avoiding coloring
exists, no matching reaches its target, counterexample found), 2 input
error, 3 budget-inconclusive.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import chromatic, hunter, matching, tree_cert, verify
from .graphs import (
    EdgeColoring,
    Graph,
    GraphParseError,
    InternalInconsistencyError,
    parse_edge_coloring,
    parse_graph,
)

_PROG = "monocert"


def _emit(args, payload: dict) -> None:
    doc = {"seed": getattr(args, "seed", 0)}
    doc.update(payload)
    text = json.dumps(doc, sort_keys=True)
    print(text)
    path = getattr(args, "json_out", None)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


def _load_graph(args) -> Graph:
    if args.graph == "-":
        text = sys.stdin.read()
    else:
        with open(args.graph) as fh:
            text = fh.read()
    return parse_graph(text, args.format)


def _load_coloring(args, g: Graph, t: int | None = None) -> EdgeColoring:
    with open(args.coloring) as fh:
        ec = parse_edge_coloring(fh.read(), t=t)
    ec.validate_cover(g)
    return ec


def _parse_targets(spec: str) -> matching.MatchingTargets:
    try:
        values = [int(x) for x in spec.split(",") if x.strip() != ""]
    except ValueError:
        raise ValueError(f"bad targets {spec!r}; expected e.g. 2,2") from None
    return matching.MatchingTargets.of(values)


def _parse_pattern(spec: str) -> hunter.AcyclicPattern:
    kind, _, arg = spec.partition(":")
    if kind == "path":
        return hunter.path_pattern(int(arg))
    if kind == "star":
        return hunter.star_pattern(int(arg))
    if kind == "matching":
        return hunter.matching_pattern(int(arg))
    if kind == "tree-file":
        with open(arg) as fh:
            return hunter.AcyclicPattern(parse_graph(fh.read(), "edges"))
    raise ValueError(
        f"bad pattern {spec!r}; expected path:K, star:K, matching:K or tree-file:PATH"
    )


def _candidate_stream(specs, seed: int, chi_budget: int):
    if not specs:
        yield from hunter.generate_candidates("graph6-stream", lines=sys.stdin)
        return
    for spec in specs:
        kind, _, arg = spec.partition(":")
        if kind == "mycielski":
            yield from hunter.generate_candidates("mycielski", steps=int(arg))
        elif kind == "kneser":
            n, k = (int(x) for x in arg.split(","))
            yield from hunter.generate_candidates("kneser", n=n, k=k)
        elif kind == "multipartite":
            sizes = [int(x) for x in arg.split(",")]
            yield from hunter.generate_candidates("complete-multipartite", sizes=sizes)
        elif kind == "random":
            params: dict = {"seed": seed, "chi_budget": chi_budget}
            for item in arg.split(","):
                key, _, val = item.partition("=")
                params[key] = val
            yield from hunter.generate_candidates(
                "random",
                n=int(params["n"]),
                p=float(params["p"]),
                count=int(params["count"]),
                seed=int(params["seed"]),
                chi_min=int(params["chi_min"]) if "chi_min" in params else None,
                chi_budget=int(params["chi_budget"]),
            )
        elif kind == "g6":
            if arg == "-" or arg == "":
                yield from hunter.generate_candidates("graph6-stream", lines=sys.stdin)
            else:
                with open(arg) as fh:
                    yield from hunter.generate_candidates("graph6-stream", lines=fh)
        else:
            raise ValueError(f"bad candidate spec {spec!r}")


def _cmd_chi(args) -> int:
    g = _load_graph(args)
    r = chromatic.chi_exact(g, budget=args.budget)
    _emit(args, r.to_json())
    _note(f"chi in [{r.lower},{r.upper}] exact={r.exact} on {g.n} vertices")
    return 0 if r.exact else 3


def _cmd_tree_cert(args) -> int:
    g = _load_graph(args)
    ec = _load_coloring(args, g, t=2)
    if args.chi_lower is not None:
        lower = args.chi_lower
        chi_info = None
    else:
        r = chromatic.chi_exact(g, budget=args.budget)
        lower = r.lower
        chi_info = {"lower": r.lower, "upper": r.upper, "exact": r.exact}
    cert = tree_cert.mono_tree_certificate(g, ec, lower)
    dual = tree_cert.build_dual(g, ec)
    link_colors = tree_cert.edge_color_dual(dual)
    vc = tree_cert.vertex_coloring_from_dual(g, dual, link_colors)
    _emit(args, {
        "chi": chi_info,
        "certificate": cert.to_json(),
        "dual": {
            "left": [list(c) for c in dual.left],
            "right": [list(c) for c in dual.right],
            "links": [list(l) for l in dual.links],
            "max_degree": dual.max_degree(),
            "link_colors": [[v, link_colors[v]] for v in sorted(link_colors)],
        },
        "derived_classes": vc.classes(),
    })
    _note(
        f"color {cert.color} tree on {len(cert.vertices)} vertices "
        f"(bound used: {cert.chi_lower_used}); dual max degree {dual.max_degree()}"
    )
    return 0


def _cmd_match_cert(args) -> int:
    g = _load_graph(args)
    targets = _parse_targets(args.targets)
    ec = _load_coloring(args, g, t=targets.t)
    r = chromatic.chi_exact(g, budget=args.budget)
    need = matching.ramsey_matching_number(targets)
    if args.kiraly:
        cert = matching.find_mono_matching_kiraly(
            g, ec, r.witness, targets, chi_lower=r.lower
        )
        route = "reduction"
    else:
        cert = matching.find_mono_matching(g, ec, targets, chi_lower=r.lower)
        route = "direct"
    _emit(args, {
        "chi": {"lower": r.lower, "upper": r.upper, "exact": r.exact},
        "ramsey_value": need,
        "route": route,
        "certificate": cert.to_json() if cert else None,
    })
    if cert:
        _note(f"{route} route: color {cert.color} matching of {cert.target} edges")
        return 0
    _note(
        f"no color reaches its target (chi lower bound {r.lower} < {need}, "
        "so nothing is guaranteed)"
    )
    return 1


def _cmd_ramsey(args) -> int:
    targets = _parse_targets(args.targets)
    value = matching.ramsey_matching_number(targets)
    payload: dict = {"R": value, "targets": list(targets.targets)}
    code = 0
    if args.n is not None:
        patterns = [hunter.matching_pattern(k) for k in targets.targets]
        res = hunter.ramsey_bruteforce(patterns, args.n, guard_bits=args.guard_bits)
        payload["n"] = args.n
        payload["arrowing"] = res.arrowing
        payload["colorings_examined"] = res.colorings_examined
        payload["avoiding"] = (
            None if res.avoiding is None
            else [[u, v, c] for (u, v), c in sorted(res.avoiding.colors.items())]
        )
        code = 0 if res.arrowing else 1
        _note(
            f"K_{args.n} {'forces' if res.arrowing else 'does not force'} the "
            f"targets ({res.colorings_examined} partial colorings examined)"
        )
    else:
        _note(f"matching Ramsey number: {value}")
    _emit(args, payload)
    return code


def _cmd_reduce(args) -> int:
    g = _load_graph(args)
    ec = _load_coloring(args, g)
    r = chromatic.chi_exact(g, budget=args.budget)
    ri = matching.kiraly_reduce(g, ec, r.witness)
    _emit(args, {
        "chi": {"lower": r.lower, "upper": r.upper, "exact": r.exact},
        "instance": ri.to_json(),
    })
    _note(f"reduced to {ri.k} classes, {len(ri.edge_color)} colored pairs")
    return 0


def _cmd_hunt(args) -> int:
    pattern = _parse_pattern(args.pattern)
    stream = _candidate_stream(args.candidates, args.seed, args.chi_budget)
    report = hunter.hunt(
        pattern,
        args.t,
        args.ramsey_value,
        stream,
        colorings_budget=args.budget,
        chi_budget=args.chi_budget,
    )
    _emit(args, report.to_json())
    for c in report.candidates:
        state = (
            "counterexample" if c.counterexample
            else c.skipped_reason if c.skipped_reason
            else ("exhausted" if c.exhausted else "budget hit")
        )
        _note(f"{c.graph6}  chi>={c.chi_lower}  {state}")
    if report.counterexample is not None:
        _note("counterexample found and re-verified")
        return 1
    inconclusive = any(
        (c.searched and not c.exhausted) or (not c.searched and not c.chi_is_exact)
        for c in report.candidates
    )
    if inconclusive:
        _note("no counterexample, but some candidates were not settled")
        return 3
    _note("no counterexample; all candidates settled")
    return 0


def _infer_kind(data: dict) -> str:
    if "vertices" in data and "chi_lower_used" in data:
        return "tree"
    if "target" in data and "edges" in data:
        return "matching"
    if "classes" in data and "upper" in data:
        return "chi"
    if "pairs" in data and "classes" in data:
        return "reduced"
    if "pattern" in data and "ramsey_value" in data:
        return "hunt"
    raise ValueError("cannot tell what kind of certificate this is")


def _cmd_verify(args) -> int:
    with open(args.certificate) as fh:
        data = json.load(fh)
    # unwrap CLI output envelopes
    for key in ("certificate", "instance"):
        if key in data and isinstance(data[key], dict):
            data = data[key]
            break
    kind = _infer_kind(data)
    if kind == "hunt":
        problems = []
        cex = data.get("counterexample")
        if cex is None:
            problems = []
        else:
            g = parse_graph(cex["graph6"], "g6")
            colors = {(min(u, v), max(u, v)): c for u, v, c in cex["coloring"]}
            ec = EdgeColoring(data["t"], colors)
            pat = hunter.AcyclicPattern(
                Graph.from_edges(data["pattern"]["n"],
                                 [tuple(e) for e in data["pattern"]["edges"]])
            )
            problems = hunter.check_hunt_counterexample(
                pat, data["t"], data["ramsey_value"], g, ec, chi_budget=args.budget
            )
    else:
        if args.graph is None:
            raise ValueError(f"a {kind} certificate needs the graph it talks about")
        g = _load_graph(args)
        if kind == "chi":
            problems = verify.check_chi_witness(g, data)
        else:
            if args.coloring is None:
                raise ValueError(f"a {kind} certificate needs --coloring")
            ec = _load_coloring(args, g)
            if kind == "tree":
                cert = tree_cert.TreeCertificate.from_json(data)
                problems = verify.check_tree_certificate(g, ec, cert)
            elif kind == "matching":
                cert = matching.MatchingCertificate.from_json(data)
                problems = verify.check_matching_certificate(g, ec, cert)
            else:
                ri = matching.ReducedInstance(
                    t=data["t"],
                    classes=tuple(tuple(c) for c in data["classes"]),
                    edge_color={
                        (p["i"], p["j"]): p["color"] for p in data["pairs"]
                    },
                    provenance={
                        (p["i"], p["j"]): tuple(p["provenance"]) for p in data["pairs"]
                    },
                )
                problems = verify.check_reduced_instance(g, ec, ri)
    _emit(args, {"kind": kind, "ok": not problems, "problems": problems})
    _note("certificate holds" if not problems else "; ".join(problems))
    return 0 if not problems else 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=_PROG,
        description="certificates for monochromatic trees and matchings, "
        "plus a counterexample hunter",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, graph=True, coloring=False):
        if graph:
            p.add_argument("graph", help="graph file, or - for stdin")
            p.add_argument(
                "--format", default="edges", choices=["edges", "dimacs", "g6"],
                help="graph file format (default: edges)",
            )
        if coloring:
            p.add_argument("--coloring", required=True, help="edge-coloring file (u v c lines)")
        p.add_argument("--budget", type=int, default=chromatic.DEFAULT_BUDGET,
                       help="node-expansion budget for exact searches")
        p.add_argument("--seed", type=int, default=0, help="seed recorded in the output")
        p.add_argument("--json-out", default=None, help="also write the JSON to this file")

    p = sub.add_parser("chi", help="chromatic bounds with a coloring witness")
    common(p)
    p.set_defaults(func=_cmd_chi)

    p = sub.add_parser("tree-cert", help="monochromatic-tree certificate and dual witness")
    common(p, coloring=True)
    p.add_argument("--chi-lower", type=int, default=None,
                   help="trusted chromatic lower bound (default: computed)")
    p.set_defaults(func=_cmd_tree_cert)

    p = sub.add_parser("match-cert", help="monochromatic-matching certificate")
    common(p, coloring=True)
    p.add_argument("--targets", required=True, help="matching sizes, e.g. 2,2")
    p.add_argument("--kiraly", action="store_true",
                   help="use the contraction route instead of per-color matching")
    p.set_defaults(func=_cmd_match_cert)

    p = sub.add_parser("ramsey", help="matching Ramsey number, optionally brute-forced")
    p.add_argument("--targets", required=True, help="matching sizes, e.g. 2,2")
    p.add_argument("--n", type=int, default=None,
                   help="also decide arrowing on K_n exhaustively")
    p.add_argument("--guard-bits", type=int, default=28,
                   help="refuse exhaustive searches above 2^guard-bits")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json-out", default=None)
    p.set_defaults(func=_cmd_ramsey)

    p = sub.add_parser("reduce", help="contract a colored graph onto its color classes")
    common(p, coloring=True)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("hunt", help="search candidate hosts for an avoiding coloring")
    p.add_argument("--pattern", required=True,
                   help="path:K | star:K | matching:K | tree-file:PATH")
    p.add_argument("--t", type=int, required=True, help="number of colors")
    p.add_argument("--ramsey-value", type=int, required=True,
                   help="chromatic threshold candidates must reach")
    p.add_argument("--candidates", action="append", default=[],
                   help="mycielski:STEPS | kneser:N,K | multipartite:A,B,... | "
                        "random:n=..,p=..,count=..[,chi_min=..] | g6:PATH "
                        "(default: graph6 lines on stdin)")
    p.add_argument("--budget", type=int, default=10_000_000,
                   help="partial-coloring budget per candidate")
    p.add_argument("--chi-budget", type=int, default=chromatic.DEFAULT_BUDGET)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json-out", default=None)
    p.set_defaults(func=_cmd_hunt)

    p = sub.add_parser("verify", help="re-check a certificate JSON")
    p.add_argument("certificate", help="certificate JSON file")
    p.add_argument("graph", nargs="?", default=None, help="graph file, or - for stdin")
    p.add_argument("--format", default="edges", choices=["edges", "dimacs", "g6"])
    p.add_argument("--coloring", default=None, help="edge-coloring file")
    p.add_argument("--budget", type=int, default=chromatic.DEFAULT_BUDGET)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json-out", default=None)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphParseError as e:
        _note(f"parse error: {e}")
        return 2
    except InternalInconsistencyError as e:
        _note(f"internal inconsistency: {e}")
        return 2
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as e:
        _note(f"error: {e}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
