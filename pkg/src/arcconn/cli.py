"""Command line front end.

Exit codes: 0 decision made, 1 usage error, 2 invalid graph, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass
from typing import Any, Sequence

from arcconn import atlas
from arcconn.classify import OMEGA, Verdict, check_certificate, classify, is_n_ac
from arcconn.edgelist import parse_graph, serialize_graph
from arcconn.errors import BudgetExceeded, GraphError
from arcconn.graph import MultiGraph
from arcconn.menger import max_disjoint_paths
from arcconn.oracle import DEFAULT_BUDGET, Budget, oracle_n_ac, oracle_n_cc

SCHEMA = "arcconn.report/1"

EXIT_OK, EXIT_USAGE, EXIT_GRAPH, EXIT_BUDGET = 0, 1, 2, 3

# certificate keys that hold vertex ids (everything else is an edge id or a number)
_VERTEX_KEYS = {"cut", "vertex", "apex", "u", "w", "v", "a", "parts", "separator",
                "components", "linking"}


class UsageError(Exception):
    pass


@dataclass
class Report:
    command: str
    input: dict[str, Any]
    result: dict[str, Any]
    timing: float = 0.0
    oracle: dict[str, Any] | None = None
    schema: str = SCHEMA

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> Report:
        data = json.loads(text)
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {data.get('schema')!r}")
        return cls(**data)


# -- helpers ------------------------------------------------------------------------------------


def _name(g: MultiGraph, v: int) -> str:
    if v in g.labels:
        return g.labels[v]
    return str(v) if v in g else f"~{v}"


def _named_cert(g: MultiGraph, cert: dict[str, Any]) -> dict[str, Any]:
    """Replace vertex ids by labels; vertex ids from subdivisions show as ``~id``."""

    def conv(x):
        if isinstance(x, list):
            return [conv(y) for y in x]
        if isinstance(x, int) and not isinstance(x, bool):
            return _name(g, x)
        return x

    out = {}
    for k, val in cert.items():
        if k == "components" and isinstance(val, int):
            out[k] = val
        elif k in _VERTEX_KEYS:
            out[k] = conv(val)
        else:
            out[k] = val
    return out


def _verdict_dict(g: MultiGraph, v: Verdict) -> dict[str, Any]:
    return {
        "answer": v.answer,
        "clause": v.clause,
        "certificate": _named_cert(g, v.certificate),
        "certificate_checked": check_certificate(g, v),
    }


def _verdict_text(d: dict[str, Any]) -> str:
    parts = ["yes" if d["answer"] else "no", d["clause"]]
    for k, val in d["certificate"].items():
        if isinstance(val, list) and k in _VERTEX_KEYS:
            val = "{" + ",".join(map(str, val)) + "}" if all(not isinstance(x, list) for x in val) \
                else " ".join("{" + ",".join(map(str, p)) + "}" for p in val)
        parts.append(f"{k} {val}")
    return "; ".join(parts)


def _parse_n(text: str) -> int | str:
    if text.lower() in ("omega", "w", "ω"):
        return OMEGA
    try:
        n = int(text)
    except ValueError:
        raise UsageError(f"--n must be an integer or 'omega', got {text!r}") from None
    if n < 1:
        raise UsageError("--n must be positive")
    return n


def _config_dict(g: MultiGraph, cfg) -> dict[str, int]:
    return {f"{_name(g, u)}-{_name(g, v)}#{e}": k
            for e, k in cfg.counts.items() for u, v in [g.endpoints(e)]}


def _load(args) -> tuple[MultiGraph, dict[str, Any]]:
    sources = [args.graph is not None, args.named is not None, args.random is not None]
    if sum(sources) != 1:
        raise UsageError("give exactly one of a graph file, --named or --random")
    if args.named is not None:
        g = atlas.named(args.named)
        desc = {"named": args.named}
    elif args.random is not None:
        g = atlas.random_graph(args.seed, args.random, p=args.p)
        desc = {"random": args.random, "p": args.p, "seed": args.seed}
    else:
        if args.graph == "-":
            text = sys.stdin.read()
        else:
            try:
                with open(args.graph, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise UsageError(str(exc)) from exc
        g = parse_graph(text)
        desc = {"file": args.graph}
    desc.update(vertices=g.num_vertices, edges=g.num_edges, edgelist=serialize_graph(g))
    return g, desc


# -- commands -------------------------------------------------------------------------------------


def cmd_classify(g: MultiGraph, args) -> dict[str, Any]:
    c = classify(g)
    result = {
        "max_ac": c.max_ac,
        "cc_class": c.cc_class,
        "verdicts": {k: _verdict_dict(g, v) for k, v in c.per_n.items()},
    }
    return result


def _verify(g: MultiGraph, result: dict[str, Any], limit: int, budget: int | None) -> dict:
    shared = Budget(budget)
    rows = {}
    agree = True
    for n in range(1, limit + 1):
        o = oracle_n_ac(g, n, shared).answer
        d = result["verdicts"][f"ac{min(n, 7)}"]["answer"]
        rows[f"ac{n}"] = o
        agree &= o == d
    return {"limit": limit, "oracle": rows, "agree": agree, "expansions": shared.used}


def cmd_check(g: MultiGraph, args) -> dict[str, Any]:
    n = _parse_n(args.n)
    return {"n": n, "verdict": _verdict_dict(g, is_n_ac(g, n))}


def cmd_oracle(g: MultiGraph, args) -> dict[str, Any]:
    n = _parse_n(args.n)
    if n == OMEGA:
        raise UsageError("the oracle needs a finite --n")
    budget = Budget(args.budget)
    res = (oracle_n_cc if args.cc else oracle_n_ac)(g, n, budget)
    out = {"n": n, "property": "cc" if args.cc else "ac", "answer": res.answer,
           "configurations": res.checked, "expansions": budget.used}
    if res.failing is not None:
        out["failing"] = _config_dict(g, res.failing)
    return out


def cmd_menger(g: MultiGraph, args) -> dict[str, Any]:
    by_label = {g.label(v): v for v in g.vertices}

    def resolve(spec: str) -> list[int]:
        out = []
        for tok in spec.split(","):
            if tok not in by_label:
                raise GraphError(f"unknown vertex {tok!r}")
            out.append(by_label[tok])
        return out

    if not args.sources or not args.targets:
        raise UsageError("menger needs --from and --to")
    sys_, sep = max_disjoint_paths(g, resolve(args.sources), resolve(args.targets))
    return {
        "paths": [[_name(g, v) for v in p] for p in sys_.paths],
        "separator": sorted(_name(g, v) for v in sep.vertices),
        "size": len(sys_),
    }


def cmd_enumerate(args) -> dict[str, Any]:
    rows = []
    if args.cubic:
        if args.vertices is None:
            raise UsageError("enumerate --cubic needs --vertices")
        graphs = atlas.enumerate_cubic(args.vertices)
        for i, g in enumerate(graphs):
            six = is_n_ac(g, 6).answer
            if args.filter == "6ac" and not six:
                continue
            rows.append({"n": args.vertices, "id": i, "6ac": six, "edgelist": serialize_graph(g)})
    else:
        if args.max_edges is None:
            raise UsageError("enumerate needs --cubic --vertices N or --max-edges M")
        for i, g in enumerate(atlas.enumerate_connected_multigraphs(args.max_edges)):
            c = classify(g)
            if args.filter == "6ac" and c.per_n["ac6"].answer is False:
                continue
            rows.append({"edges": g.num_edges, "id": i, "max_ac": c.max_ac,
                         "edgelist": serialize_graph(g)})
    return {"rows": rows, "count": len(rows)}


# -- entry point ------------------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit with 2, which means "invalid graph" here
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("graph", nargs="?", help="edge-list file, or - for stdin")
    common.add_argument("--named", help="catalogue graph, e.g. k33, wagner, cycle-7")
    common.add_argument("--random", type=int, metavar="VERTICES", help="seeded G(n, p) input")
    common.add_argument("--p", type=float, default=0.5, help="edge probability for --random")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("text", "machine"), default="text")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="oracle node-expansion cap")

    p = _Parser(prog="arcconn", description="n-arc and n-circle connectedness of graphs")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    c = sub.add_parser("classify", parents=[common], help="all verdicts for one graph")
    c.add_argument("--verify", action="store_true", help="cross-check with the oracle")
    c.add_argument("--verify-limit", type=int, default=5, metavar="N")
    k = sub.add_parser("check", parents=[common], help="decide n-ac for one n")
    k.add_argument("--n", required=True)
    o = sub.add_parser("oracle", parents=[common], help="brute-force n-ac (or n-cc)")
    o.add_argument("--n", required=True)
    o.add_argument("--cc", action="store_true", help="circles instead of arcs")
    m = sub.add_parser("menger", parents=[common], help="disjoint A-B paths and a separator")
    m.add_argument("--from", dest="sources", help="comma-separated vertex ids")
    m.add_argument("--to", dest="targets", help="comma-separated vertex ids")
    e = sub.add_parser("enumerate", help="cubic census or small multigraph corpus")
    e.add_argument("--cubic", action="store_true")
    e.add_argument("--vertices", type=int)
    e.add_argument("--max-edges", type=int)
    e.add_argument("--filter", choices=("6ac",))
    e.add_argument("--format", choices=("text", "machine"), default="text")
    return p


def _render_text(report: Report) -> str:
    r = report.result
    cmd = report.command
    if cmd == "classify":
        lines = [f"max_ac: {r['max_ac']}", f"cc_class: {r['cc_class']}"]
        for key, v in r["verdicts"].items():
            lines.append(f"{key}: {_verdict_text(v)}")
        if report.oracle:
            o = report.oracle
            lines.append(f"oracle up to n={o['limit']}: {'agrees' if o['agree'] else 'DISAGREES'}")
        return "\n".join(lines)
    if cmd == "check":
        return _verdict_text(r["verdict"])
    if cmd == "oracle":
        if r["answer"]:
            return "yes"
        cfg = ", ".join(f"{k} x{v}" for k, v in r["failing"].items())
        return f"no; config: {cfg}"
    if cmd == "menger":
        lines = [f"{r['size']} disjoint paths"]
        lines += [" - ".join(p) for p in r["paths"]]
        lines.append("separator {" + ",".join(r["separator"]) + "}")
        return "\n".join(lines)
    if cmd == "enumerate":
        out = []
        for row in r["rows"]:
            if "6ac" in row:
                out.append(f"{row['n']}\t{row['id']}\t{'6ac' if row['6ac'] else 'not-6ac'}")
            else:
                out.append(f"{row['edges']}\t{row['id']}\t{row['max_ac']}")
        return "\n".join(out)
    raise AssertionError(cmd)


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        start = time.perf_counter()
        if args.command == "enumerate":
            desc: dict[str, Any] = {"cubic": args.cubic, "vertices": args.vertices,
                                    "max_edges": args.max_edges, "filter": args.filter}
            result = cmd_enumerate(args)
            oracle = None
        else:
            g, desc = _load(args)
            handler = {"classify": cmd_classify, "check": cmd_check,
                       "oracle": cmd_oracle, "menger": cmd_menger}[args.command]
            result = handler(g, args)
            oracle = None
            if args.command == "classify" and args.verify:
                oracle = _verify(g, result, args.verify_limit, args.budget)
        report = Report(args.command, desc, result, time.perf_counter() - start, oracle)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except GraphError as exc:
        print(f"invalid graph: {exc}", file=sys.stderr)
        return EXIT_GRAPH
    if args.format == "machine":
        print(report.to_json(), file=out)
    else:
        print(_render_text(report), file=out)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
