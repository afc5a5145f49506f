"""
Command line for clique bounds, constructions, rev-lex complexes, the board
simulator and the brute-force oracle.

Every command prints a JSON envelope by default; `--format` selects csv,
text, graph6 or edgelist where the command has such a rendering. Logs go to
stderr so stdout stays machine-readable.
"""
import argparse
import asyncio
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from cliquebounds import __version__
from cliquebounds.board import run_board
from cliquebounds.complexes import colored_revlex_complex, face_vector, facets_to_text, revlex_complex
from cliquebounds.config import EXIT_CODES, GRAPH_CONFIG, ORACLE_CONFIG, STATS_CONFIG
from cliquebounds.core.bounds import fj_series, main_bound, nonconsec_report, ratio_stats
from cliquebounds.core.representations import colored_rep, kk_rep, lgbd_rep
from cliquebounds.errors import (
    BoardInvariantError,
    CounterexampleError,
    DomainError,
    InapplicableConstructionError,
    ResourceLimitError,
)
from cliquebounds.graphs import (
    best_construction,
    clique_vector,
    conbd_witness,
    construction1,
    construction2,
    construction3,
)
from cliquebounds.models.envelope import OutputEnvelope
from cliquebounds.models.graph import Graph
from cliquebounds.oracle import build_extremal_table, verify_main_theorem, verify_nonexistence
from cliquebounds.utils.serialization import render_decimal, to_json_safe

import logging
logger = logging.getLogger(__name__)


@dataclass
class CommandResult:
    """Payload for the JSON envelope plus any alternative renderings."""
    payload: Any
    renderings: Dict[str, str] = field(default_factory=dict)
    exit_code: int = EXIT_CODES["ok"]


CONSTRUCTIONS: Dict[str, Callable] = {
    "1": construction1,
    "2": construction2,
    "3": construction3,
    "lower": conbd_witness,
    "auto": best_construction,
}


def _read_graph(source: str) -> Graph:
    """Read a graph6 string or an edge list from a file ('-' for stdin)."""
    try:
        text = sys.stdin.read() if source == "-" else Path(source).read_text()
    except OSError as e:
        raise DomainError(f"cannot read graph from {source}: {e}") from e
    stripped = text.strip()
    if not stripped:
        raise DomainError(f"no graph in {source}")
    if stripped.startswith("n ") or stripped.startswith("#"):
        return Graph.from_edge_list_text(text)
    return Graph.from_graph6(stripped.splitlines()[0])


def cmd_repr(args: argparse.Namespace) -> CommandResult:
    cascade = kk_rep(args.m, args.k)
    payload: Dict[str, Any] = {
        "m": args.m,
        "k": args.k,
        "cascade": {"terms": list(cascade.terms), "value": cascade.value},
    }
    lines = [f"cascade: {list(cascade.terms)} -> {cascade.value}"]
    if args.k >= 2:
        rep = lgbd_rep(args.m, args.k)
        payload["lgbd_form"] = {
            "n_k": rep.n_k, "n_k1": rep.n_k1, "a_terms": list(rep.a_terms), "value": rep.value,
        }
        lines.append(f"lgbd form: ({rep.n_k}, {rep.n_k1}; {list(rep.a_terms)}) -> {rep.value}")
    r = args.r
    if r is None and cascade.leading > args.k:
        r = cascade.leading - 1
    if r is not None:
        colored = colored_rep(args.m, args.k, r)
        payload["colored"] = {
            "r": r, "terms": [list(t) for t in colored.terms], "value": colored.value,
        }
        lines.append(f"colored (r={r}): {[tuple(t) for t in colored.terms]} -> {colored.value}")
    return CommandResult(payload, {"text": "\n".join(lines) + "\n"})


def cmd_bound(args: argparse.Namespace) -> CommandResult:
    report = main_bound(args.m, args.k)
    payload: Dict[str, Any] = {"bounds": report}
    text = (
        f"oldbd={report.oldbd} lgbd={report.lgbd} smbd={report.smbd} "
        f"main={report.main} winner={report.winner.value}\n"
    )
    if args.step > 1:
        nonconsec = nonconsec_report(args.m, args.k, args.step)
        payload["nonconsec"] = nonconsec
        text += (
            f"c_{args.k + args.step} <= max({nonconsec.lgbd_component}, "
            f"{nonconsec.colored_component}) = {nonconsec.bound}\n"
        )
    return CommandResult(payload, {"text": text})


def cmd_construct(args: argparse.Namespace) -> CommandResult:
    plan, graph = CONSTRUCTIONS[args.which](args.m, args.k)
    payload: Dict[str, Any] = {"plan": plan, "graph6": graph.to_graph6()}
    if graph.n <= GRAPH_CONFIG["enumeration_cap"]:
        payload["clique_vector"] = list(clique_vector(graph, max_size=args.k + 1).counts)
    return CommandResult(payload, {
        "graph6": graph.to_graph6() + "\n",
        "edgelist": graph.to_edge_list_text(),
    })


def cmd_cliques(args: argparse.Namespace) -> CommandResult:
    graph = _read_graph(args.graph)
    vector = clique_vector(graph, max_size=args.max_size)
    payload = {
        "n": graph.n,
        "edges": graph.edge_count,
        "clique_vector": list(vector.counts),
        "truncated_at": vector.truncated_at,
    }
    return CommandResult(payload, {"text": " ".join(str(c) for c in vector.counts) + "\n"})


def cmd_revlex(args: argparse.Namespace) -> CommandResult:
    if args.r is None:
        complex_ = revlex_complex(args.k, args.m)
    else:
        complex_ = colored_revlex_complex(args.k, args.m, args.r)
    payload = {
        "k": args.k,
        "m": args.m,
        "r": args.r,
        "facets": [list(f) for f in complex_.facets],
        "face_vector": face_vector(complex_),
    }
    return CommandResult(payload, {"text": facets_to_text(complex_)})


def cmd_board(args: argparse.Namespace) -> CommandResult:
    run = run_board(args.k, args.top, args.bottom)
    blocks = [run.initial.render()]
    for record in run.trace:
        substeps = f" ({', '.join(s.value for s in record.substeps)})" if record.substeps else ""
        blocks.append(f"{record.move_type.value}{substeps}\n{record.post_state.render()}")
    blocks.append(f"r_{args.k + 1}: {run.r_k1_before} -> {run.r_k1_after}")
    return CommandResult(run, {"text": "\n".join(blocks) + "\n"})


def _sweep_options(args: argparse.Namespace) -> Dict[str, Any]:
    options: Dict[str, Any] = {"allow_long_run": args.allow_long_run}
    if args.workers is not None:
        options["workers"] = args.workers
    return options


def cmd_verify(args: argparse.Namespace) -> CommandResult:
    if args.action == "theorem":
        report = asyncio.run(verify_main_theorem(args.k, args.n_max, **_sweep_options(args)))
        if not report.ok:
            first = report.violations[0]
            logger.error(f"{len(report.violations)} bound violations, first witness {first.witness6}")
            return CommandResult(report, exit_code=EXIT_CODES["counterexample"])
        return CommandResult(report)
    if args.action == "table":
        table = asyncio.run(build_extremal_table(args.k, args.n_max, **_sweep_options(args)))
        return CommandResult(table, {"csv": table.to_csv()})
    if args.m is None or args.target is None:
        raise DomainError("verify nonexistence needs --m and --target")
    report = asyncio.run(verify_nonexistence(
        args.k, args.step, args.m, args.target, args.n_max, **_sweep_options(args)
    ))
    return CommandResult(report, {"text": f"{report.status.value}\n"})


def cmd_stats(args: argparse.Namespace) -> CommandResult:
    if args.action == "fj":
        grid = args.j or STATS_CONFIG["fj_grid"]
        values = fj_series(grid, args.k)
        payload = {
            "k": args.k,
            "fj": values,
            "decimal": {j: render_decimal(v) for j, v in values.items()},
        }
        text = "".join(f"f_{j} = {v} ~ {render_decimal(v)}\n" for j, v in values.items())
        return CommandResult(payload, {"text": text})
    if args.m is None:
        raise DomainError("stats ratio needs --m")
    if args.m_max is None:
        stats = ratio_stats(args.m, args.k)
        return CommandResult(stats)
    checked = exceeded = 0
    worst = None
    for m in range(args.m, args.m_max + 1):
        stats = ratio_stats(m, args.k)
        if stats.ratbound_rhs is None:
            continue
        checked += 1
        if stats.ratio_proxy > stats.ratbound_rhs:
            exceeded += 1
            logger.warning(f"m={m}: ratio proxy {stats.ratio_proxy} above {stats.ratbound_rhs}")
        if worst is None or stats.ratio_proxy > worst.ratio_proxy:
            worst = stats
    payload = {"k": args.k, "m_range": [args.m, args.m_max], "checked": checked,
               "exceeded": exceeded, "largest_proxy": worst}
    return CommandResult(payload, exit_code=EXIT_CODES["counterexample"] if exceeded else EXIT_CODES["ok"])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cliquebounds", description="Exact bounds on clique counts")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--format", choices=["json", "csv", "text", "graph6", "edgelist"], default="json")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", action="store_true", help="Debug logging")
    verbosity.add_argument("--quiet", action="store_true", help="Warnings only")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("repr", help="Cascade, lgbd-form and colored representations")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, help="Color count (default n_k - 1 when n_k > k)")
    p.set_defaults(handler=cmd_repr)

    p = sub.add_parser("bound", help="oldbd, lgbd, smbd and the main bound")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--step", type=int, default=1, help="Bound c_{k+step} instead of c_{k+1}")
    p.set_defaults(handler=cmd_bound)

    p = sub.add_parser("construct", help="Build a bound-attaining graph")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--which", choices=sorted(CONSTRUCTIONS), default="auto")
    p.set_defaults(handler=cmd_construct)

    p = sub.add_parser("cliques", help="Clique vector of a graph (graph6 or edge list)")
    p.add_argument("graph", help="File path, or '-' for stdin")
    p.add_argument("--max-size", type=int, default=None)
    p.set_defaults(handler=cmd_cliques)

    p = sub.add_parser("revlex", help="Rev-lex or colored rev-lex complex")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, default=None)
    p.set_defaults(handler=cmd_revlex)

    p = sub.add_parser("board", help="Run the two-row board rearrangement")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--top", type=int, nargs="+", required=True, help="a_k, a_{k-1}, ...")
    p.add_argument("--bottom", type=int, nargs="*", default=[], help="c_k, c_{k-1}, ...")
    p.set_defaults(handler=cmd_board)

    p = sub.add_parser("verify", help="Brute-force checks over small graphs")
    p.add_argument("action", choices=["theorem", "table", "nonexistence"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--step", type=int, default=1)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--target", type=int, default=None)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--allow-long-run", action="store_true", help="Permit sweeps above the soft cap")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("stats", help="f_j and ratio statistics")
    p.add_argument("action", choices=["fj", "ratio"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--j", type=int, nargs="+", default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--m-max", type=int, default=None, help="Scan m..m_max against the ratio bound")
    p.set_defaults(handler=cmd_stats)
    return parser


def _error_envelope(command: List[str], error: Exception) -> OutputEnvelope:
    payload: Dict[str, Any] = {"error": type(error).__name__, "message": str(error)}
    if isinstance(error, InapplicableConstructionError):
        payload["construction"] = error.construction
        payload["reason"] = error.reason
    if isinstance(error, CounterexampleError):
        payload["witness6"] = error.witness6
    return OutputEnvelope(command=command, version=__version__, ok=False, payload=payload)


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one command and print its output; returns the exit status."""
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, format="%(asctime)s [%(levelname)s] %(message)s", stream=sys.stderr)
    if args.command == "verify" and args.n_max is None:
        args.n_max = ORACLE_CONFIG["default_n_max"]

    try:
        result = args.handler(args)
        if args.format == "json":
            envelope = OutputEnvelope(command=argv, version=__version__, payload=to_json_safe(result.payload))
            print(envelope.to_json())
        elif args.format in result.renderings:
            sys.stdout.write(result.renderings[args.format])
        else:
            raise DomainError(f"--format {args.format} is not available for {args.command}")
        return result.exit_code
    except InapplicableConstructionError as e:
        logger.error(f"Construction not applicable: {e}")
        print(_error_envelope(argv, e).to_json())
        return EXIT_CODES["inapplicable"]
    except (CounterexampleError, BoardInvariantError) as e:
        logger.error(f"Verification failed: {e}")
        print(_error_envelope(argv, e).to_json())
        return EXIT_CODES["counterexample"]
    except (DomainError, ResourceLimitError, ValueError) as e:
        logger.error(f"Invalid input: {e}")
        print(_error_envelope(argv, e).to_json())
        return EXIT_CODES["domain_error"]


def run() -> None:
    """Console-script entry point."""
    sys.exit(main())


if __name__ == "__main__":
    run()
