"""Command-line front end.

    treeaug --input tree.txt --r 4 --verify
    treeaug --random-tree 12 --seed 3 --r 5 --json out.json --dot figs/
    cat tree.txt | treeaug --stdin --r 3 --oracle --trace

The augmentation edge list goes to stdout (or ``--output``), one edge per
line with its provenance tag as a trailing comment. Report lines follow as
``#`` comments so the output still parses as an edge list.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .augment import augment_tree
from .augset import AugmentationSet
from .blocktree import BlockTree
from .errors import (
    BudgetExceededError,
    GraphFormatError,
    InvalidTargetError,
    OracleLimitError,
    PatternExhaustedError,
    PreconditionError,
    UnsupportedTargetError,
)
from .graph import Graph, format_edge_list, is_path, is_tree, parse_edge_list
from .nonpath import DEFAULT_LEAF_ORDERS, DEFAULT_SEARCH_BUDGET, TIE_BREAKS, RoundState, replay_block_trees, tag_round
from .oracle import (
    AugmentationReport,
    OracleLimits,
    brute_force_min_augmentation,
    random_tree,
    verify_augmentation,
    with_oracle_verdict,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_VERIFY_FAILED = 3
EXIT_PATTERN_EXHAUSTED = 4


@dataclass
class RunConfig:
    r: int
    input_path: str | None = None
    random_n: int | None = None
    stdin: bool = False
    seed: int = 0
    verify: bool = False
    oracle: bool = False
    trace: bool = False
    dot_dir: str | None = None
    json_path: str | None = None
    output_path: str | None = None
    graph_out: str | None = None
    tie_break: str = "search"
    budget: int = DEFAULT_SEARCH_BUDGET
    leaf_orders: int = DEFAULT_LEAF_ORDERS
    oracle_max_n: int = OracleLimits.max_n
    oracle_max_r: int = OracleLimits.max_r

    def __post_init__(self) -> None:
        sources = sum([self.input_path is not None, self.random_n is not None, self.stdin])
        if sources != 1:
            raise ValueError("exactly one of --input, --random-tree, --stdin is required")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="treeaug", description="Augment a tree to an r-connected graph with few edges.")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="FILE", help="edge-list file ('n m' header, then 'u v' lines)")
    src.add_argument("--random-tree", type=int, metavar="N", help="use a random labelled tree on N vertices")
    src.add_argument("--stdin", action="store_true", help="read the edge list from standard input")
    p.add_argument("--seed", type=int, default=0, help="seed for --random-tree (default 0)")
    p.add_argument("--r", type=int, required=True, help="target vertex connectivity")
    p.add_argument("--verify", action="store_true", help="compute exact connectivity of the result")
    p.add_argument("--oracle", action="store_true", help="compare against exhaustive search (small inputs only)")
    p.add_argument("--trace", action="store_true", help="print per-round block trees to stderr")
    p.add_argument("--dot", metavar="DIR", help="write Graphviz files for input, block trees and output")
    p.add_argument("--json", metavar="FILE", help="write a JSON report ('-' for stdout)")
    p.add_argument("--output", metavar="FILE", help="write the augmentation edge list here instead of stdout")
    p.add_argument("--graph-out", metavar="FILE", help="write the edge list of the augmented graph")
    p.add_argument("--tie-break", choices=TIE_BREAKS, default="search",
                   help="non-path trees: take the lowest-label candidate, or backtrack over candidates (default)")
    p.add_argument("--budget", type=int, default=DEFAULT_SEARCH_BUDGET, help="search node budget per run")
    p.add_argument("--leaf-orders", type=int, default=DEFAULT_LEAF_ORDERS,
                   help="search mode: how many depth-first leaf orders to try")
    p.add_argument("--oracle-max-n", type=int, default=OracleLimits.max_n)
    p.add_argument("--oracle-max-r", type=int, default=OracleLimits.max_r)
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    return RunConfig(
        r=ns.r,
        input_path=ns.input,
        random_n=ns.random_tree,
        stdin=ns.stdin,
        seed=ns.seed,
        verify=ns.verify,
        oracle=ns.oracle,
        trace=ns.trace,
        dot_dir=ns.dot,
        json_path=ns.json,
        output_path=ns.output,
        graph_out=ns.graph_out,
        tie_break=ns.tie_break,
        budget=ns.budget,
        leaf_orders=ns.leaf_orders,
        oracle_max_n=ns.oracle_max_n,
        oracle_max_r=ns.oracle_max_r,
    )


def load_tree(cfg: RunConfig) -> Graph:
    if cfg.random_n is not None:
        return random_tree(cfg.random_n, cfg.seed)
    text = sys.stdin.read() if cfg.stdin else Path(cfg.input_path).read_text()
    return parse_edge_list(text)


def emit_json(
    n: int,
    r: int,
    eca: AugmentationSet,
    report: AugmentationReport | None = None,
) -> str:
    """JSON document with a fixed key order; report fields only when a report exists."""
    doc: dict = {"n": n, "r": r}
    if report is not None:
        doc["lower_bound"] = report.lower_bound
    doc["eca"] = [[u, v] for u, v in eca.edges]
    doc["round_tags"] = list(eca.round_tags)
    if report is not None:
        doc["achieved_kappa"] = report.achieved_kappa
        doc["optimal"] = report.optimal
        if report.witness is not None:
            doc["witness"] = sorted(report.witness.vertices)
    return json.dumps(doc) + "\n"


def graph_dot(g: Graph, name: str, extra: AugmentationSet | None = None) -> str:
    """Graphviz text; edges of ``extra`` are drawn dashed."""
    added = set(extra.edges) if extra is not None else set()
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    lines += [f"  {v};" for v in g.vertices]
    for u, v in g.sorted_edges():
        style = " [style=dashed]" if (u, v) in added else ""
        lines.append(f"  {u} -- {v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def format_trace(t: Graph, eca: AugmentationSet, trees: list[BlockTree]) -> str:
    lines = []
    chain = [e for e, tag in eca.items() if tag == "leaf-chain"]
    if chain:
        lines.append(f"leaf chain: {chain}")
    for bt in trees:
        lines.append(f"(C,{bt.round})-block tree:")
        for k, cyc in enumerate(bt.cycles):
            lines.append(f"  pi{k + 1} {list(cyc)} alpha={list(bt.alpha[k])}")
        if bt.sigmas:
            lines.append("  sigma " + " ".join(str(sorted(s)) for s in bt.sigmas))
        for e, tag in eca.items():
            if tag_round(tag) == bt.round:
                lines.append(f"  + {e[0]} {e[1]}  ({tag})")
    if not trees:
        for e, tag in eca.items():
            lines.append(f"+ {e[0]} {e[1]}  ({tag})")
    return "\n".join(lines) + "\n"


def format_report(report: AugmentationReport, oracle_note: str | None) -> str:
    lines = [
        f"# lower_bound {report.lower_bound}",
        f"# eca_size {report.eca_size}",
        f"# achieved_kappa {report.achieved_kappa}",
        f"# optimal {report.optimal}",
    ]
    if report.witness is not None:
        lines.append(f"# witness {' '.join(map(str, sorted(report.witness.vertices)))}")
    if oracle_note:
        lines.append(f"# oracle {oracle_note}")
    return "\n".join(lines) + "\n"


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def run(cfg: RunConfig) -> int:
    try:
        t = load_tree(cfg)
    except (OSError, GraphFormatError, PreconditionError) as exc:
        print(f"error: cannot read input tree: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if not is_tree(t):
        print("error: input graph is not a tree", file=sys.stderr)
        return EXIT_INVALID

    try:
        h, eca = augment_tree(t, cfg.r, tie_break=cfg.tie_break, budget=cfg.budget, leaf_orders=cfg.leaf_orders)
    except (InvalidTargetError, UnsupportedTargetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except PatternExhaustedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if isinstance(exc.state, RoundState):
            print(exc.state.describe(), file=sys.stderr)
        return EXIT_PATTERN_EXHAUSTED

    trees = [] if is_path(t) else replay_block_trees(t, eca)
    if cfg.trace:
        sys.stderr.write(format_trace(t, eca, trees))
    if cfg.dot_dir:
        out = Path(cfg.dot_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "input.dot").write_text(graph_dot(t, "input"))
        for bt in trees:
            (out / f"block_tree_C{bt.round}.dot").write_text(bt.to_dot())
        (out / "output.dot").write_text(graph_dot(h, "output", eca))

    report = None
    oracle_note = None
    if cfg.verify or cfg.oracle:
        report = verify_augmentation(t, eca.edges, cfg.r)
    if cfg.oracle:
        limits = OracleLimits(max_n=cfg.oracle_max_n, max_r=cfg.oracle_max_r)
        try:
            size, _ = brute_force_min_augmentation(t, cfg.r, limits)
            report = with_oracle_verdict(report, size)
            oracle_note = f"minimum {size}"
        except (OracleLimitError, BudgetExceededError) as exc:
            oracle_note = f"skipped: {exc}"

    text = format_edge_list(t.n, eca.edges, eca.round_tags)
    if report is not None:
        text += format_report(report, oracle_note)
    _write(cfg.output_path, text)
    if cfg.graph_out:
        Path(cfg.graph_out).write_text(format_edge_list(h.n, h.sorted_edges()))
    if cfg.json_path:
        _write(cfg.json_path, emit_json(t.n, cfg.r, eca, report))

    if report is not None and not report.ok:
        print(f"error: verification failed, kappa={report.achieved_kappa} < r={cfg.r}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    return run(config_from_args(ns))


if __name__ == "__main__":
    sys.exit(main())
