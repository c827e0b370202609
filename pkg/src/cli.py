from __future__ import annotations

# Allow "python src/cli.py ..." without package context
if __name__ == "__main__" and __package__ is None:
    import os, sys

    sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import argparse
import sys
from pathlib import Path
from typing import Dict, List, Optional, Sequence, TextIO, Tuple

from src import SOLVER_VERSION
from src.config import load_config
from src.corpus import enumerate_connected, run_sweep, run_whitney_bridge, write_sweep_report
from src.errors import (
    CapabilityError,
    CertificationError,
    ContractError,
    Graph6ParseError,
    SearchCancelled,
    TheoremViolation,
)
from src.exact import distinguishing_chromatic_capped, distinguishing_chromatic_number
from src.extremal import classify_extremal
from src.graph_core import Graph, class_profile, graph6_str, is_connected, parse_graph6
from src.line_graphs import line_root
from src.logging_store import ResultCache, log
from src.sweep_summary import print_summary
from src.symmetry import as_colouring, automorphisms, is_distinguishing, is_proper
from src.theorems import THEOREMS

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_CAPABILITY = 3
EXIT_VIOLATION = 10


# ---------------- input helpers ----------------
def _flag(value: bool) -> str:
    return "true" if value else "false"


def _pairs(colouring: Sequence[int]) -> str:
    return ",".join(f"{v}:{c}" for v, c in enumerate(colouring))


def read_inputs(args: argparse.Namespace, stdin: TextIO) -> List[Tuple[int, str]]:
    """
    (line number, graph6) from exactly one source: positional strings, --file,
    or stdin when neither is given. Blank lines and '#' comments are skipped.
    """
    positional = list(getattr(args, "graphs", None) or [])
    path = getattr(args, "file", None)
    if positional and path:
        raise ContractError("give graph6 strings or --file, not both")
    if positional:
        lines = positional
    elif path:
        try:
            lines = Path(path).read_text(encoding="utf-8").splitlines()
        except OSError as e:
            raise ContractError(f"cannot read {path}: {e}") from e
    else:
        lines = stdin.read().splitlines()
    out = []
    for i, line in enumerate(lines, start=1):
        text = line.strip()
        if text and not text.startswith("#"):
            out.append((i, text))
    return out


def parse_input(line_no: int, text: str) -> Graph:
    try:
        return parse_graph6(text)
    except Graph6ParseError as e:
        raise Graph6ParseError(f"line {line_no}: {e}") from e


def _connected(line_no: int, g: Graph) -> Graph:
    if not is_connected(g):
        raise ContractError(f"line {line_no}: graph {graph6_str(g)} is not connected")
    return g


def read_colouring_file(path: str) -> Dict[int, int]:
    """One `vertex colour` pair per line."""
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as e:
        raise ContractError(f"cannot read colouring file {path}: {e}") from e
    colouring: Dict[int, int] = {}
    for i, line in enumerate(lines, start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        parts = text.split()
        if len(parts) != 2:
            raise ContractError(f"{path} line {i}: expected 'vertex colour', got: {text}")
        try:
            v, c = int(parts[0]), int(parts[1])
        except ValueError:
            raise ContractError(f"{path} line {i}: vertex and colour must be integers, got: {text}")
        if v in colouring:
            raise ContractError(f"{path} line {i}: vertex {v} coloured twice")
        colouring[v] = c
    return colouring


def _classes(g: Graph) -> str:
    labels = class_profile(g).labels()
    return ",".join(labels) if labels else "-"


# ---------------- verbs ----------------
def cmd_solve(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> int:
    for line_no, text in read_inputs(args, stdin):
        g = _connected(line_no, parse_input(line_no, text))
        code = graph6_str(g)
        if args.cap is not None:
            found = distinguishing_chromatic_capped(g, args.cap)
            fields = [f"graph6={code}", f"n={g.n}", f"cap={args.cap}", f"feasible={_flag(found is not None)}"]
            if found is not None and args.witness:
                fields.append(f"witness={_pairs(found)}")
            print(" ".join(fields), file=out)
            continue
        res = distinguishing_chromatic_number(g)
        fields = [
            f"graph6={code}",
            f"n={res.n}",
            f"delta={res.delta}",
            f"chi={res.chi}",
            f"omega={res.omega}",
            f"alpha={res.alpha}",
            f"chi_D={res.chi_D}",
            f"classes={_classes(g)}",
            f"extremal={res.extremal.tag.value}",
        ]
        if args.witness:
            fields.append(f"witness={_pairs(res.witness)}")
        print(" ".join(fields), file=out)
    return EXIT_OK


def cmd_certify(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> int:
    g = parse_input(1, args.graph)
    colouring = as_colouring(g, read_colouring_file(args.colouring))
    proper = is_proper(g, colouring)
    fields = [f"graph6={graph6_str(g)}", f"proper={_flag(proper)}"]
    if g.n <= load_config().automorphism_cap:
        report = automorphisms(g, colouring)
        distinguishing = proper and report.order == 1
        fixed = ",".join(str(v) for v in sorted(report.fixed)) or "-"
        fields += [f"distinguishing={_flag(distinguishing)}", f"aut_order={report.order}", f"fixed={fixed}"]
    else:
        distinguishing = is_distinguishing(g, colouring)
        fields.append(f"distinguishing={_flag(distinguishing)}")
    print(" ".join(fields), file=out)
    return EXIT_OK if distinguishing else EXIT_NEGATIVE


def cmd_classify(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> int:
    for line_no, text in read_inputs(args, stdin):
        g = parse_input(line_no, text)
        fields = [f"graph6={graph6_str(g)}", f"classes={_classes(g)}"]
        if is_connected(g):
            extremal = classify_extremal(g)
            fields.append(f"extremal={','.join(t.value for t in extremal.tags) or 'none'}")
            fields += [f"{k}={v}" for k, v in sorted(extremal.parameters.items())]
        else:
            fields.append("extremal=disconnected")
        print(" ".join(fields), file=out)
    return EXIT_OK


def cmd_roots(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> int:
    for line_no, text in read_inputs(args, stdin):
        g = _connected(line_no, parse_input(line_no, text))
        root = line_root(g)
        shown = "not-a-line-graph" if root is None else graph6_str(root)
        print(f"graph6={graph6_str(g)} root={shown}", file=out)
    return EXIT_OK


def cmd_enum(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> int:
    count = 0
    for g in enumerate_connected(args.n):
        print(graph6_str(g), file=out)
        count += 1
    log("Enum", f"{count} connected graphs on {args.n} vertices")
    return EXIT_OK


def _cache(args: argparse.Namespace) -> Optional[ResultCache]:
    if args.no_cache:
        return None
    return ResultCache(load_config().cache_dir, SOLVER_VERSION)


def cmd_sweep(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> int:
    cfg = load_config()
    n_max = args.n_max if args.n_max is not None else cfg.default_n_max
    jobs = args.jobs if args.jobs is not None else cfg.jobs
    records = run_sweep(
        args.theorem,
        n_max,
        k=args.k,
        jobs=jobs,
        cache=_cache(args),
        override=args.override,
        verbose=cfg.verbose,
    )
    for r in records:
        fields = [
            f"graph6={r.graph6}",
            f"n={r.n}",
            f"chi_D={r.chi_D}",
            f"bound={r.bound}",
            f"equality={_flag(r.equality)}",
            f"exception={_flag(r.exception)}",
        ]
        if "chi_index" in r.extra:
            fields.insert(3, f"chi_index={r.extra['chi_index']}")
        if r.constructive_colours is not None:
            fields.append(f"constructive={r.constructive_colours}")
        print(" ".join(fields), file=out)
    if args.out:
        written = write_sweep_report(args.out, args.theorem, n_max, records, k=args.k)
        log("Report", f"{written} records written to {args.out}", cfg.verbose)
    if cfg.verbose:
        print_summary(args.theorem, records)
    return EXIT_OK


def cmd_whitney(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> int:
    cfg = load_config()
    rows = run_whitney_bridge(
        args.max_edges,
        jobs=args.jobs if args.jobs is not None else cfg.jobs,
        cache=_cache(args),
        verbose=cfg.verbose,
    )
    for row in rows:
        print(
            f"graph6={row['graph6']} edges={row['edges']} chi_index={row['chi_index']} "
            f"chi_D_line={row['chi_D_line']}",
            file=out,
        )
    return EXIT_OK


# ---------------- parser ----------------
def _add_inputs(p: argparse.ArgumentParser) -> None:
    p.add_argument("graphs", nargs="*", help="graph6 strings (default: read stdin)")
    p.add_argument("--file", help="file with one graph6 string per line")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="python -m src.cli",
        description="Distinguishing chromatic numbers of small graphs: oracles, certificates and bound sweeps.",
    )
    parser.add_argument("--version", action="version", version=SOLVER_VERSION)
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("solve", help="chi_D with witness, or a capped feasibility check")
    _add_inputs(p)
    p.add_argument("--cap", type=int, help="only decide whether K colours suffice")
    p.add_argument("--witness", action="store_true", help="print the colouring as v:colour pairs")
    p.set_defaults(handler=cmd_solve)

    p = sub.add_parser("certify", help="check a colouring file: exit 0 iff proper and distinguishing")
    p.add_argument("graph", help="graph6 string")
    p.add_argument("colouring", help="file with one 'vertex colour' pair per line")
    p.set_defaults(handler=cmd_certify)

    p = sub.add_parser("classify", help="class profile and extremal shapes")
    _add_inputs(p)
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("roots", help="line-graph root (graph6) or not-a-line-graph")
    _add_inputs(p)
    p.set_defaults(handler=cmd_roots)

    p = sub.add_parser("enum", help="connected graphs on N vertices, one graph6 per line")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=cmd_enum)

    p = sub.add_parser("sweep", help="check one catalogue bound on every small connected graph")
    p.add_argument("--theorem", required=True, choices=sorted(THEOREMS))
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--out", help="JSONL report path")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--k", type=int, default=4, help="clique parameter of ClawDiamondKk")
    p.add_argument("--override", action="store_true", help="allow n_max=8")
    p.add_argument("--no-cache", action="store_true")
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser("whitney", help="chi_D(L(H)) == chi'_D(H) over small connected H")
    p.add_argument("--max-edges", "--n-max", dest="max_edges", type=int, default=9)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--no-cache", action="store_true")
    p.set_defaults(handler=cmd_whitney)
    return parser


def main(argv: Optional[Sequence[str]] = None, out: TextIO = sys.stdout, stdin: TextIO = sys.stdin) -> int:
    # CLI:
    #   python -m src.cli solve 'EhEG'
    #   python -m src.cli enum --n 5 | python -m src.cli solve --witness
    #   python -m src.cli certify 'Dhc' colouring.txt
    #   python -m src.cli sweep --theorem CT-2Delta --n-max 6 --out ct.jsonl --jobs 4
    #   python -m src.cli whitney --max-edges 7
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args, out, stdin)
    except (TheoremViolation, CertificationError) as e:
        print(f"[Violation] {e}", file=sys.stderr)
        return EXIT_VIOLATION
    except (CapabilityError, SearchCancelled) as e:
        print(f"[Error] {e}", file=sys.stderr)
        return EXIT_CAPABILITY
    except ContractError as e:
        print(f"[Error] {e}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as e:
        print(f"[Error] {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
