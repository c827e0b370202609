from __future__ import annotations
from typing import Any, Dict, List, Sequence, TextIO
import sys

import pandas as pd

from .types import SweepRecord


def records_frame(records: Sequence[SweepRecord]) -> pd.DataFrame:
    """One row per record with the scalar fields only."""
    rows = [
        {
            "graph6": r.graph6,
            "n": r.n,
            "delta": r.delta,
            "chi": r.chi,
            "chi_D": r.chi_D,
            "bound": r.bound,
            "holds": r.holds,
            "equality": r.equality,
            "exception": r.exception,
            "constructive_colours": r.constructive_colours,
        }
        for r in records
    ]
    columns = ["graph6", "n", "delta", "chi", "chi_D", "bound", "holds", "equality", "exception", "constructive_colours"]
    return pd.DataFrame(rows, columns=columns)


def summarize(records: Sequence[SweepRecord]) -> pd.DataFrame:
    """
    Per-n table: graphs in class, how many attain the bound, exception hits and
    the largest constructive colour count (NaN when nothing was constructed).
    """
    df = records_frame(records)
    if df.empty:
        return pd.DataFrame(columns=["n", "graphs", "equality", "exceptions", "max_constructive"])
    df["constructive_colours"] = pd.to_numeric(df["constructive_colours"], errors="coerce")
    table = (
        df.groupby("n")
        .agg(
            graphs=("graph6", "count"),
            equality=("equality", "sum"),
            exceptions=("exception", "sum"),
            max_constructive=("constructive_colours", "max"),
        )
        .reset_index()
    )
    table["equality"] = table["equality"].astype(int)
    table["exceptions"] = table["exceptions"].astype(int)
    return table


def equality_cases(records: Sequence[SweepRecord]) -> List[str]:
    return [r.graph6 for r in records if r.equality and not r.exception]


def exception_cases(records: Sequence[SweepRecord]) -> List[str]:
    return [r.graph6 for r in records if r.exception]


def summary_stats(records: Sequence[SweepRecord]) -> Dict[str, Any]:
    if not records:
        return {}
    constructive = [r.constructive_colours for r in records if r.constructive_colours is not None]
    # chi_index replaces chi_D for edge-colouring sweeps
    slack = [r.bound - r.extra.get("chi_index", r.chi_D) for r in records if not r.exception]
    return {
        "count": len(records),
        "equality": len(equality_cases(records)),
        "exceptions": len(exception_cases(records)),
        "max_gap": max(slack, default=0),
        "max_constructive": max(constructive) if constructive else None,
    }


def print_summary(theorem_id: str, records: Sequence[SweepRecord], out: TextIO = sys.stderr) -> None:
    """Human summary of a sweep; goes to stderr so stdout stays parseable."""
    stats = summary_stats(records)
    if not stats:
        print(f"[Sweep] {theorem_id}: no graphs in class.", file=out)
        return

    print(f"\n{'=' * 60}", file=out)
    print(f"SWEEP SUMMARY: {theorem_id}", file=out)
    print(f"{'=' * 60}", file=out)
    print(summarize(records).to_string(index=False), file=out)
    print(f"Graphs in class:       {stats['count']}", file=out)
    print(f"Attaining the bound:   {stats['equality']}", file=out)
    print(f"Listed exceptions:     {stats['exceptions']}", file=out)
    print(f"Largest slack:         {stats['max_gap']}", file=out)
    if stats["max_constructive"] is not None:
        print(f"Max constructive:      {stats['max_constructive']}", file=out)
    eq = equality_cases(records)
    if eq:
        print(f"Equality cases:        {' '.join(eq)}", file=out)
    ex = exception_cases(records)
    if ex:
        print(f"Exceptions:            {' '.join(ex)}", file=out)
    print(f"{'=' * 60}\n", file=out)
