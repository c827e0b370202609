#!/usr/bin/env python3
"""
Analyze a JSONL sweep report written by `python -m src.cli sweep --out ...`.
"""

import sys
from pathlib import Path
from typing import Optional, TextIO

import pandas as pd

from src.logging_store import read_report
from src.types import SweepRecord
from src.sweep_summary import records_frame, summarize


def analyze_report(report_path: str, out: TextIO = sys.stdout) -> Optional[pd.DataFrame]:
    """Print the analysis of one report; returns the per-graph frame (None if empty)."""
    path = Path(report_path)
    if not path.exists():
        print(f"Error: File not found: {report_path}", file=out)
        return None

    header, rows = read_report(str(path))
    records = []
    for row in rows:
        try:
            records.append(SweepRecord.from_dict(row))
        except TypeError as e:
            print(f"Warning: Skipping invalid record: {e}", file=out)

    theorem = header.get("theorem", "?")
    if not records:
        print(f"No records in {path.name} (theorem {theorem}, n_max {header.get('n_max', '?')}).", file=out)
        return None

    df = records_frame(records)
    df["value"] = [r.extra.get("chi_index", r.chi_D) for r in records]
    df["slack"] = df["bound"] - df["value"]
    df["class_count"] = [sum(1 for v in r.classes.values() if v) for r in records]

    print(f"\n{'=' * 80}", file=out)
    print(f"SWEEP REPORT ANALYSIS: {path.name}", file=out)
    print(f"{'=' * 80}", file=out)
    print(f"\nOVERALL", file=out)
    print(f"  Theorem:               {theorem}", file=out)
    print(f"  Solver version:        {header.get('solver_version', '?')}", file=out)
    print(f"  n_max:                 {header.get('n_max', '?')}", file=out)
    print(f"  Graphs in class:       {len(df)}", file=out)
    print(f"  Attaining the bound:   {int((df['equality'] & ~df['exception']).sum())}", file=out)
    print(f"  Listed exceptions:     {int(df['exception'].sum())}", file=out)
    regular = df[~df["exception"]]
    if not regular.empty:
        print(f"  Average slack:         {regular['slack'].mean():.3f}", file=out)
        print(f"  Max slack:             {int(regular['slack'].max())}", file=out)

    print(f"\nBY ORDER", file=out)
    print(summarize(records).to_string(index=False), file=out)

    print(f"\nBY MAXIMUM DEGREE", file=out)
    by_delta = (
        df.groupby("delta")
        .agg(graphs=("graph6", "count"), equality=("equality", "sum"), min_slack=("slack", "min"))
        .reset_index()
    )
    print(by_delta.to_string(index=False), file=out)

    tight = df[df["equality"] | df["exception"]]
    if not tight.empty:
        print(f"\nTIGHT CASES", file=out)
        print(f"  {'graph6':<16} | {'n':>2} | {'Delta':>5} | {'value':>5} | {'bound':>5} | kind", file=out)
        print(f"  {'-' * 16}-+-{'-' * 2}-+-{'-' * 5}-+-{'-' * 5}-+-{'-' * 5}-+{'-' * 10}", file=out)
        for _, r in tight.iterrows():
            kind = "exception" if r["exception"] else "equality"
            print(
                f"  {r['graph6']:<16} | {r['n']:>2} | {r['delta']:>5} | {r['value']:>5} | {r['bound']:>5} | {kind}",
                file=out,
            )

    print(f"\n{'=' * 80}\n", file=out)
    return df


def main():
    if len(sys.argv) < 2:
        # Find most recent report
        reports_dir = Path("reports")
        if not reports_dir.exists():
            print("Error: reports/ directory not found")
            sys.exit(1)

        reports = list(reports_dir.glob("*.jsonl"))
        if not reports:
            print("Error: No sweep reports found in reports/")
            sys.exit(1)

        report = max(reports, key=lambda p: p.stat().st_mtime)
        print(f"Using most recent report: {report}")
    else:
        report = sys.argv[1]

    analyze_report(str(report))


if __name__ == "__main__":
    main()
