"""Command-line entry point: discover, gate, scan in parallel, report.

Exit codes are script-friendly: 0 when no red verdicts, 1 when at least
one document is flagged Unacknowledged, 2 on usage errors, 3 when every
file errored or reports could not be written.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from .detect import DEFAULT_TOOLS, ScanResult, Verdict, load_tools, scan_document
from .ingest import DEFAULT_THRESHOLD, discover_files
from .report import build_table, render_terminal_summary, write_csv, write_xlsx

FORMATS = ("terminal", "csv", "xlsx")
REPORT_BASENAME = "ai_detection_results"


@dataclass
class ScanConfig:
    inputs: list[str]
    recursive: bool = False
    threshold_date: datetime = DEFAULT_THRESHOLD
    naive_match: bool = False
    tools_file: Path | None = None
    out_dir: Path = Path(".")
    formats: frozenset[str] = frozenset(FORMATS)
    jobs: int = field(default_factory=lambda: os.cpu_count() or 1)
    no_color: bool = False


def _date_arg(value: str) -> datetime:
    try:
        return datetime.strptime(value, "%Y-%m-%d").replace(tzinfo=timezone.utc)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected YYYY-MM-DD, got {value!r}") from None


def _formats_arg(value: str) -> frozenset[str]:
    chosen = [item.strip() for item in value.split(",") if item.strip()]
    unknown = [item for item in chosen if item not in FORMATS]
    if unknown or not chosen:
        raise argparse.ArgumentTypeError(
            f"formats must be a comma-separated subset of {','.join(FORMATS)}"
        )
    return frozenset(chosen)


def _jobs_arg(value: str) -> int:
    jobs = int(value)
    if jobs < 1:
        raise argparse.ArgumentTypeError("jobs must be at least 1")
    return jobs


def parse_args(argv: list[str] | None = None) -> ScanConfig:
    parser = argparse.ArgumentParser(
        prog="aitrace",
        description=(
            "Scan student documents (.pdf, .docx, .doc) for potential "
            "generative-AI traces: ASCII straight quotes inside otherwise "
            "typographic text, and in-text mentions of AI tools. Everything "
            "runs locally; no document ever leaves the machine."
        ),
    )
    parser.add_argument("inputs", nargs="+", metavar="PATH", help="files or directories to scan")
    parser.add_argument("-r", "--recursive", action="store_true",
                        help="descend into directories")
    parser.add_argument("--threshold-date", type=_date_arg, default=DEFAULT_THRESHOLD,
                        metavar="YYYY-MM-DD",
                        help="ignore files last modified before this UTC date "
                             "(default 2022-11-22, the ChatGPT release date)")
    parser.add_argument("--naive-match", action="store_true",
                        help="match tool names as bare substrings "
                             "(flags words like 'metaphor'; default uses letter boundaries)")
    parser.add_argument("--tools-file", type=Path, metavar="FILE",
                        help="tool list override, one 'Label = kind:pattern' per line")
    parser.add_argument("--out-dir", type=Path, default=Path("."), metavar="DIR",
                        help="directory for CSV/XLSX reports (default: current directory)")
    parser.add_argument("--formats", type=_formats_arg, default=frozenset(FORMATS),
                        metavar="LIST",
                        help="comma-separated subset of terminal,csv,xlsx (default: all)")
    parser.add_argument("--jobs", type=_jobs_arg, default=os.cpu_count() or 1, metavar="N",
                        help="files scanned concurrently (default: CPU count)")
    parser.add_argument("--no-color", action="store_true",
                        help="disable terminal colors (NO_COLOR is also honored)")
    args = parser.parse_args(argv)
    return ScanConfig(
        inputs=args.inputs,
        recursive=args.recursive,
        threshold_date=args.threshold_date,
        naive_match=args.naive_match,
        tools_file=args.tools_file,
        out_dir=args.out_dir,
        formats=args.formats,
        jobs=args.jobs,
        no_color=args.no_color,
    )


def run_scan(config: ScanConfig) -> int:
    """Scan everything in the config and render/export the results."""
    try:
        tools = load_tools(config.tools_file) if config.tools_file else DEFAULT_TOOLS
    except (OSError, ValueError) as exc:
        print(f"aitrace: error: {exc}", file=sys.stderr)
        return 2

    records, problems = discover_files(config.inputs, config.recursive)
    results: list[ScanResult] = [
        ScanResult(file_name=name, error=error) for name, error in problems
    ]

    def scan_one(record) -> ScanResult:
        # Bytes are read inside the worker, so at most `jobs` documents are
        # held in memory at once.
        return scan_document(
            record,
            threshold=config.threshold_date,
            tools=tools,
            naive=config.naive_match,
        )

    if records:
        with ThreadPoolExecutor(max_workers=config.jobs) as pool:
            results.extend(pool.map(scan_one, records))
    results.sort(key=lambda r: r.file_name)

    if "terminal" in config.formats:
        color = (
            not config.no_color
            and "NO_COLOR" not in os.environ
            and sys.stdout.isatty()
        )
        print(render_terminal_summary(results, color=color))

    if config.formats & {"csv", "xlsx"}:
        stamp = time.strftime("%Y%m%d-%H%M%S")
        base = config.out_dir / f"{REPORT_BASENAME}-{stamp}"
        try:
            config.out_dir.mkdir(parents=True, exist_ok=True)
            table = build_table(results, tools)
            if "csv" in config.formats:
                write_csv(table, base.with_suffix(".csv"))
                print(f"report written: {base.with_suffix('.csv')}", file=sys.stderr)
            if "xlsx" in config.formats:
                write_xlsx(table, base.with_suffix(".xlsx"))
                print(f"report written: {base.with_suffix('.xlsx')}", file=sys.stderr)
        except OSError as exc:
            print(f"aitrace: error: could not write reports: {exc}", file=sys.stderr)
            return 3

    if any(result.verdict is Verdict.UNACKNOWLEDGED for result in results):
        return 1
    if results and all(result.error is not None for result in results):
        return 3
    return 0


def main(argv: list[str] | None = None) -> int:
    return run_scan(parse_args(argv))


if __name__ == "__main__":
    sys.exit(main())
