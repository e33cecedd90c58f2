"""aitrace: offline bulk scanner for potential generative-AI traces.

Scans student documents (.pdf, .docx, best-effort .doc) for character
encoding inconsistencies (ASCII straight quotes mixed into typographic
text) and explicit AI-tool mentions, then reports per-file verdicts as a
color-coded terminal summary plus CSV and XLSX exports.
"""

from .detect import (
    DEFAULT_TOOLS,
    CharCensus,
    ScanResult,
    ToolSpec,
    Verdict,
    census_characters,
    classify,
    count_traces,
    detect_mentions,
    load_tools,
    scan_document,
)
from .extract import ExtractedText, ExtractError, extract, extract_doc, extract_docx, extract_pdf
from .ingest import (
    DEFAULT_THRESHOLD,
    SUPPORTED_EXTENSIONS,
    DocumentRecord,
    GateError,
    discover_files,
    gate_file,
    make_record,
)
from .report import (
    GREEN_FILL,
    GREY_FILL,
    RED_FILL,
    ReportRow,
    ReportTable,
    build_table,
    render_terminal_summary,
    write_csv,
    write_xlsx,
)
from .cli import ScanConfig, main, parse_args, run_scan

__version__ = "0.1.0"

__all__ = [
    "CharCensus",
    "DEFAULT_THRESHOLD",
    "DEFAULT_TOOLS",
    "DocumentRecord",
    "ExtractError",
    "ExtractedText",
    "GREEN_FILL",
    "GREY_FILL",
    "GateError",
    "RED_FILL",
    "ReportRow",
    "ReportTable",
    "ScanConfig",
    "ScanResult",
    "SUPPORTED_EXTENSIONS",
    "ToolSpec",
    "Verdict",
    "build_table",
    "census_characters",
    "classify",
    "count_traces",
    "detect_mentions",
    "discover_files",
    "extract",
    "extract_doc",
    "extract_docx",
    "extract_pdf",
    "gate_file",
    "load_tools",
    "main",
    "make_record",
    "parse_args",
    "render_terminal_summary",
    "run_scan",
    "scan_document",
    "write_csv",
    "write_xlsx",
]
