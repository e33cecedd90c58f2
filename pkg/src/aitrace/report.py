"""Report rendering: color-coded terminal summary, CSV, and native XLSX.

CSV and XLSX carry identical cell text; color is the only difference.
Both outputs are deterministic for a given result set (the XLSX archive
uses a fixed internal timestamp), so repeated scans of the same corpus
are byte-comparable.
"""

from __future__ import annotations

import re
import zipfile
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .detect import DEFAULT_TOOLS, ScanResult, ToolSpec, Verdict

GREEN_FILL = "FFC6EFCE"
RED_FILL = "FFFFC7CE"
GREY_FILL = "FFD9D9D9"

VERDICT_FILLS = {
    Verdict.NO_TRACES: GREEN_FILL,
    Verdict.ACKNOWLEDGED: GREEN_FILL,
    Verdict.UNACKNOWLEDGED: RED_FILL,
    Verdict.ALL_ASCII: GREY_FILL,
}

_SGR = {"green": "\x1b[32m", "red": "\x1b[31m", "grey": "\x1b[90m", "reset": "\x1b[0m"}
_VERDICT_COLOR = {
    Verdict.NO_TRACES: "green",
    Verdict.ACKNOWLEDGED: "green",
    Verdict.UNACKNOWLEDGED: "red",
    Verdict.ALL_ASCII: "grey",
}

# Fixed timestamp inside the XLSX archive; the export file name carries the
# real one.
_ZIP_STAMP = (1980, 1, 1, 0, 0, 0)


@dataclass
class ReportRow:
    cells: list[str]
    verdict: Verdict | None  # None for errored files


@dataclass
class ReportTable:
    columns: list[str]
    rows: list[ReportRow]
    tool_count: int

    @property
    def mention_columns(self) -> range:
        return range(2, 2 + self.tool_count)


def build_table(results: Iterable[ScanResult], tools: Sequence[ToolSpec] = DEFAULT_TOOLS) -> ReportTable:
    """Lay results out as report cells, sorted by file name.

    Errored files keep their row (ERROR: <kind> in the Verdict column) so a
    bulk scan stays auditable; their mention cells are left empty.
    """
    columns = ["File Name", "AI Traces"]
    columns += [f"{tool.label} Mentioned" for tool in tools]
    columns += ["Verdict", "Warnings"]

    rows = []
    for result in sorted(results, key=lambda r: r.file_name):
        if result.error is not None:
            cells = [result.file_name, ""] + [""] * len(tools)
            cells.append(f"ERROR: {result.error.kind}")
            cells.append("; ".join([result.error.detail, *result.warnings]))
            rows.append(ReportRow(cells=cells, verdict=None))
            continue
        mentions = result.mentions or {}
        cells = [result.file_name, str(result.ai_traces)]
        cells += ["Yes" if mentions.get(tool.key) else "No" for tool in tools]
        cells.append(result.verdict.value if result.verdict else "")
        cells.append("; ".join(result.warnings))
        rows.append(ReportRow(cells=cells, verdict=result.verdict))
    return ReportTable(columns=columns, rows=rows, tool_count=len(tools))


# ---------------------------------------------------------------------------
# CSV

def _csv_field(value: str) -> str:
    if any(ch in value for ch in ',"\r\n'):
        return '"' + value.replace('"', '""') + '"'
    return value


def _csv_payload(table: ReportTable) -> bytes:
    lines = [",".join(_csv_field(cell) for cell in table.columns)]
    lines += [",".join(_csv_field(cell) for cell in row.cells) for row in table.rows]
    return ("\r\n".join(lines) + "\r\n").encode("utf-8")


def write_csv(table: ReportTable, out: str | Path) -> int:
    """RFC 4180 output: comma-separated, CRLF line endings, UTF-8, no BOM."""
    payload = _csv_payload(table)
    Path(out).write_bytes(payload)
    return len(payload)


# ---------------------------------------------------------------------------
# XLSX

_CONTENT_TYPES = (
    '<?xml version="1.0" encoding="UTF-8" standalone="yes"?>\n'
    '<Types xmlns="http://schemas.openxmlformats.org/package/2006/content-types">'
    '<Default Extension="rels" ContentType="application/vnd.openxmlformats-package.relationships+xml"/>'
    '<Default Extension="xml" ContentType="application/xml"/>'
    '<Override PartName="/xl/workbook.xml" ContentType="application/vnd.openxmlformats-officedocument.spreadsheetml.sheet.main+xml"/>'
    '<Override PartName="/xl/worksheets/sheet1.xml" ContentType="application/vnd.openxmlformats-officedocument.spreadsheetml.worksheet+xml"/>'
    '<Override PartName="/xl/styles.xml" ContentType="application/vnd.openxmlformats-officedocument.spreadsheetml.styles+xml"/>'
    "</Types>"
)

_ROOT_RELS = (
    '<?xml version="1.0" encoding="UTF-8" standalone="yes"?>\n'
    '<Relationships xmlns="http://schemas.openxmlformats.org/package/2006/relationships">'
    '<Relationship Id="rId1" Type="http://schemas.openxmlformats.org/officeDocument/2006/relationships/officeDocument" Target="xl/workbook.xml"/>'
    "</Relationships>"
)

_WORKBOOK = (
    '<?xml version="1.0" encoding="UTF-8" standalone="yes"?>\n'
    '<workbook xmlns="http://schemas.openxmlformats.org/spreadsheetml/2006/main" '
    'xmlns:r="http://schemas.openxmlformats.org/officeDocument/2006/relationships">'
    '<sheets><sheet name="AI Detection" sheetId="1" r:id="rId1"/></sheets>'
    "</workbook>"
)

_WORKBOOK_RELS = (
    '<?xml version="1.0" encoding="UTF-8" standalone="yes"?>\n'
    '<Relationships xmlns="http://schemas.openxmlformats.org/package/2006/relationships">'
    '<Relationship Id="rId1" Type="http://schemas.openxmlformats.org/officeDocument/2006/relationships/worksheet" Target="worksheets/sheet1.xml"/>'
    '<Relationship Id="rId2" Type="http://schemas.openxmlformats.org/officeDocument/2006/relationships/styles" Target="styles.xml"/>'
    "</Relationships>"
)

# cellXfs: 0 default, 1 bold header, 2 green fill, 3 red fill, 4 grey fill
_STYLES = (
    '<?xml version="1.0" encoding="UTF-8" standalone="yes"?>\n'
    '<styleSheet xmlns="http://schemas.openxmlformats.org/spreadsheetml/2006/main">'
    "<fonts count=\"2\">"
    '<font><sz val="11"/><name val="Calibri"/></font>'
    '<font><b/><sz val="11"/><name val="Calibri"/></font>'
    "</fonts>"
    "<fills count=\"5\">"
    '<fill><patternFill patternType="none"/></fill>'
    '<fill><patternFill patternType="gray125"/></fill>'
    f'<fill><patternFill patternType="solid"><fgColor rgb="{GREEN_FILL}"/></patternFill></fill>'
    f'<fill><patternFill patternType="solid"><fgColor rgb="{RED_FILL}"/></patternFill></fill>'
    f'<fill><patternFill patternType="solid"><fgColor rgb="{GREY_FILL}"/></patternFill></fill>'
    "</fills>"
    '<borders count="1"><border/></borders>'
    '<cellStyleXfs count="1"><xf numFmtId="0" fontId="0" fillId="0" borderId="0"/></cellStyleXfs>'
    "<cellXfs count=\"5\">"
    '<xf numFmtId="0" fontId="0" fillId="0" borderId="0" xfId="0"/>'
    '<xf numFmtId="0" fontId="1" fillId="0" borderId="0" xfId="0" applyFont="1"/>'
    '<xf numFmtId="0" fontId="0" fillId="2" borderId="0" xfId="0" applyFill="1"/>'
    '<xf numFmtId="0" fontId="0" fillId="3" borderId="0" xfId="0" applyFill="1"/>'
    '<xf numFmtId="0" fontId="0" fillId="4" borderId="0" xfId="0" applyFill="1"/>'
    "</cellXfs>"
    '<cellStyles count="1"><cellStyle name="Normal" xfId="0" builtinId="0"/></cellStyles>'
    "</styleSheet>"
)

_FILL_STYLE_IDS = {GREEN_FILL: 2, RED_FILL: 3, GREY_FILL: 4}


def column_letter(index: int) -> str:
    """0-based column index to spreadsheet letters (0 -> A, 26 -> AA)."""
    letters = ""
    index += 1
    while index > 0:
        index, rem = divmod(index - 1, 26)
        letters = chr(65 + rem) + letters
    return letters


_XML_ILLEGAL = re.compile("[\x00-\x08\x0b\x0c\x0e-\x1f]")


def _xml_escape(text: str) -> str:
    # control characters are illegal in XML 1.0; they can only come from
    # pathological file names, so dropping them is safe
    text = _XML_ILLEGAL.sub("", text)
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def _string_cell(ref: str, text: str, style: int) -> str:
    style_attr = f' s="{style}"' if style else ""
    space = ' xml:space="preserve"' if text != text.strip() else ""
    return f'<c r="{ref}"{style_attr} t="inlineStr"><is><t{space}>{_xml_escape(text)}</t></is></c>'


def _number_cell(ref: str, text: str) -> str:
    return f'<c r="{ref}"><v>{text}</v></c>'


def _sheet_xml(table: ReportTable) -> str:
    n_cols = len(table.columns)
    n_rows = len(table.rows) + 1
    last_ref = f"{column_letter(n_cols - 1)}{n_rows}"
    parts = [
        '<?xml version="1.0" encoding="UTF-8" standalone="yes"?>\n'
        '<worksheet xmlns="http://schemas.openxmlformats.org/spreadsheetml/2006/main">',
        f'<dimension ref="A1:{last_ref}"/>',
        '<cols><col min="1" max="1" width="36" customWidth="1"/></cols>',
        "<sheetData>",
    ]
    header = "".join(
        _string_cell(f"{column_letter(c)}1", label, style=1)
        for c, label in enumerate(table.columns)
    )
    parts.append(f'<row r="1">{header}</row>')

    mention_cols = table.mention_columns
    for r, row in enumerate(table.rows, start=2):
        cells = []
        for c, text in enumerate(row.cells):
            if text == "":
                continue
            ref = f"{column_letter(c)}{r}"
            if c == 0:
                fill = VERDICT_FILLS.get(row.verdict) if row.verdict else None
                cells.append(_string_cell(ref, text, _FILL_STYLE_IDS.get(fill, 0) if fill else 0))
            elif c == 1:
                # numeric so spreadsheet sorting and filtering work
                cells.append(_number_cell(ref, text))
            elif c in mention_cols:
                style = _FILL_STYLE_IDS[GREEN_FILL] if text == "Yes" else _FILL_STYLE_IDS[RED_FILL]
                cells.append(_string_cell(ref, text, style))
            else:
                cells.append(_string_cell(ref, text, 0))
        parts.append(f'<row r="{r}">{"".join(cells)}</row>')

    parts.append("</sheetData>")
    parts.append(f'<autoFilter ref="A1:{last_ref}"/>')
    parts.append("</worksheet>")
    return "".join(parts)


def write_xlsx(table: ReportTable, out: str | Path) -> int:
    """Write the table as a minimal OOXML spreadsheet with inline strings.

    Verdict coloring fills the File Name cell (green, red, or grey); Yes/No
    mention cells get green/red fills. Archive entries carry a fixed
    timestamp so identical tables produce byte-identical files.
    """
    members = [
        ("[Content_Types].xml", _CONTENT_TYPES),
        ("_rels/.rels", _ROOT_RELS),
        ("xl/workbook.xml", _WORKBOOK),
        ("xl/_rels/workbook.xml.rels", _WORKBOOK_RELS),
        ("xl/styles.xml", _STYLES),
        ("xl/worksheets/sheet1.xml", _sheet_xml(table)),
    ]
    with open(out, "wb") as handle:
        with zipfile.ZipFile(handle, "w", zipfile.ZIP_DEFLATED) as archive:
            for name, payload in members:
                info = zipfile.ZipInfo(name, date_time=_ZIP_STAMP)
                info.compress_type = zipfile.ZIP_DEFLATED
                info.external_attr = 0o644 << 16
                archive.writestr(info, payload.encode("utf-8"))
        return handle.tell()


# ---------------------------------------------------------------------------
# Terminal

def render_terminal_summary(results: Sequence[ScanResult], color: bool = False) -> str:
    """One line per file plus a final tally.

    With color=True verdict tags get standard terminal color sequences
    (green, red, grey); otherwise the output is plain text.
    """

    def paint(tag: str, hue: str) -> str:
        padded = f"{tag:<14}"
        if not color:
            return padded
        return f"{_SGR[hue]}{padded}{_SGR['reset']}"

    lines = []
    tally = {"red": 0, "green": 0, "ambiguous": 0, "errors": 0}
    for result in sorted(results, key=lambda r: r.file_name):
        if result.error is not None:
            tally["errors"] += 1
            lines.append(
                f"{paint('ERROR', 'red')}  {result.file_name}  "
                f"{result.error.kind}: {result.error.detail}"
            )
            continue
        hue = _VERDICT_COLOR[result.verdict]
        tally["red" if hue == "red" else "ambiguous" if hue == "grey" else "green"] += 1
        line = f"{paint(result.verdict.value, hue)}  {result.file_name}  traces={result.ai_traces}"
        mentioned = [key for key, hit in (result.mentions or {}).items() if hit]
        if mentioned:
            line += f"  mentions: {', '.join(mentioned)}"
        lines.append(line)
    lines.append(
        f"{len(results)} scanned, {tally['red']} red, {tally['green']} green, "
        f"{tally['ambiguous']} ambiguous, {tally['errors']} errors"
    )
    return "\n".join(lines)
