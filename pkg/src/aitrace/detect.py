"""Encoding census, AI-tool mention matching, and per-document verdicts.

The signal is transparent by design. Word processors substitute
typographic ("curly") quotes as people type, while text pasted out of a
chatbot window usually keeps ASCII straight quotes. Straight quotes are
therefore counted as potential AI traces; a document that mixes straight
and curly quotes is the red-flag condition, and an in-text mention of an
AI tool counts as acknowledgment. A document with straight quotes but no
curly ones at all is ambiguous: it may simply have been written in a
plain-text editor.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Mapping, Sequence

from .extract import ExtractError, extract
from .ingest import DEFAULT_THRESHOLD, DocumentRecord, GateError, gate_file

AUX_KEYS = ("em_dash", "en_dash", "ellipsis", "nbsp")

_ASCII_DOUBLE = re.compile("\u0022")
_ASCII_SINGLE = re.compile("\u0027")
_CURLY_DOUBLE = re.compile("[\u201c\u201d]")
_CURLY_SINGLE = re.compile("[\u2018\u2019]")
_AUX_PATTERNS = {
    "em_dash": re.compile("\u2014"),
    "en_dash": re.compile("\u2013"),
    "ellipsis": re.compile("\u2026"),
    "nbsp": re.compile("\u00a0"),
}

# Mention boundaries are letters only, so "ChatGPT4" still matches while
# "metaphor" does not. [^\W\d_] is the Unicode letter class.
_NOT_AFTER_LETTER = r"(?<![^\W\d_])"
_NOT_BEFORE_LETTER = r"(?![^\W\d_])"


@dataclass
class CharCensus:
    """Counts of the tracked codepoints in one piece of text."""

    ascii_double: int = 0  # U+0022
    ascii_single: int = 0  # U+0027
    curly_double: int = 0  # U+201C + U+201D
    curly_single: int = 0  # U+2018 + U+2019
    aux_punct: dict[str, int] = field(default_factory=lambda: dict.fromkeys(AUX_KEYS, 0))

    @property
    def ascii_total(self) -> int:
        return self.ascii_double + self.ascii_single

    @property
    def curly_total(self) -> int:
        return self.curly_double + self.curly_single

    def __add__(self, other: "CharCensus") -> "CharCensus":
        return CharCensus(
            self.ascii_double + other.ascii_double,
            self.ascii_single + other.ascii_single,
            self.curly_double + other.curly_double,
            self.curly_single + other.curly_single,
            {key: self.aux_punct[key] + other.aux_punct[key] for key in AUX_KEYS},
        )


class Verdict(enum.Enum):
    NO_TRACES = "NoTraces"  # green
    ACKNOWLEDGED = "Acknowledged"  # green
    UNACKNOWLEDGED = "Unacknowledged"  # red
    ALL_ASCII = "AllAscii"  # grey: no curly text to compare against


@dataclass(frozen=True)
class ToolSpec:
    """One configurable AI tool to look for.

    kind "word": pattern is one or more alternatives separated by "|";
    whitespace inside an alternative matches an optional whitespace run,
    and in default (non-naive) mode the whole match must not touch
    adjacent letters. kind "regex": pattern is used verbatim,
    case-insensitively, in both modes.
    """

    key: str
    label: str
    kind: str = "word"
    pattern: str = ""


DEFAULT_TOOLS: tuple[ToolSpec, ...] = (
    ToolSpec("chatgpt", "ChatGPT", "word", "chat gpt"),
    ToolSpec("grammarly", "Grammarly", "word", "grammarly"),
    ToolSpec("claude", "Claude", "word", "claude"),
    ToolSpec("gemini", "Gemini", "word", "gemini"),
    ToolSpec("llama_meta", "Llama/Meta", "word", "llama|meta"),
    ToolSpec("copilot", "Copilot", "word", "copilot"),
    ToolSpec("grok", "Grok", "word", "grok"),
    ToolSpec("deepseek", "DeepSeek", "word", "deepseek"),
)

MentionFlags = dict  # tool key -> bool, in configuration order


@dataclass
class ScanResult:
    """One report row: either a verdict or the error that prevented one."""

    file_name: str
    ai_traces: int | None = None
    mentions: dict[str, bool] | None = None
    verdict: Verdict | None = None
    error: GateError | ExtractError | None = None
    warnings: list[str] = field(default_factory=list)


def census_characters(text: str) -> CharCensus:
    """Exact per-category codepoint counts; no locale dependence."""
    return CharCensus(
        ascii_double=len(_ASCII_DOUBLE.findall(text)),
        ascii_single=len(_ASCII_SINGLE.findall(text)),
        curly_double=len(_CURLY_DOUBLE.findall(text)),
        curly_single=len(_CURLY_SINGLE.findall(text)),
        aux_punct={key: len(pat.findall(text)) for key, pat in _AUX_PATTERNS.items()},
    )


def count_traces(census: CharCensus) -> int:
    """The reported trace count: ASCII straight quotes and apostrophes only.

    Curly characters and auxiliary punctuation never count; the auxiliary
    census is surfaced through warnings instead.
    """
    return census.ascii_double + census.ascii_single


def _word_pattern(pattern: str) -> str:
    alternatives = []
    for alt in pattern.split("|"):
        tokens = alt.split()
        if tokens:
            alternatives.append(r"\s*".join(re.escape(token) for token in tokens))
    return "|".join(alternatives)


@lru_cache(maxsize=64)
def _compiled(tools: tuple[ToolSpec, ...], naive: bool) -> tuple[tuple[str, re.Pattern], ...]:
    compiled = []
    for tool in tools:
        if tool.kind == "regex":
            body = tool.pattern
        else:
            body = _word_pattern(tool.pattern)
            if not naive:
                body = f"{_NOT_AFTER_LETTER}(?:{body}){_NOT_BEFORE_LETTER}"
        compiled.append((tool.key, re.compile(body, re.IGNORECASE)))
    return tuple(compiled)


def detect_mentions(
    text: str, tools: Sequence[ToolSpec] = DEFAULT_TOOLS, naive: bool = False
) -> dict[str, bool]:
    """Case-insensitive mention flags, keyed and ordered by the tool set.

    naive=True drops the letter-boundary rule and matches bare substrings,
    which also flags words like "metaphor" (via meta).
    """
    return {
        key: pattern.search(text) is not None
        for key, pattern in _compiled(tuple(tools), naive)
    }


def classify(census: CharCensus, mentions: Mapping[str, bool]) -> Verdict:
    """Apply the verdict rules in order.

    No ASCII quotes at all means nothing to flag. ASCII quotes without any
    curly ones is ambiguous regardless of mentions (there is no
    human-formatted text to compare against, so acknowledgment cannot
    upgrade it). Otherwise the document mixes encodings and the verdict
    hinges on whether any tool was mentioned.
    """
    if census.ascii_total == 0:
        return Verdict.NO_TRACES
    if census.curly_total == 0:
        return Verdict.ALL_ASCII
    if any(mentions.values()):
        return Verdict.ACKNOWLEDGED
    return Verdict.UNACKNOWLEDGED


def _aux_warning(census: CharCensus) -> str | None:
    present = [(key, census.aux_punct[key]) for key in AUX_KEYS if census.aux_punct.get(key)]
    if not present:
        return None
    return "non-ASCII punctuation present: " + ", ".join(f"{k}={v}" for k, v in present)


def scan_document(
    record: DocumentRecord,
    data: bytes | None = None,
    *,
    threshold=DEFAULT_THRESHOLD,
    tools: Sequence[ToolSpec] = DEFAULT_TOOLS,
    naive: bool = False,
) -> ScanResult:
    """Run the full pipeline for one file: gate, extract, census, classify.

    Errors are embedded in the result, never raised. When data is None the
    file is read from record.path only after the gates pass.
    """
    gate_error = gate_file(record, threshold)
    if gate_error is not None:
        return ScanResult(file_name=record.file_name, error=gate_error)
    if data is None:
        try:
            data = record.path.read_bytes()
        except OSError as exc:
            return ScanResult(
                file_name=record.file_name,
                error=GateError("Unreadable", f"{record.path}: {exc.strerror or exc}"),
            )
    try:
        extracted = extract(record, data)
    except ExtractError as exc:
        return ScanResult(file_name=record.file_name, error=exc)
    except Exception as exc:  # hostile input must never abort a bulk scan
        wrapped = ExtractError(
            "CorruptContainer", f"unexpected extraction failure: {type(exc).__name__}: {exc}"
        )
        return ScanResult(file_name=record.file_name, error=wrapped)

    census = census_characters(extracted.text)
    mentions = detect_mentions(extracted.text, tools, naive=naive)
    warnings = list(extracted.warnings)
    aux_note = _aux_warning(census)
    if aux_note:
        warnings.append(aux_note)
    return ScanResult(
        file_name=record.file_name,
        ai_traces=count_traces(census),
        mentions=mentions,
        verdict=classify(census, mentions),
        warnings=warnings,
    )


def _tool_key(label: str) -> str:
    key = re.sub(r"[^a-z0-9]+", "_", label.lower()).strip("_")
    if not key:
        raise ValueError(f"cannot derive a key from tool label {label!r}")
    return key


def load_tools(path: str | Path) -> tuple[ToolSpec, ...]:
    """Read a tool set from a plain-text config file.

    One tool per line: ``column_label = pattern_kind:pattern`` where
    pattern_kind is ``word`` or ``regex``. Blank lines and lines starting
    with ``#`` are skipped. Line order fixes report column order.
    """
    tools: list[ToolSpec] = []
    seen: set[str] = set()
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        label, sep, rhs = line.partition("=")
        if not sep:
            raise ValueError(f"{path}:{lineno}: expected 'label = kind:pattern'")
        kind, sep, pattern = rhs.strip().partition(":")
        kind = kind.strip()
        pattern = pattern.strip()
        if not sep or kind not in ("word", "regex") or not pattern:
            raise ValueError(f"{path}:{lineno}: pattern must be 'word:...' or 'regex:...'")
        if kind == "regex":
            try:
                re.compile(pattern)
            except re.error as exc:
                raise ValueError(f"{path}:{lineno}: bad regex: {exc}") from None
        label = label.strip()
        key = _tool_key(label)
        if key in seen:
            raise ValueError(f"{path}:{lineno}: duplicate tool {label!r}")
        seen.add(key)
        tools.append(ToolSpec(key=key, label=label, kind=kind, pattern=pattern))
    if not tools:
        raise ValueError(f"{path}: no tools defined")
    return tuple(tools)
