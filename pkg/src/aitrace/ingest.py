"""File discovery and the pre-scan gates (extension and last-modified date).

Nothing in this module opens file contents; gating looks only at the file
name and filesystem metadata.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Iterable

SUPPORTED_EXTENSIONS = ("pdf", "docx", "doc")

# ChatGPT became publicly available on 2022-11-22; anything last modified
# before that day cannot contain pasted chatbot output. The day itself passes.
DEFAULT_THRESHOLD = datetime(2022, 11, 22, tzinfo=timezone.utc)

UNSUPPORTED_EXTENSION_MESSAGE = "Only PDF and Word files (.docx and .doc) are supported."


@dataclass(frozen=True)
class DocumentRecord:
    """A discovered candidate file, before any gating or parsing."""

    path: Path
    file_name: str
    extension: str  # lowercased final dot-suffix of file_name, "" if none
    last_modified: datetime  # UTC, truncated to whole seconds


@dataclass(frozen=True)
class GateError:
    """Why a file was not scanned.

    kind is one of "UnsupportedExtension", "PreChatGPTDate", "Unreadable".
    """

    kind: str
    detail: str


def _extension(file_name: str) -> str:
    _, sep, suffix = file_name.rpartition(".")
    return suffix.lower() if sep else ""


def make_record(path: Path) -> DocumentRecord:
    """Build a DocumentRecord from filesystem metadata. May raise OSError."""
    # st_mtime_ns avoids float rounding right at the threshold boundary
    mtime = path.stat().st_mtime_ns // 1_000_000_000
    return DocumentRecord(
        path=path,
        file_name=path.name,
        extension=_extension(path.name),
        last_modified=datetime.fromtimestamp(mtime, tz=timezone.utc),
    )


def discover_files(
    inputs: Iterable[str | Path], recursive: bool = False
) -> tuple[list[DocumentRecord], list[tuple[str, GateError]]]:
    """Expand the input paths into candidate records.

    Directories are walked only when recursive=True; passing a directory
    without it produces an Unreadable entry instead of silently skipping.
    Problems never abort discovery: each inaccessible entry becomes a
    (display name, GateError) pair alongside the usable records.

    Records are deduplicated on resolved path and sorted lexicographically
    by path, so the result does not depend on input order.
    """
    records: list[DocumentRecord] = []
    problems: list[tuple[str, GateError]] = []
    seen: set[str] = set()

    def add_file(path: Path) -> None:
        try:
            key = os.path.realpath(path)
            if key in seen:
                return
            record = make_record(path)
        except OSError as exc:
            problems.append((path.name, GateError("Unreadable", f"{path}: {exc.strerror or exc}")))
            return
        seen.add(key)
        records.append(record)

    for raw in inputs:
        path = Path(raw)
        if path.is_dir():
            if not recursive:
                problems.append(
                    (path.name or str(path),
                     GateError("Unreadable", f"{path}: is a directory (rerun with --recursive to scan it)"))
                )
                continue
            walk_errors: list[OSError] = []
            for dirpath, _dirnames, filenames in os.walk(path, onerror=walk_errors.append):
                for name in filenames:
                    candidate = Path(dirpath) / name
                    if candidate.is_file():
                        add_file(candidate)
            for exc in walk_errors:
                bad = Path(exc.filename or str(path))
                problems.append((bad.name, GateError("Unreadable", f"{bad}: {exc.strerror or exc}")))
        elif path.is_file():
            add_file(path)
        elif path.exists():
            problems.append((path.name, GateError("Unreadable", f"{path}: not a regular file")))
        else:
            problems.append((path.name, GateError("Unreadable", f"{path}: no such file or directory")))

    records.sort(key=lambda r: str(r.path))
    return records, problems


def gate_file(record: DocumentRecord, threshold: datetime = DEFAULT_THRESHOLD) -> GateError | None:
    """Return None when the record may be scanned, else the blocking GateError.

    The extension check runs first so unsupported formats never report a
    misleading date error. The date comparison is inclusive: a file stamped
    exactly at the threshold passes.
    """
    if record.extension not in SUPPORTED_EXTENSIONS:
        return GateError("UnsupportedExtension", UNSUPPORTED_EXTENSION_MESSAGE)
    if record.last_modified < threshold:
        return GateError(
            "PreChatGPTDate",
            f"last modified {record.last_modified:%Y-%m-%d}, before the "
            f"{threshold:%Y-%m-%d} cutoff (pre-ChatGPT documents are ignored)",
        )
    return None
