"""Plain-text recovery from PDF, DOCX, and (best-effort) legacy DOC files.

The one property everything downstream depends on: extraction never
normalizes quotes or substitutes characters. Every codepoint in
ExtractedText.text was decoded from the document; undecodable content is
dropped with a warning instead of being replaced.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from ..ingest import DocumentRecord


@dataclass
class ExtractedText:
    """Unicode text recovered from one document."""

    text: str
    paragraph_count: int
    warnings: list[str] = field(default_factory=list)
    source_format: str = ""  # "pdf" | "docx" | "doc"
    all_text_recovered: bool = True


class ExtractError(Exception):
    """Extraction failed for the whole document.

    kind is one of "CorruptContainer", "UnsupportedFeature",
    "EncryptedDocument".
    """

    def __init__(self, kind: str, detail: str) -> None:
        super().__init__(f"{kind}: {detail}")
        self.kind = kind
        self.detail = detail


from .doc import extract_doc  # noqa: E402
from .docx import extract_docx  # noqa: E402
from .pdf import extract_pdf  # noqa: E402

_EXTRACTORS = {"docx": extract_docx, "pdf": extract_pdf, "doc": extract_doc}


def extract(record: "DocumentRecord", data: bytes) -> ExtractedText:
    """Dispatch to the extractor matching the record's extension."""
    try:
        extractor = _EXTRACTORS[record.extension]
    except KeyError:
        raise ValueError(f"no extractor for extension {record.extension!r}") from None
    try:
        return extractor(data)
    except RecursionError:
        raise ExtractError("CorruptContainer", "document structure nested too deeply") from None


__all__ = [
    "ExtractedText",
    "ExtractError",
    "extract",
    "extract_doc",
    "extract_docx",
    "extract_pdf",
]
