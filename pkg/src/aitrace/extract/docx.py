"""DOCX text extraction.

A .docx file is a ZIP archive; the body lives in word/document.xml as
paragraphs of text runs. Runs are concatenated in document order,
paragraph boundaries become a single newline, tab elements become a tab.
Footnote text (word/footnotes.xml) is included; headers and footers are
not, since pasted prose lands in the body.
"""

from __future__ import annotations

import io
import zipfile
import xml.etree.ElementTree as ET

from . import ExtractError, ExtractedText
from . import ole

_W = "{http://schemas.openxmlformats.org/wordprocessingml/2006/main}"
_SEPARATOR_FOOTNOTES = ("separator", "continuationSeparator")


def _collect_inline(elem: ET.Element, buf: list[str], paragraphs: list[str]) -> None:
    # Whitelist of content-bearing elements; everything else is recursed
    # into so hyperlinks, table cells, and smart-tag wrappers are kept.
    for child in elem:
        tag = child.tag
        if tag == _W + "t":
            buf.append(child.text or "")
        elif tag == _W + "tab":
            buf.append("\t")
        elif tag in (_W + "br", _W + "cr"):
            buf.append("\n")
        elif tag == _W + "p":
            # Paragraph nested inside a run (text box content): emit it as
            # its own paragraph rather than splicing into the current one.
            nested: list[str] = []
            _collect_inline(child, nested, paragraphs)
            paragraphs.append("".join(nested))
        else:
            _collect_inline(child, buf, paragraphs)


def _collect_paragraphs(elem: ET.Element, paragraphs: list[str]) -> None:
    for child in elem:
        if child.tag == _W + "p":
            buf: list[str] = []
            _collect_inline(child, buf, paragraphs)
            paragraphs.append("".join(buf))
        else:
            _collect_paragraphs(child, paragraphs)


def _footnote_paragraphs(xml_bytes: bytes, paragraphs: list[str]) -> None:
    root = ET.fromstring(xml_bytes)
    for note in root:
        if note.tag != _W + "footnote":
            continue
        if note.get(_W + "type") in _SEPARATOR_FOOTNOTES:
            continue
        _collect_paragraphs(note, paragraphs)


# No plausible student document comes close; the cap only exists to stop
# decompression bombs from exhausting memory.
MAX_MEMBER_BYTES = 256 * 2**20


def _read_member(archive: zipfile.ZipFile, name: str) -> bytes:
    # zipfile raises an unenumerable mix of exceptions on malformed input
    # (BadZipFile, zlib.error, ValueError, struct.error, ...), so the net
    # around a member read is deliberately broad
    try:
        if archive.getinfo(name).file_size > MAX_MEMBER_BYTES:
            raise ExtractError("CorruptContainer", f"{name} is implausibly large")
        return archive.read(name)
    except ExtractError:
        raise
    except KeyError:
        raise ExtractError("CorruptContainer", f"{name} missing from archive") from None
    except Exception as exc:
        raise ExtractError(
            "CorruptContainer", f"unreadable archive member {name}: {type(exc).__name__}"
        ) from None


def extract_docx(data: bytes) -> ExtractedText:
    """Extract body and footnote text from a .docx byte sequence."""
    if data[:8] == ole.MAGIC:
        # password-protected OOXML is wrapped in an OLE container
        try:
            names = ole.stream_names(data)
        except ole.OleError:
            names = []
        if "EncryptedPackage" in names or "EncryptionInfo" in names:
            raise ExtractError("EncryptedDocument", "password-protected Office document")
        raise ExtractError("CorruptContainer", "OLE container, not an OOXML archive")
    try:
        archive = zipfile.ZipFile(io.BytesIO(data))
    except Exception:
        raise ExtractError("CorruptContainer", "not a readable ZIP archive") from None
    document = _read_member(archive, "word/document.xml")

    paragraphs: list[str] = []
    try:
        root = ET.fromstring(document)
        _collect_paragraphs(root, paragraphs)
        if "word/footnotes.xml" in archive.namelist():
            _footnote_paragraphs(_read_member(archive, "word/footnotes.xml"), paragraphs)
    except ET.ParseError as exc:
        raise ExtractError("CorruptContainer", f"malformed document XML: {exc}") from None

    return ExtractedText(
        text="\n".join(paragraphs),
        paragraph_count=len(paragraphs),
        warnings=[],
        source_format="docx",
        all_text_recovered=True,
    )
