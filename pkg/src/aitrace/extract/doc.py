"""Best-effort text recovery from legacy binary .doc files.

Instead of implementing the Word binary format (FIB, piece tables, and the
rest), this locates the WordDocument stream inside the OLE container and
pulls out maximal printable runs of UTF-16LE or CP-1252 text. Good enough
to census quote characters and spot tool mentions; never claimed complete,
so results always carry a warning and all_text_recovered=False.
"""

from __future__ import annotations

from . import ExtractError, ExtractedText
from . import ole

_MIN_RUN_CHARS = 8
_LEGACY_WARNING = "legacy .doc best-effort extraction; text may be incomplete"

# CP-1252 leaves five byte values undefined.
_CP1252_HOLES = frozenset((0x81, 0x8D, 0x8F, 0x90, 0x9D))


def _u16_printable(cp: int) -> bool:
    # Latin letters plus general punctuation. Codepoints from 0x3000 up are
    # rejected: runs of plain 8-bit text misread as UTF-16 land in the CJK
    # blocks, and that is by far the more likely reading for student essays.
    if cp in (0x09, 0x0A, 0x0D):
        return True
    return 0x20 <= cp <= 0x7E or 0xA0 <= cp < 0x3000


def _byte_printable(b: int) -> bool:
    if b in (0x09, 0x0A, 0x0D):
        return True
    if 0x20 <= b <= 0x7E:
        return True
    return b >= 0x80 and b not in _CP1252_HOLES


def _utf16_run(data: bytes, start: int) -> str:
    chars: list[str] = []
    i = start
    while i + 1 < len(data):
        cp = data[i] | (data[i + 1] << 8)
        if not _u16_printable(cp):
            break
        chars.append(chr(cp))
        i += 2
    return "".join(chars)


def _cp1252_run(data: bytes, start: int) -> str:
    i = start
    while i < len(data) and _byte_printable(data[i]):
        i += 1
    return data[start:i].decode("cp1252")


def _printable_runs(data: bytes) -> list[str]:
    runs: list[str] = []
    i = 0
    n = len(data)
    while i < n:
        run = _utf16_run(data, i)
        if len(run) >= _MIN_RUN_CHARS:
            runs.append(run)
            i += 2 * len(run)
            continue
        run = _cp1252_run(data, i)
        if len(run) >= _MIN_RUN_CHARS:
            runs.append(run)
            i += len(run)
            continue
        i += 1
    return [r.replace("\r\n", "\n").replace("\r", "\n") for r in runs]


def extract_doc(data: bytes) -> ExtractedText:
    """Recover whatever printable text the WordDocument stream yields."""
    if data[:8] != ole.MAGIC:
        raise ExtractError("CorruptContainer", "not an OLE compound file")

    warnings = [_LEGACY_WARNING]
    runs: list[str] = []
    try:
        streams = ole.read_streams(data)
    except ole.OleError as exc:
        warnings.append(f"damaged OLE container: {exc}")
        streams = {}

    if streams:
        word_stream = streams.get("WordDocument")
        if word_stream is None:
            warnings.append("WordDocument stream not found")
        else:
            runs = _printable_runs(word_stream)

    return ExtractedText(
        text="\n".join(runs),
        paragraph_count=len(runs),
        warnings=warnings,
        source_format="doc",
        all_text_recovered=False,
    )
