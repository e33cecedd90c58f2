"""Fixture generators for the test suite.

Everything here is written independently of the package under test: the
DOCX builder emits OOXML by hand, the PDF builder writes objects and
cross-reference data directly, and the OLE builder lays out sectors from
the container spec. Each generator plants known text, so planted
character counts serve as the oracle for extraction fidelity.
"""

from __future__ import annotations

import io
import struct
import zipfile
import zlib
from xml.sax.saxutils import escape as xml_escape

# ---------------------------------------------------------------------------
# DOCX

_DOCX_CONTENT_TYPES = """<?xml version="1.0" encoding="UTF-8" standalone="yes"?>
<Types xmlns="http://schemas.openxmlformats.org/package/2006/content-types">
<Default Extension="rels" ContentType="application/vnd.openxmlformats-package.relationships+xml"/>
<Default Extension="xml" ContentType="application/xml"/>
<Override PartName="/word/document.xml" ContentType="application/vnd.openxmlformats-officedocument.wordprocessingml.document.main+xml"/>
<Override PartName="/word/footnotes.xml" ContentType="application/vnd.openxmlformats-officedocument.wordprocessingml.footnotes+xml"/>
</Types>"""

_DOCX_RELS = """<?xml version="1.0" encoding="UTF-8" standalone="yes"?>
<Relationships xmlns="http://schemas.openxmlformats.org/package/2006/relationships">
<Relationship Id="rId1" Type="http://schemas.openxmlformats.org/officeDocument/2006/relationships/officeDocument" Target="word/document.xml"/>
</Relationships>"""

_W = 'xmlns:w="http://schemas.openxmlformats.org/wordprocessingml/2006/main"'


def _docx_paragraph(text: str) -> str:
    return f'<w:p><w:r><w:t xml:space="preserve">{xml_escape(text)}</w:t></w:r></w:p>'


def make_docx_from_body(body_xml: str, footnotes_xml: str | None = None) -> bytes:
    """Assemble a .docx archive around a hand-written body."""
    document = (
        '<?xml version="1.0" encoding="UTF-8" standalone="yes"?>'
        f"<w:document {_W}><w:body>{body_xml}</w:body></w:document>"
    )
    buffer = io.BytesIO()
    with zipfile.ZipFile(buffer, "w", zipfile.ZIP_DEFLATED) as archive:
        archive.writestr("[Content_Types].xml", _DOCX_CONTENT_TYPES)
        archive.writestr("_rels/.rels", _DOCX_RELS)
        archive.writestr("word/document.xml", document)
        if footnotes_xml is not None:
            archive.writestr("word/footnotes.xml", footnotes_xml)
    return buffer.getvalue()


def make_docx(paragraphs: list[str], footnotes: list[str] | None = None) -> bytes:
    """A minimal valid .docx with one text run per paragraph."""
    body = "".join(_docx_paragraph(p) for p in paragraphs)
    footnotes_xml = None
    if footnotes is not None:
        notes = [
            '<w:footnote w:type="separator" w:id="-1"><w:p><w:r><w:separator/></w:r></w:p></w:footnote>',
            '<w:footnote w:type="continuationSeparator" w:id="0">'
            "<w:p><w:r><w:continuationSeparator/></w:r></w:p></w:footnote>",
        ]
        notes += [
            f'<w:footnote w:id="{i + 1}">{_docx_paragraph(text)}</w:footnote>'
            for i, text in enumerate(footnotes)
        ]
        footnotes_xml = (
            '<?xml version="1.0" encoding="UTF-8" standalone="yes"?>'
            f"<w:footnotes {_W}>{''.join(notes)}</w:footnotes>"
        )
    return make_docx_from_body(body, footnotes_xml)


# ---------------------------------------------------------------------------
# PDF

# Reverse StandardEncoding for the characters fixtures use. Note the curly
# quotes down in ASCII space and the straight apostrophe at 0xA9.
_STANDARD_REVERSE = {c: ord(c) for c in
                     "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz"
                     "0123456789 .,:;!?()-+=/*#$%&@[]_{}|~<>"}
_STANDARD_REVERSE.update({
    "\u0022": 0x22,
    "\u2019": 0x27,
    "\u2018": 0x60,
    "\u0027": 0xA9,
    "\u201c": 0xAA,
    "\u201d": 0xBA,
    "\u2013": 0xB1,
    "\u2026": 0xBC,
    "\u2014": 0xD0,
})


def _pdf_string(raw: bytes) -> bytes:
    escaped = raw.replace(b"\\", b"\\\\").replace(b"(", b"\\(").replace(b")", b"\\)")
    return b"(" + escaped + b")"


def _encode_line(line: str, encoding: str, charmap: dict[str, int] | None) -> bytes:
    if encoding == "winansi":
        return line.encode("cp1252")
    if encoding == "standard":
        try:
            return bytes(_STANDARD_REVERSE[ch] for ch in line)
        except KeyError as exc:
            raise ValueError(f"character {exc} not in the standard-encoding fixture table") from None
    if encoding in ("tounicode", "type0"):
        assert charmap is not None
        width = 2 if encoding == "type0" else 1
        return b"".join(charmap[ch].to_bytes(width, "big") for ch in line)
    raise ValueError(f"unknown fixture encoding {encoding!r}")


def _tounicode_cmap(charmap: dict[str, int], width: int) -> bytes:
    hexw = width * 2
    top = (1 << (8 * width)) - 1
    lines = [
        "/CIDInit /ProcSet findresource begin",
        "12 dict begin",
        "begincmap",
        "/CMapName /FixtureMap def",
        "/CMapType 2 def",
        "1 begincodespacerange",
        f"<{0:0{hexw}X}> <{top:0{hexw}X}>",
        "endcodespacerange",
        f"{len(charmap)} beginbfchar",
    ]
    for ch, code in sorted(charmap.items(), key=lambda kv: kv[1]):
        target = ch.encode("utf-16-be").hex().upper()
        lines.append(f"<{code:0{hexw}X}> <{target}>")
    lines += ["endbfchar", "endcmap", "CMapName currentdict /CMap defineresource pop", "end", "end"]
    return "\n".join(lines).encode("ascii")


def _flate(data: bytes) -> bytes:
    return zlib.compress(data)


def _png_up_predict(data: bytes, row_len: int) -> bytes:
    out = bytearray()
    prev = bytes(row_len)
    for start in range(0, len(data), row_len):
        row = data[start : start + row_len]
        out.append(2)
        out.extend((row[i] - prev[i]) & 0xFF for i in range(len(row)))
        prev = row
    return bytes(out)


def make_pdf(
    lines: list[str],
    *,
    encoding: str = "winansi",
    compress: bool = False,
    xref_stream: bool = False,
    encrypted: bool = False,
    content_override: bytes | None = None,
) -> bytes:
    """A single-page PDF showing each line in its own BT/ET text block.

    encoding picks the font setup: "winansi" and "standard" use built-in
    byte encodings, "tounicode" adds a one-byte ToUnicode CMap,
    "type0" uses a composite font with two-byte codes, and "type0-raw" is
    a composite font without ToUnicode (nothing should be extractable).
    """
    charmap: dict[str, int] | None = None
    if encoding in ("tounicode", "type0"):
        charmap = {ch: 0x21 + i for i, ch in enumerate(sorted(set("".join(lines))))}

    if content_override is not None:
        content = content_override
    else:
        chunks = []
        y = 720
        for line in lines:
            payload = _pdf_string(_encode_line(line, encoding if encoding != "type0-raw" else "winansi", charmap))
            chunks.append(b"BT /F1 12 Tf 72 " + str(y).encode() + b" Td " + payload + b" Tj ET")
            y -= 16
        content = b"\n".join(chunks)

    if encoding == "winansi":
        font = b"<< /Type /Font /Subtype /Type1 /BaseFont /Helvetica /Encoding /WinAnsiEncoding >>"
    elif encoding == "standard":
        font = b"<< /Type /Font /Subtype /Type1 /BaseFont /Times-Roman >>"
    elif encoding == "tounicode":
        font = b"<< /Type /Font /Subtype /TrueType /BaseFont /Fixture /ToUnicode 6 0 R >>"
    elif encoding == "type0":
        font = b"<< /Type /Font /Subtype /Type0 /BaseFont /Fixture /Encoding /Identity-H /ToUnicode 6 0 R >>"
    elif encoding == "type0-raw":
        font = b"<< /Type /Font /Subtype /Type0 /BaseFont /Fixture /Encoding /Identity-H >>"
    else:
        raise ValueError(encoding)

    objects: dict[int, bytes] = {
        1: b"<< /Type /Catalog /Pages 2 0 R >>",
        2: b"<< /Type /Pages /Kids [3 0 R] /Count 1 >>",
        3: b"<< /Type /Page /Parent 2 0 R /MediaBox [0 0 612 792] "
           b"/Resources << /Font << /F1 4 0 R >> >> /Contents 5 0 R >>",
        4: font,
    }
    streams: dict[int, tuple[bytes, bytes]] = {}  # num -> (dict body, payload)

    if compress:
        payload = _flate(content)
        streams[5] = (b"<< /Length " + str(len(payload)).encode() + b" /Filter /FlateDecode >>", payload)
    else:
        streams[5] = (b"<< /Length " + str(len(content)).encode() + b" >>", content)

    if charmap is not None and encoding != "type0-raw":
        cmap = _tounicode_cmap(charmap, 2 if encoding == "type0" else 1)
        streams[6] = (b"<< /Length " + str(len(cmap)).encode() + b" >>", cmap)

    if encrypted:
        objects[9] = b"<< /Filter /Standard /V 1 /R 2 /O (x) /U (y) /P -44 >>"

    if xref_stream:
        return _assemble_xref_stream_pdf(objects, streams)
    return _assemble_classic_pdf(objects, streams, encrypted=encrypted)


def _object_bytes(num: int, body: bytes) -> bytes:
    return str(num).encode() + b" 0 obj\n" + body + b"\nendobj\n"


def _stream_object_bytes(num: int, head: bytes, payload: bytes) -> bytes:
    return (
        str(num).encode() + b" 0 obj\n" + head + b"\nstream\n" + payload + b"\nendstream\nendobj\n"
    )


def _assemble_classic_pdf(objects, streams, *, encrypted=False) -> bytes:
    out = bytearray(b"%PDF-1.4\n")
    offsets: dict[int, int] = {}
    for num in sorted(set(objects) | set(streams)):
        offsets[num] = len(out)
        if num in streams:
            head, payload = streams[num]
            out += _stream_object_bytes(num, head, payload)
        else:
            out += _object_bytes(num, objects[num])
    size = max(offsets) + 1  # entries 0..max
    xref_pos = len(out)
    out += b"xref\n0 " + str(size).encode() + b"\n"
    out += b"0000000000 65535 f \n"
    for num in range(1, size):
        if num in offsets:
            out += f"{offsets[num]:010d} 00000 n \n".encode()
        else:
            out += b"0000000000 65535 f \n"
    trailer = b"<< /Size " + str(size).encode() + b" /Root 1 0 R"
    if encrypted:
        trailer += b" /Encrypt 9 0 R"
    trailer += b" >>"
    out += b"trailer\n" + trailer + b"\nstartxref\n" + str(xref_pos).encode() + b"\n%%EOF\n"
    return bytes(out)


def _assemble_xref_stream_pdf(objects, streams) -> bytes:
    """PDF 1.5 layout: plain objects packed in an object stream, xref as a
    Flate stream with a PNG Up predictor."""
    out = bytearray(b"%PDF-1.5\n")
    offsets: dict[int, int] = {}

    packed = sorted(objects)  # live in the object stream
    bodies = [objects[num] for num in packed]
    header = " ".join(f"{num} {sum(len(b) + 1 for b in bodies[:i])}" for i, (num, b) in enumerate(zip(packed, bodies)))
    objstm_payload = header.encode() + b"\n" + b"\n".join(bodies) + b"\n"
    objstm_num = max(set(objects) | set(streams)) + 1
    xref_num = objstm_num + 1

    for num in sorted(streams):
        offsets[num] = len(out)
        head, payload = streams[num]
        out += _stream_object_bytes(num, head, payload)

    offsets[objstm_num] = len(out)
    compressed = _flate(objstm_payload)
    objstm_head = (
        b"<< /Type /ObjStm /N " + str(len(packed)).encode()
        + b" /First " + str(len(header) + 1).encode()
        + b" /Filter /FlateDecode /Length " + str(len(compressed)).encode() + b" >>"
    )
    out += _stream_object_bytes(objstm_num, objstm_head, compressed)

    size = xref_num + 1
    rows = bytearray()
    for num in range(size):
        if num == 0:
            rows += struct.pack(">B I H", 0, 0, 0xFFFF)
        elif num in offsets:
            rows += struct.pack(">B I H", 1, offsets[num], 0)
        elif num in objects:
            rows += struct.pack(">B I H", 2, objstm_num, packed.index(num))
        else:
            rows += struct.pack(">B I H", 0, 0, 0)
    row_len = 7
    predicted = _png_up_predict(bytes(rows), row_len)
    xref_payload = _flate(predicted)
    xref_pos = len(out)
    xref_head = (
        b"<< /Type /XRef /Size " + str(size).encode()
        + b" /W [1 4 2] /Root 1 0 R /Filter /FlateDecode"
        + b" /DecodeParms << /Predictor 12 /Columns 7 >>"
        + b" /Length " + str(len(xref_payload)).encode() + b" >>"
    )
    out += _stream_object_bytes(xref_num, xref_head, xref_payload)
    out += b"startxref\n" + str(xref_pos).encode() + b"\n%%EOF\n"
    return bytes(out)


# ---------------------------------------------------------------------------
# OLE / legacy .doc

_ENDOFCHAIN = 0xFFFFFFFE
_FREESECT = 0xFFFFFFFF
_FATSECT = 0xFFFFFFFD
_NOSTREAM = 0xFFFFFFFF
_SECTOR = 512
_MINI_SECTOR = 64
_MINI_CUTOFF = 4096


def _pad(data: bytes, size: int) -> bytes:
    remainder = len(data) % size
    return data if remainder == 0 else data + bytes(size - remainder)


def make_ole(streams: dict[str, bytes]) -> bytes:
    """A v3 OLE compound file containing the given streams at the root.

    Streams smaller than the 4096-byte cutoff are stored in the mini
    stream, as real writers do.
    """
    sectors: list[bytes] = []
    fat: list[int] = []

    def alloc(data: bytes) -> int:
        if not data:
            return _ENDOFCHAIN
        data = _pad(data, _SECTOR)
        first = len(sectors)
        count = len(data) // _SECTOR
        for i in range(count):
            sectors.append(data[i * _SECTOR : (i + 1) * _SECTOR])
            fat.append(first + i + 1)
        fat[-1] = _ENDOFCHAIN
        return first

    mini_entries: list[tuple[str, int, int]] = []  # name, first mini sector, size
    normal_entries: list[tuple[str, int, int]] = []
    mini_blob = bytearray()
    minifat: list[int] = []

    for name, data in streams.items():
        if 0 < len(data) < _MINI_CUTOFF:
            first = len(minifat)
            chunks = _pad(data, _MINI_SECTOR)
            count = len(chunks) // _MINI_SECTOR
            mini_blob += chunks
            minifat.extend(first + i + 1 for i in range(count))
            minifat[-1] = _ENDOFCHAIN
            mini_entries.append((name, first, len(data)))
        else:
            normal_entries.append((name, -1, len(data)))  # start filled below

    # Normal stream chains first, then the mini stream, mini FAT, directory.
    normal_entries = [
        (name, alloc(streams[name]), size) for name, _, size in normal_entries
    ]
    ministream_start = alloc(bytes(mini_blob))
    minifat_start = (
        alloc(b"".join(struct.pack("<I", v) for v in minifat)) if minifat else _ENDOFCHAIN
    )
    n_minifat_sectors = (len(minifat) * 4 + _SECTOR - 1) // _SECTOR if minifat else 0

    def dir_entry(name: str, obj_type: int, right: int, child: int, start: int, size: int) -> bytes:
        encoded = name.encode("utf-16-le")
        entry = bytearray(128)
        entry[0 : len(encoded)] = encoded
        struct.pack_into("<H", entry, 64, len(encoded) + 2)
        entry[66] = obj_type
        entry[67] = 1  # black
        struct.pack_into("<I", entry, 68, _NOSTREAM)  # left
        struct.pack_into("<I", entry, 72, right)
        struct.pack_into("<I", entry, 76, child)
        struct.pack_into("<I", entry, 116, start & 0xFFFFFFFF)
        struct.pack_into("<Q", entry, 120, size)
        return bytes(entry)

    all_streams = mini_entries + normal_entries
    entries = [
        dir_entry(
            "Root Entry", 5,
            right=_NOSTREAM,
            child=1 if all_streams else _NOSTREAM,
            start=ministream_start,
            size=len(mini_blob),
        )
    ]
    for i, (name, start, size) in enumerate(all_streams):
        right = i + 2 if i + 1 < len(all_streams) else _NOSTREAM
        entries.append(dir_entry(name, 2, right=right, child=_NOSTREAM, start=start, size=size))
    dir_start = alloc(_pad(b"".join(entries), _SECTOR))

    content_sectors = len(sectors)
    n_fat = 0
    while n_fat * 128 < content_sectors + n_fat:
        n_fat += 1
    fat_first = len(sectors)
    fat.extend([_FATSECT] * n_fat)
    fat.extend([_FREESECT] * (n_fat * 128 - len(fat)))
    fat_blob = b"".join(struct.pack("<I", v) for v in fat)
    for i in range(n_fat):
        sectors.append(fat_blob[i * _SECTOR : (i + 1) * _SECTOR])

    header = bytearray(512)
    header[0:8] = b"\xd0\xcf\x11\xe0\xa1\xb1\x1a\xe1"
    struct.pack_into("<H", header, 24, 0x003E)  # minor version
    struct.pack_into("<H", header, 26, 3)  # major version
    struct.pack_into("<H", header, 28, 0xFFFE)  # byte order
    struct.pack_into("<H", header, 30, 9)  # sector shift
    struct.pack_into("<H", header, 32, 6)  # mini sector shift
    struct.pack_into("<I", header, 44, n_fat)
    struct.pack_into("<I", header, 48, dir_start)
    struct.pack_into("<I", header, 56, _MINI_CUTOFF)
    struct.pack_into("<I", header, 60, minifat_start)
    struct.pack_into("<I", header, 64, n_minifat_sectors)
    struct.pack_into("<I", header, 68, _ENDOFCHAIN)  # no extra DIFAT sectors
    struct.pack_into("<I", header, 72, 0)
    for i in range(109):
        struct.pack_into("<I", header, 76 + 4 * i, fat_first + i if i < n_fat else _FREESECT)

    return bytes(header) + b"".join(sectors)


def make_doc(text: str, *, text_encoding: str = "utf-16", pad_to: int = 0) -> bytes:
    """A crafted legacy .doc: an OLE container whose WordDocument stream
    holds the text, preceded by a short unprintable header."""
    if text_encoding == "utf-16":
        payload = text.encode("utf-16-le")
    elif text_encoding == "cp1252":
        payload = text.encode("cp1252")
    else:
        raise ValueError(text_encoding)
    stream = b"\xec\xa5" + bytes(30) + payload
    if pad_to and len(stream) < pad_to:
        stream += bytes(pad_to - len(stream))
    return make_ole({"WordDocument": stream, "1Table": bytes(64)})


# ---------------------------------------------------------------------------
# Acceptance corpus: fifteen synthetic essays with planted characteristics.
# Expected trace counts, verdicts, and warnings are stated here, independent
# of the scanner, and frozen into tests/data/acceptance_golden.csv.

CORPUS_HEADERS = [
    "File Name", "AI Traces",
    "ChatGPT Mentioned", "Grammarly Mentioned", "Claude Mentioned",
    "Gemini Mentioned", "Llama/Meta Mentioned", "Copilot Mentioned",
    "Grok Mentioned", "DeepSeek Mentioned",
    "Verdict", "Warnings",
]

_TOOL_KEYS = (
    "chatgpt", "grammarly", "claude", "gemini",
    "llama_meta", "copilot", "grok", "deepseek",
)

_MENTION_PHRASES = {
    "chatgpt": "I used ChatGPT to polish the final paragraph.",
    "grammarly": "Grammarly flagged several long sentences.",
    "claude": "Acknowledgment: Claude reviewed my outline.",
    "gemini": "Gemini summarized two background articles.",
    "llama_meta": "A local Llama model drafted the appendix.",
    "copilot": "Copilot completed the code samples.",
    "grok": "Grok answered one background question.",
    "deepseek": "DeepSeek translated a source abstract.",
}

# name, storage (docx | pdf encoding), planted counts, mentions, verdict, warnings
CORPUS_PLAN = [
    ("student_essay_01.docx", "docx",
     dict(curly_double=4, curly_single=2, em_dash=2), (),
     "NoTraces", "non-ASCII punctuation present: em_dash=2"),
    ("student_essay_02.pdf", "winansi",
     dict(ascii_double=12, ascii_single=7, curly_double=4, curly_single=2), (),
     "Unacknowledged", ""),
    ("student_essay_03.pdf", "winansi",
     dict(ascii_double=20, ascii_single=10, curly_double=2, curly_single=1), ("chatgpt",),
     "Acknowledged", ""),
    ("student_essay_04.pdf", "winansi",
     dict(ascii_single=1, curly_double=2), (),
     "Unacknowledged", ""),
    ("student_essay_05.docx", "docx",
     dict(curly_double=2, curly_single=3), (),
     "NoTraces", ""),
    ("student_essay_06.pdf", "winansi",
     dict(ascii_double=2, curly_double=2, en_dash=1, ellipsis=1), (),
     "Unacknowledged", "non-ASCII punctuation present: en_dash=1, ellipsis=1"),
    ("student_essay_07.pdf", "tounicode",
     dict(curly_double=2, curly_single=1), (),
     "NoTraces", ""),
    ("student_essay_08.pdf", "winansi",
     dict(ascii_double=1, curly_single=2), (),
     "Unacknowledged", ""),
    ("student_essay_09.docx", "docx",
     dict(ascii_double=4, ascii_single=1, curly_double=2), (),
     "Unacknowledged", ""),
    ("student_essay_10.pdf", "standard",
     dict(ascii_single=1, curly_double=2, curly_single=1), (),
     "Unacknowledged", ""),
    ("student_essay_11.docx", "docx",
     dict(ascii_double=4, ascii_single=2, curly_double=2), ("chatgpt",),
     "Acknowledged", ""),
    ("student_essay_12.pdf", "tounicode",
     dict(ascii_double=2, ascii_single=1, curly_double=2), ("chatgpt", "claude"),
     "Acknowledged", ""),
    ("student_essay_13.pdf", "winansi",
     dict(ascii_double=6, ascii_single=1, curly_double=2, curly_single=1), ("chatgpt",),
     "Acknowledged", ""),
    ("student_essay_14.docx", "docx",
     dict(ascii_double=4, ascii_single=5), ("chatgpt",),
     "AllAscii", ""),
    ("student_essay_15.pdf", "winansi",
     dict(curly_double=4), (),
     "NoTraces", ""),
]


def essay_text(
    *,
    ascii_double=0,
    ascii_single=0,
    curly_double=0,
    curly_single=0,
    em_dash=0,
    en_dash=0,
    ellipsis=0,
    nbsp=0,
    mentions=(),
) -> list[str]:
    """Deterministic essay paragraphs containing exactly the planted marks."""
    parts = [
        "This essay examines how revision habits shape final drafts.",
        "Each section builds on notes gathered during the term.",
    ]
    remaining = ascii_double
    while remaining >= 2:
        parts.append('One source stated that "clarity beats length" in academic prose.')
        remaining -= 2
    if remaining:
        parts.append('A stray " remained after editing.')
    for _ in range(ascii_single):
        parts.append("The writer notes that it's common to over-edit.")
    remaining = curly_double
    while remaining >= 2:
        parts.append("Another source called the plan “workable in practice” overall.")
        remaining -= 2
    if remaining:
        parts.append("An unmatched “ appeared in the notes.")
    for _ in range(curly_single):
        parts.append("The committee shared the author’s view.")
    for _ in range(em_dash):
        parts.append("The argument sharpened—slowly but steadily.")
    for _ in range(en_dash):
        parts.append("Pages 3–5 cover the method.")
    for _ in range(ellipsis):
        parts.append("The conclusion trails off…")
    for _ in range(nbsp):
        parts.append("Values are given in 10 cm units.")
    parts.extend(_MENTION_PHRASES[key] for key in mentions)
    return parts


def _probe_mentions(text: str) -> set:
    """Independent mention check used to validate the corpus plan."""
    import re as _re

    lowered = text.lower()
    found = set()
    if _re.search(r"chat\s*gpt", lowered):
        found.add("chatgpt")
    simple = {
        "grammarly": ("grammarly",),
        "claude": ("claude",),
        "gemini": ("gemini",),
        "llama_meta": ("llama", "meta"),
        "copilot": ("copilot",),
        "grok": ("grok",),
        "deepseek": ("deepseek",),
    }
    for key, words in simple.items():
        if any(_re.search(rf"\b{word}\b", lowered) for word in words):
            found.add(key)
    return found


def _verify_plan_entry(text: str, counts: dict, mentions: tuple) -> None:
    planted = {
        "ascii_double": text.count(chr(0x22)),
        "ascii_single": text.count(chr(0x27)),
        "curly_double": text.count(chr(0x201C)) + text.count(chr(0x201D)),
        "curly_single": text.count(chr(0x2018)) + text.count(chr(0x2019)),
        "em_dash": text.count(chr(0x2014)),
        "en_dash": text.count(chr(0x2013)),
        "ellipsis": text.count(chr(0x2026)),
        "nbsp": text.count(chr(0xA0)),
    }
    for key, value in planted.items():
        assert value == counts.get(key, 0), (key, value, counts)
    assert _probe_mentions(text) == set(mentions)


def build_corpus(directory) -> None:
    """Materialize the fifteen-essay corpus under `directory`."""
    import os as _os

    stamp = 1714986000  # 2024-05-06 09:00:00 UTC
    for name, storage, counts, mentions, _verdict, _warnings in CORPUS_PLAN:
        paragraphs = essay_text(**counts, mentions=mentions)
        _verify_plan_entry("\n".join(paragraphs), counts, mentions)
        if storage == "docx":
            payload = make_docx(paragraphs)
        else:
            payload = make_pdf(paragraphs, encoding=storage)
        target = directory / name
        target.write_bytes(payload)
        _os.utime(target, (stamp, stamp))


def corpus_expected_rows() -> list[list[str]]:
    rows = []
    for name, _storage, counts, mentions, verdict, warnings in CORPUS_PLAN:
        traces = counts.get("ascii_double", 0) + counts.get("ascii_single", 0)
        cells = [name, str(traces)]
        cells += ["Yes" if key in mentions else "No" for key in _TOOL_KEYS]
        cells += [verdict, warnings]
        rows.append(cells)
    rows.sort(key=lambda row: row[0])
    return rows


def corpus_golden_csv() -> bytes:
    """Golden CSV rendered with the standard-library csv module."""
    import csv as _csv

    buffer = io.StringIO()
    writer = _csv.writer(buffer, lineterminator="\r\n")
    writer.writerow(CORPUS_HEADERS)
    writer.writerows(corpus_expected_rows())
    return buffer.getvalue().encode("utf-8")
