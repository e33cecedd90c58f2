"""PDF text extraction over a deliberately bounded subset of the format.

Supported: classic cross-reference tables and 1.5+ cross-reference streams
(including objects packed in object streams), unfiltered and FlateDecode
content (PNG predictors handled), the text-showing operators Tj, TJ, '
and ", simple fonts with Standard or WinAnsi base encodings plus
/Differences overrides, and ToUnicode CMaps (bfchar and contiguous
bfrange). Anything else is skipped with a warning and flips
all_text_recovered to False; characters are never guessed, so the output
cannot contain codepoints the document did not encode.

Encrypted documents and containers whose structure cannot be read at all
raise ExtractError instead of returning partial text.
"""

from __future__ import annotations

import base64
import re
import zlib
from typing import Any, NamedTuple

from . import ExtractError, ExtractedText


class _ParseError(Exception):
    pass


class _UnsupportedData(Exception):
    """A stream or encoding outside the supported subset."""


class Name(str):
    """A PDF name object; distinct from string objects."""

    __slots__ = ()


class Ref(NamedTuple):
    num: int
    gen: int


class Stream:
    __slots__ = ("dict", "raw")

    def __init__(self, d: dict, raw: bytes) -> None:
        self.dict = d
        self.raw = raw


# ---------------------------------------------------------------------------
# Character tables

_GLYPH_LIST = {
    # ASCII punctuation and symbols
    "space": " ", "exclam": "!", "quotedbl": '"', "numbersign": "#",
    "dollar": "$", "percent": "%", "ampersand": "&", "quotesingle": "'",
    "parenleft": "(", "parenright": ")", "asterisk": "*", "plus": "+",
    "comma": ",", "hyphen": "-", "period": ".", "slash": "/",
    "colon": ":", "semicolon": ";", "less": "<", "equal": "=",
    "greater": ">", "question": "?", "at": "@", "bracketleft": "[",
    "backslash": "\\", "bracketright": "]", "asciicircum": "^",
    "underscore": "_", "grave": "`", "braceleft": "{", "bar": "|",
    "braceright": "}", "asciitilde": "~",
    "zero": "0", "one": "1", "two": "2", "three": "3", "four": "4",
    "five": "5", "six": "6", "seven": "7", "eight": "8", "nine": "9",
    # Typographic punctuation (the characters this tool exists to count)
    "quoteleft": "\u2018", "quoteright": "\u2019",
    "quotedblleft": "\u201c", "quotedblright": "\u201d",
    "quotesinglbase": "\u201a", "quotedblbase": "\u201e",
    "endash": "\u2013", "emdash": "\u2014", "ellipsis": "\u2026",
    "bullet": "\u2022", "dagger": "\u2020", "daggerdbl": "\u2021",
    "perthousand": "\u2030", "guilsinglleft": "\u2039",
    "guilsinglright": "\u203a", "guillemotleft": "\u00ab",
    "guillemotright": "\u00bb", "fraction": "\u2044", "minus": "\u2212",
    "florin": "\u0192", "fi": "\ufb01", "fl": "\ufb02",
    "trademark": "\u2122", "Euro": "\u20ac",
    # Latin-1 range
    "exclamdown": "¡", "cent": "¢", "sterling": "£",
    "currency": "¤", "yen": "¥", "brokenbar": "¦",
    "section": "§", "dieresis": "¨", "copyright": "©",
    "ordfeminine": "ª", "logicalnot": "¬", "registered": "®",
    "macron": "¯", "degree": "°", "plusminus": "±",
    "twosuperior": "²", "threesuperior": "³", "acute": "´",
    "mu": "µ", "paragraph": "¶", "periodcentered": "·",
    "cedilla": "¸", "onesuperior": "¹", "ordmasculine": "º",
    "onequarter": "¼", "onehalf": "½", "threequarters": "¾",
    "questiondown": "¿", "multiply": "×", "divide": "÷",
    "Agrave": "À", "Aacute": "Á", "Acircumflex": "Â",
    "Atilde": "Ã", "Adieresis": "Ä", "Aring": "Å",
    "AE": "Æ", "Ccedilla": "Ç", "Egrave": "È",
    "Eacute": "É", "Ecircumflex": "Ê", "Edieresis": "Ë",
    "Igrave": "Ì", "Iacute": "Í", "Icircumflex": "Î",
    "Idieresis": "Ï", "Eth": "Ð", "Ntilde": "Ñ",
    "Ograve": "Ò", "Oacute": "Ó", "Ocircumflex": "Ô",
    "Otilde": "Õ", "Odieresis": "Ö", "Oslash": "Ø",
    "Ugrave": "Ù", "Uacute": "Ú", "Ucircumflex": "Û",
    "Udieresis": "Ü", "Yacute": "Ý", "Thorn": "Þ",
    "germandbls": "ß", "agrave": "à", "aacute": "á",
    "acircumflex": "â", "atilde": "ã", "adieresis": "ä",
    "aring": "å", "ae": "æ", "ccedilla": "ç",
    "egrave": "è", "eacute": "é", "ecircumflex": "ê",
    "edieresis": "ë", "igrave": "ì", "iacute": "í",
    "icircumflex": "î", "idieresis": "ï", "eth": "ð",
    "ntilde": "ñ", "ograve": "ò", "oacute": "ó",
    "ocircumflex": "ô", "otilde": "õ", "odieresis": "ö",
    "oslash": "ø", "ugrave": "ù", "uacute": "ú",
    "ucircumflex": "û", "udieresis": "ü", "yacute": "ý",
    "thorn": "þ", "ydieresis": "ÿ", "Ydieresis": "Ÿ",
    "Scaron": "Š", "scaron": "š", "Zcaron": "Ž",
    "zcaron": "ž", "OE": "Œ", "oe": "œ",
    "Lslash": "Ł", "lslash": "ł", "dotlessi": "ı",
    "circumflex": "ˆ", "tilde": "˜", "breve": "˘",
    "dotaccent": "˙", "ring": "˚", "hungarumlaut": "˝",
    "ogonek": "˛", "caron": "ˇ", "nbspace": "\u00a0",
}
for _letter in "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz":
    _GLYPH_LIST[_letter] = _letter

# Adobe StandardEncoding: note the curly quotes at 0x27/0x60 and the
# straight apostrophe up at 0xA9.
_STANDARD_LAYOUT = {
    0x20: "space", 0x21: "exclam", 0x22: "quotedbl", 0x23: "numbersign",
    0x24: "dollar", 0x25: "percent", 0x26: "ampersand", 0x27: "quoteright",
    0x28: "parenleft", 0x29: "parenright", 0x2A: "asterisk", 0x2B: "plus",
    0x2C: "comma", 0x2D: "hyphen", 0x2E: "period", 0x2F: "slash",
    0x3A: "colon", 0x3B: "semicolon", 0x3C: "less", 0x3D: "equal",
    0x3E: "greater", 0x3F: "question", 0x40: "at", 0x5B: "bracketleft",
    0x5C: "backslash", 0x5D: "bracketright", 0x5E: "asciicircum",
    0x5F: "underscore", 0x60: "quoteleft", 0x7B: "braceleft", 0x7C: "bar",
    0x7D: "braceright", 0x7E: "asciitilde",
    0xA1: "exclamdown", 0xA2: "cent", 0xA3: "sterling", 0xA4: "fraction",
    0xA5: "yen", 0xA6: "florin", 0xA7: "section", 0xA8: "currency",
    0xA9: "quotesingle", 0xAA: "quotedblleft", 0xAB: "guillemotleft",
    0xAC: "guilsinglleft", 0xAD: "guilsinglright", 0xAE: "fi", 0xAF: "fl",
    0xB1: "endash", 0xB2: "dagger", 0xB3: "daggerdbl",
    0xB4: "periodcentered", 0xB6: "paragraph", 0xB7: "bullet",
    0xB8: "quotesinglbase", 0xB9: "quotedblbase", 0xBA: "quotedblright",
    0xBB: "guillemotright", 0xBC: "ellipsis", 0xBD: "perthousand",
    0xBF: "questiondown", 0xC1: "grave", 0xC2: "acute", 0xC3: "circumflex",
    0xC4: "tilde", 0xC5: "macron", 0xC6: "breve", 0xC7: "dotaccent",
    0xC8: "dieresis", 0xCA: "ring", 0xCB: "cedilla", 0xCD: "hungarumlaut",
    0xCE: "ogonek", 0xCF: "caron", 0xD0: "emdash", 0xE1: "AE",
    0xE3: "ordfeminine", 0xE8: "Lslash", 0xE9: "Oslash", 0xEA: "OE",
    0xEB: "ordmasculine", 0xF1: "ae", 0xF5: "dotlessi", 0xF8: "lslash",
    0xF9: "oslash", 0xFA: "oe", 0xFB: "germandbls",
}


def _standard_table() -> dict[int, str]:
    table = {code: _GLYPH_LIST[name] for code, name in _STANDARD_LAYOUT.items()}
    for code in range(0x30, 0x3A):  # digits
        table[code] = chr(code)
    for code in list(range(0x41, 0x5B)) + list(range(0x61, 0x7B)):  # letters
        table[code] = chr(code)
    for code in (0x09, 0x0A, 0x0D):
        table[code] = chr(code)
    return table


def _winansi_table() -> dict[int, str]:
    # WinAnsiEncoding is CP-1252: 0x91..0x94 are the curly quotes and 0xA0
    # decodes to the no-break space the word processor wrote.
    table: dict[int, str] = {}
    for b in range(0x20, 0x100):
        if b in (0x81, 0x8D, 0x8F, 0x90, 0x9D):
            continue
        table[b] = bytes([b]).decode("cp1252")
    for code in (0x09, 0x0A, 0x0D):
        table[code] = chr(code)
    return table


_STANDARD_ENCODING = _standard_table()
_WINANSI_ENCODING = _winansi_table()

# ---------------------------------------------------------------------------
# Tokenizer

_WHITESPACE = b"\x00\t\n\x0c\r "
_DELIMITERS = b"()<>[]{}/%"
_REGULAR_STOP = _WHITESPACE + _DELIMITERS
_NUMBER_RE = re.compile(rb"[+-]?(\d+\.?\d*|\.\d+)$")


class _Lexer:
    __slots__ = ("data", "pos")

    def __init__(self, data: bytes, pos: int = 0) -> None:
        self.data = data
        self.pos = pos

    def _skip_whitespace(self) -> None:
        data = self.data
        n = len(data)
        while self.pos < n:
            b = data[self.pos]
            if b in _WHITESPACE:
                self.pos += 1
            elif b == 0x25:  # % comment to end of line
                eol = data.find(b"\n", self.pos)
                cr = data.find(b"\r", self.pos)
                stops = [x for x in (eol, cr) if x >= 0]
                self.pos = min(stops) if stops else n
            else:
                return

    def _literal_string(self) -> bytes:
        data = self.data
        out = bytearray()
        depth = 1
        i = self.pos + 1
        n = len(data)
        while i < n:
            b = data[i]
            if b == 0x5C:  # backslash escape
                i += 1
                if i >= n:
                    break
                c = data[i]
                if c in b"nrtbf":
                    out.append({0x6E: 10, 0x72: 13, 0x74: 9, 0x62: 8, 0x66: 12}[c])
                    i += 1
                elif 0x30 <= c <= 0x37:  # up to three octal digits
                    val = 0
                    k = 0
                    while k < 3 and i < n and 0x30 <= data[i] <= 0x37:
                        val = val * 8 + (data[i] - 0x30)
                        i += 1
                        k += 1
                    out.append(val & 0xFF)
                elif c in (0x0D, 0x0A):  # line continuation
                    i += 2 if data[i : i + 2] == b"\r\n" else 1
                else:
                    out.append(c)
                    i += 1
            elif b == 0x28:
                depth += 1
                out.append(b)
                i += 1
            elif b == 0x29:
                depth -= 1
                if depth == 0:
                    i += 1
                    self.pos = i
                    return bytes(out)
                out.append(b)
                i += 1
            elif b == 0x0D:  # bare EOL inside a string reads as \n
                out.append(0x0A)
                i += 2 if data[i : i + 2] == b"\r\n" else 1
            else:
                out.append(b)
                i += 1
        raise _ParseError("unterminated string")

    def _hex_string(self) -> bytes:
        data = self.data
        end = data.find(b">", self.pos)
        if end < 0:
            raise _ParseError("unterminated hex string")
        digits = re.sub(rb"[^0-9A-Fa-f]", b"", data[self.pos + 1 : end])
        self.pos = end + 1
        if len(digits) % 2:
            digits += b"0"
        return bytes.fromhex(digits.decode("ascii"))

    def _name(self) -> Name:
        data = self.data
        i = self.pos + 1
        n = len(data)
        out = bytearray()
        while i < n and data[i] not in _REGULAR_STOP:
            if data[i] == 0x23 and i + 2 < n:
                try:
                    out.append(int(data[i + 1 : i + 3], 16))
                    i += 3
                    continue
                except ValueError:
                    pass
            out.append(data[i])
            i += 1
        self.pos = i
        return Name(out.decode("utf-8", errors="replace"))

    def next_token(self) -> tuple[str, Any] | None:
        self._skip_whitespace()
        data = self.data
        if self.pos >= len(data):
            return None
        b = data[self.pos]
        if b == 0x2F:
            return ("name", self._name())
        if b == 0x28:
            return ("string", self._literal_string())
        if b == 0x3C:
            if data[self.pos : self.pos + 2] == b"<<":
                self.pos += 2
                return ("dict_open", None)
            return ("string", self._hex_string())
        if b == 0x3E:
            if data[self.pos : self.pos + 2] == b">>":
                self.pos += 2
                return ("dict_close", None)
            raise _ParseError("stray '>'")
        if b == 0x5B:
            self.pos += 1
            return ("array_open", None)
        if b == 0x5D:
            self.pos += 1
            return ("array_close", None)
        if b in b"{}":
            self.pos += 1
            return ("kw", data[self.pos - 1 : self.pos])
        start = self.pos
        i = start
        n = len(data)
        while i < n and data[i] not in _REGULAR_STOP:
            i += 1
        if i == start:  # lone delimiter we do not understand
            raise _ParseError(f"unexpected byte {data[start]:#x} at {start}")
        self.pos = i
        word = data[start:i]
        if _NUMBER_RE.match(word):
            try:
                return ("num", int(word))
            except ValueError:
                return ("num", float(word))
        return ("kw", word)


# ---------------------------------------------------------------------------
# Object parsing

class _Op(NamedTuple):
    name: bytes


_EOF = object()


def _parse_item(lex: _Lexer, depth: int = 0) -> Any:
    """Next object from the token stream; operators come back as _Op."""
    if depth > 64:
        raise _ParseError("objects nested too deeply")
    tok = lex.next_token()
    if tok is None:
        return _EOF
    kind, value = tok
    if kind == "num":
        if isinstance(value, int) and value >= 0:
            save = lex.pos
            tok2 = lex.next_token()
            if tok2 is not None and tok2[0] == "num" and isinstance(tok2[1], int) and tok2[1] >= 0:
                tok3 = lex.next_token()
                if tok3 == ("kw", b"R"):
                    return Ref(value, tok2[1])
            lex.pos = save
        return value
    if kind in ("name", "string"):
        return value
    if kind == "array_open":
        items: list[Any] = []
        while True:
            save = lex.pos
            tok = lex.next_token()
            if tok is None:
                raise _ParseError("unterminated array")
            if tok[0] == "array_close":
                return items
            lex.pos = save
            item = _parse_item(lex, depth + 1)
            if item is _EOF or isinstance(item, _Op):
                raise _ParseError("malformed array")
            items.append(item)
    if kind == "dict_open":
        d: dict[str, Any] = {}
        while True:
            tok = lex.next_token()
            if tok is None:
                raise _ParseError("unterminated dictionary")
            if tok[0] == "dict_close":
                return d
            if tok[0] != "name":
                raise _ParseError("dictionary key is not a name")
            val = _parse_item(lex, depth + 1)
            if val is _EOF or isinstance(val, _Op):
                raise _ParseError("malformed dictionary value")
            d[str(tok[1])] = val
    if kind in ("array_close", "dict_close"):
        raise _ParseError(f"unexpected {kind}")
    # keyword
    if value == b"true":
        return True
    if value == b"false":
        return False
    if value == b"null":
        return None
    return _Op(value)


# ---------------------------------------------------------------------------
# Stream filters

def _png_unpredict(data: bytes, columns: int, colors: int, bpc: int) -> bytes:
    pixel = max(1, (colors * bpc + 7) // 8)
    row_len = (columns * colors * bpc + 7) // 8
    if row_len <= 0:
        raise _UnsupportedData("bad predictor columns")
    out = bytearray()
    prev = bytearray(row_len)
    i = 0
    n = len(data)
    while i < n:
        ft = data[i]
        i += 1
        row = bytearray(data[i : i + row_len])
        i += row_len
        if len(row) < row_len:
            row.extend(bytes(row_len - len(row)))
        if ft == 1:  # Sub
            for j in range(pixel, row_len):
                row[j] = (row[j] + row[j - pixel]) & 0xFF
        elif ft == 2:  # Up
            for j in range(row_len):
                row[j] = (row[j] + prev[j]) & 0xFF
        elif ft == 3:  # Average
            for j in range(row_len):
                left = row[j - pixel] if j >= pixel else 0
                row[j] = (row[j] + ((left + prev[j]) >> 1)) & 0xFF
        elif ft == 4:  # Paeth
            for j in range(row_len):
                a = row[j - pixel] if j >= pixel else 0
                b = prev[j]
                c = prev[j - pixel] if j >= pixel else 0
                p = a + b - c
                pa, pb, pc = abs(p - a), abs(p - b), abs(p - c)
                pred = a if (pa <= pb and pa <= pc) else (b if pb <= pc else c)
                row[j] = (row[j] + pred) & 0xFF
        elif ft != 0:
            raise _UnsupportedData(f"PNG predictor filter type {ft}")
        out.extend(row)
        prev = row
    return bytes(out)


# Generous bound against Flate bombs; no real page stream approaches it.
MAX_STREAM_BYTES = 256 * 2**20


def _inflate(data: bytes) -> bytes:
    try:
        d = zlib.decompressobj()
        out = d.decompress(data, MAX_STREAM_BYTES)
        if d.unconsumed_tail:
            raise _UnsupportedData("stream inflates beyond the size bound")
        return out + d.flush()
    except zlib.error as exc:
        raise _UnsupportedData(f"corrupt Flate data ({exc})") from None


def _ascii85_decode(data: bytes) -> bytes:
    body = data.strip()
    if body.startswith(b"<~"):
        body = body[2:]
    if body.endswith(b"~>"):
        body = body[:-2]
    try:
        return base64.a85decode(body, adobe=False, ignorechars=b" \t\n\r\x0b\x0c\x00")
    except ValueError as exc:
        raise _UnsupportedData(f"corrupt ASCII85 data ({exc})") from None


def _asciihex_decode(data: bytes) -> bytes:
    body = data.split(b">", 1)[0]
    digits = re.sub(rb"[^0-9A-Fa-f]", b"", body)
    if len(digits) % 2:
        digits += b"0"
    return bytes.fromhex(digits.decode("ascii"))


class _Document:
    def __init__(self, data: bytes) -> None:
        self.data = data
        self.xref: dict[int, tuple | None] = {}
        self.trailer: dict[str, Any] = {}
        self._cache: dict[int, Any] = {}
        self._objstm_cache: dict[int, tuple[dict[int, int], bytes]] = {}
        self._load_xref()
        if "Encrypt" in self.trailer:
            raise ExtractError("EncryptedDocument", "document uses PDF encryption")
        if not self.xref or not isinstance(self.resolve(self.trailer.get("Root")), dict):
            self._rebuild_xref()
            if "Encrypt" in self.trailer:
                raise ExtractError("EncryptedDocument", "document uses PDF encryption")
        if not self.xref:
            raise ExtractError("CorruptContainer", "no readable cross-reference data")

    # -- object access ------------------------------------------------------

    def get(self, num: int) -> Any:
        if num in self._cache:
            return self._cache[num]
        entry = self.xref.get(num)
        value = None
        try:
            if entry is not None and entry[0] == "off":
                value = self._parse_indirect_at(entry[1])
            elif entry is not None and entry[0] == "objstm":
                value = self._from_object_stream(entry[1], entry[2])
        except (_ParseError, _UnsupportedData):
            value = None
        self._cache[num] = value
        return value

    def resolve(self, value: Any) -> Any:
        hops = 0
        while isinstance(value, Ref):
            value = self.get(value.num)
            hops += 1
            if hops > 32:
                return None
        return value

    def _parse_indirect_at(self, offset: int) -> Any:
        if not 0 <= offset < len(self.data):
            raise _ParseError(f"object offset {offset} out of range")
        lex = _Lexer(self.data, offset)
        if lex.next_token() is None or lex.next_token() is None:
            raise _ParseError("truncated object header")
        if lex.next_token() != ("kw", b"obj"):
            raise _ParseError(f"no object at offset {offset}")
        value = _parse_item(lex)
        if value is _EOF or isinstance(value, _Op):
            raise _ParseError("malformed object body")
        save = lex.pos
        tok = lex.next_token()
        if tok == ("kw", b"stream") and isinstance(value, dict):
            return self._read_stream(lex, value)
        lex.pos = save
        return value

    def _read_stream(self, lex: _Lexer, d: dict) -> Stream:
        data = self.data
        pos = lex.pos
        if data[pos : pos + 2] == b"\r\n":
            pos += 2
        elif data[pos : pos + 1] in (b"\n", b"\r"):
            pos += 1
        length = self.resolve(d.get("Length"))
        if isinstance(length, int) and 0 <= length <= len(data) - pos:
            end = pos + length
            if re.match(rb"\s{0,4}endstream", data[end : end + 13]):
                return Stream(d, data[pos:end])
        # /Length missing or wrong: trust the endstream marker instead
        idx = data.find(b"endstream", pos)
        if idx < 0:
            raise _ParseError("unterminated stream")
        raw = data[pos:idx]
        if raw.endswith(b"\r\n"):
            raw = raw[:-2]
        elif raw.endswith((b"\n", b"\r")):
            raw = raw[:-1]
        return Stream(d, raw)

    def _from_object_stream(self, stm_num: int, index: int) -> Any:
        if stm_num not in self._objstm_cache:
            stm = self.get(stm_num)
            if not isinstance(stm, Stream) or stm.dict.get("Type") != "ObjStm":
                raise _ParseError(f"object stream {stm_num} unavailable")
            payload = self.stream_payload(stm)
            first = self.resolve(stm.dict.get("First"))
            count = self.resolve(stm.dict.get("N"))
            if not isinstance(first, int) or not isinstance(count, int):
                raise _ParseError("object stream without N/First")
            lex = _Lexer(payload)
            offsets: dict[int, int] = {}
            for _ in range(count):
                t1 = lex.next_token()
                t2 = lex.next_token()
                if not t1 or not t2 or t1[0] != "num" or t2[0] != "num":
                    raise _ParseError("bad object stream header")
                offsets[len(offsets)] = first + t2[1]
            self._objstm_cache[stm_num] = (offsets, payload)
        offsets, payload = self._objstm_cache[stm_num]
        if index not in offsets:
            raise _ParseError(f"object index {index} outside object stream")
        value = _parse_item(_Lexer(payload, offsets[index]))
        if value is _EOF or isinstance(value, _Op):
            raise _ParseError("malformed object in object stream")
        return value

    # -- stream payload decoding --------------------------------------------

    def stream_payload(self, stream: Stream) -> bytes:
        """Apply the stream's filter chain; _UnsupportedData when outside the subset."""
        filters = self.resolve(stream.dict.get("Filter"))
        if filters is None:
            filters = []
        elif not isinstance(filters, list):
            filters = [filters]
        parms = self.resolve(stream.dict.get("DecodeParms"))
        if parms is None:
            parms = [None] * len(filters)
        elif not isinstance(parms, list):
            parms = [parms]
        parms += [None] * (len(filters) - len(parms))

        data = stream.raw
        for filt, parm in zip(filters, parms):
            filt = self.resolve(filt)
            if filt == "FlateDecode":
                data = self._unpredict(_inflate(data), self.resolve(parm))
            elif filt == "ASCII85Decode":
                data = _ascii85_decode(data)
            elif filt == "ASCIIHexDecode":
                data = _asciihex_decode(data)
            else:
                raise _UnsupportedData(f"filter {filt}")
        return data

    def _unpredict(self, data: bytes, parm: Any) -> bytes:
        if not isinstance(parm, dict):
            return data
        predictor = self.resolve(parm.get("Predictor", 1))
        if predictor in (None, 1):
            return data
        if not isinstance(predictor, int) or predictor < 10:
            raise _UnsupportedData(f"predictor {predictor}")
        columns = self.resolve(parm.get("Columns", 1)) or 1
        colors = self.resolve(parm.get("Colors", 1)) or 1
        bpc = self.resolve(parm.get("BitsPerComponent", 8)) or 8
        return _png_unpredict(data, columns, colors, bpc)

    # -- cross-reference loading --------------------------------------------

    def _load_xref(self) -> None:
        idx = self.data.rfind(b"startxref")
        if idx < 0:
            return
        lex = _Lexer(self.data, idx + len(b"startxref"))
        try:
            tok = lex.next_token()
        except _ParseError:
            return
        if not tok or tok[0] != "num":
            return
        offset = tok[1]
        visited: set[int] = set()
        while isinstance(offset, int) and 0 <= offset < len(self.data) and offset not in visited:
            visited.add(offset)
            try:
                offset = self._load_xref_section(offset)
            except (_ParseError, _UnsupportedData):
                return

    def _load_xref_section(self, offset: int) -> int | None:
        lex = _Lexer(self.data, offset)
        lex._skip_whitespace()
        if self.data[lex.pos : lex.pos + 4] == b"xref":
            lex.pos += 4
            trailer = self._load_xref_table(lex)
        else:
            obj = self._parse_indirect_at(offset)
            if not isinstance(obj, Stream) or obj.dict.get("Type") != "XRef":
                raise _ParseError("startxref does not point at cross-reference data")
            self._load_xref_stream(obj)
            trailer = obj.dict
        for key, value in trailer.items():
            self.trailer.setdefault(key, value)
        hybrid = trailer.get("XRefStm")
        if isinstance(hybrid, int):
            try:
                stm = self._parse_indirect_at(hybrid)
                if isinstance(stm, Stream) and stm.dict.get("Type") == "XRef":
                    self._load_xref_stream(stm)
            except (_ParseError, _UnsupportedData):
                pass
        prev = trailer.get("Prev")
        return prev if isinstance(prev, int) else None

    def _load_xref_table(self, lex: _Lexer) -> dict:
        while True:
            tok = lex.next_token()
            if tok is None:
                raise _ParseError("truncated cross-reference table")
            if tok == ("kw", b"trailer"):
                trailer = _parse_item(lex)
                if not isinstance(trailer, dict):
                    raise _ParseError("malformed trailer dictionary")
                return trailer
            if tok[0] != "num":
                raise _ParseError("malformed cross-reference subsection")
            start = tok[1]
            tok = lex.next_token()
            if not tok or tok[0] != "num":
                raise _ParseError("malformed cross-reference subsection")
            count = tok[1]
            for i in range(count):
                t1, t2, t3 = lex.next_token(), lex.next_token(), lex.next_token()
                if not t1 or not t2 or not t3 or t1[0] != "num" or t2[0] != "num":
                    raise _ParseError("malformed cross-reference entry")
                if t3 == ("kw", b"n"):
                    self.xref.setdefault(start + i, ("off", t1[1]))
                elif t3 == ("kw", b"f"):
                    self.xref.setdefault(start + i, None)
                else:
                    raise _ParseError("malformed cross-reference entry type")

    def _load_xref_stream(self, stm: Stream) -> None:
        payload = self.stream_payload(stm)
        widths = stm.dict.get("W")
        if not isinstance(widths, list) or len(widths) < 3:
            raise _ParseError("cross-reference stream without /W")
        w0, w1, w2 = (int(w) for w in widths[:3])
        size = stm.dict.get("Size", 0)
        index = stm.dict.get("Index", [0, size])
        if not isinstance(index, list) or len(index) % 2:
            raise _ParseError("bad /Index")
        row = w0 + w1 + w2
        if row <= 0:
            raise _ParseError("bad /W widths")
        pos = 0
        for k in range(0, len(index), 2):
            start, count = int(index[k]), int(index[k + 1])
            for i in range(count):
                chunk = payload[pos : pos + row]
                pos += row
                if len(chunk) < row:
                    return
                f0 = int.from_bytes(chunk[:w0], "big") if w0 else 1
                f1 = int.from_bytes(chunk[w0 : w0 + w1], "big")
                f2 = int.from_bytes(chunk[w0 + w1 :], "big")
                num = start + i
                if f0 == 1:
                    self.xref.setdefault(num, ("off", f1))
                elif f0 == 2:
                    self.xref.setdefault(num, ("objstm", f1, f2))
                else:
                    self.xref.setdefault(num, None)

    def _rebuild_xref(self) -> None:
        """Salvage pass: index every 'N G obj' marker in the file."""
        self.xref = {}
        self._cache.clear()
        for match in re.finditer(rb"(\d+)\s+(\d+)\s+obj\b", self.data):
            self.xref[int(match.group(1))] = ("off", match.start())
        idx = self.data.rfind(b"trailer")
        while idx >= 0 and "Root" not in self.trailer:
            try:
                trailer = _parse_item(_Lexer(self.data, idx + len(b"trailer")))
                if isinstance(trailer, dict):
                    for key, value in trailer.items():
                        self.trailer.setdefault(key, value)
            except _ParseError:
                pass
            idx = self.data.rfind(b"trailer", 0, idx)
        if "Root" not in self.trailer:
            for num in sorted(self.xref):
                obj = self.get(num)
                if isinstance(obj, dict) and obj.get("Type") == "Catalog":
                    self.trailer["Root"] = obj
                    break

    # -- document structure --------------------------------------------------

    def page_specs(self, session: "_Session") -> list[tuple[dict, Any]]:
        """(page dictionary, resources) for each leaf of the page tree."""
        specs: list[tuple[dict, Any]] = []
        visited: set[Ref] = set()

        def walk(node_ref: Any, inherited_resources: Any) -> None:
            if isinstance(node_ref, Ref):
                if node_ref in visited:
                    return
                visited.add(node_ref)
            node = self.resolve(node_ref)
            if not isinstance(node, dict) or len(specs) >= 50000:
                return
            resources = node.get("Resources", inherited_resources)
            kids = self.resolve(node.get("Kids"))
            if node.get("Type") == "Page" or (kids is None and "Contents" in node):
                specs.append((node, resources))
            elif isinstance(kids, list):
                for kid in kids:
                    walk(kid, resources)

        root = self.resolve(self.trailer.get("Root"))
        if isinstance(root, dict):
            walk(root.get("Pages"), None)
        if not specs:
            for num in sorted(self.xref):
                obj = self.get(num)
                if isinstance(obj, dict) and obj.get("Type") == "Page":
                    specs.append((obj, obj.get("Resources")))
            if specs:
                session.warn("page tree unreadable; recovered pages by object scan")
        return specs


# ---------------------------------------------------------------------------
# Fonts

class _Session:
    """Collects deduplicated warnings and tracks whether anything was lost."""

    def __init__(self) -> None:
        self.warnings: list[str] = []
        self._seen: set[str] = set()
        self.complete = True

    def warn(self, message: str, lost: bool = False) -> None:
        if message not in self._seen:
            self._seen.add(message)
            self.warnings.append(message)
        if lost:
            self.complete = False


class _Decoder:
    __slots__ = ("width", "table", "label")

    def __init__(self, width: int, table: dict[int, str], label: str) -> None:
        self.width = width
        self.table = table
        self.label = label

    def decode(self, raw: bytes, session: _Session) -> str:
        out: list[str] = []
        w = self.width
        whole = len(raw) - (len(raw) % w)
        for i in range(0, whole, w):
            code = int.from_bytes(raw[i : i + w], "big")
            ch = self.table.get(code)
            if ch is None:
                session.warn(
                    f"font {self.label}: character code {code:#x} has no mapping; dropped",
                    lost=True,
                )
            else:
                out.append(ch)
        if whole != len(raw):
            session.warn(f"font {self.label}: truncated multi-byte code; dropped", lost=True)
        return "".join(out)


def _parse_tounicode(payload: bytes) -> tuple[int, dict[int, str]] | None:
    lex = _Lexer(payload)
    width = 0
    mapping: dict[int, str] = {}
    bucket: list[Any] = []
    mode: str | None = None

    def _decode_dst(dst: bytes) -> str | None:
        try:
            return dst.decode("utf-16-be")
        except UnicodeDecodeError:
            return None

    while True:
        try:
            item = _parse_item(lex)
        except _ParseError:
            return None
        if item is _EOF:
            break
        if not isinstance(item, _Op):
            if mode is not None:
                bucket.append(item)
            continue
        op = item.name
        if op == b"begincodespacerange":
            mode, bucket = "codespace", []
        elif op == b"endcodespacerange":
            for k in range(0, len(bucket) - 1, 2):
                lo = bucket[k]
                if isinstance(lo, bytes):
                    width = max(width, len(lo))
            mode = None
        elif op == b"beginbfchar":
            mode, bucket = "bfchar", []
        elif op == b"endbfchar":
            for k in range(0, len(bucket) - 1, 2):
                src, dst = bucket[k], bucket[k + 1]
                if isinstance(src, bytes) and isinstance(dst, bytes):
                    text = _decode_dst(dst)
                    if text is not None:
                        mapping[int.from_bytes(src, "big")] = text
                        width = max(width, len(src))
            mode = None
        elif op == b"beginbfrange":
            mode, bucket = "bfrange", []
        elif op == b"endbfrange":
            for k in range(0, len(bucket) - 2, 3):
                lo, hi, dst = bucket[k], bucket[k + 1], bucket[k + 2]
                if not isinstance(lo, bytes) or not isinstance(hi, bytes):
                    continue
                lo_i, hi_i = int.from_bytes(lo, "big"), int.from_bytes(hi, "big")
                if hi_i < lo_i or hi_i - lo_i > 0x10000:
                    continue
                width = max(width, len(lo))
                if isinstance(dst, bytes):
                    base = int.from_bytes(dst, "big")
                    for step in range(hi_i - lo_i + 1):
                        encoded = (base + step).to_bytes(max(2, len(dst)), "big")
                        text = _decode_dst(encoded)
                        if text is not None:
                            mapping[lo_i + step] = text
                elif isinstance(dst, list):
                    for step, entry in enumerate(dst[: hi_i - lo_i + 1]):
                        if isinstance(entry, bytes):
                            text = _decode_dst(entry)
                            if text is not None:
                                mapping[lo_i + step] = text
            mode = None
    if not mapping:
        return None
    return (width or 1, mapping)


def _build_decoder(doc: _Document, font: Any, label: str, session: _Session) -> _Decoder | None:
    if not isinstance(font, dict):
        session.warn(f"font {label} not found in page resources; text dropped", lost=True)
        return None
    tounicode = doc.resolve(font.get("ToUnicode"))
    if isinstance(tounicode, Stream):
        try:
            parsed = _parse_tounicode(doc.stream_payload(tounicode))
        except _UnsupportedData as exc:
            parsed = None
            session.warn(f"font {label}: ToUnicode unreadable ({exc})")
        if parsed is not None:
            width, table = parsed
            return _Decoder(width, table, label)
        session.warn(f"font {label}: ToUnicode CMap unusable")
    if font.get("Subtype") == "Type0":
        session.warn(f"font {label}: composite font without usable ToUnicode; text dropped", lost=True)
        return None
    encoding = doc.resolve(font.get("Encoding"))
    differences = None
    if isinstance(encoding, dict):
        differences = doc.resolve(encoding.get("Differences"))
        encoding = doc.resolve(encoding.get("BaseEncoding"))
    if encoding is None or encoding == "StandardEncoding":
        table = _STANDARD_ENCODING
    elif encoding == "WinAnsiEncoding":
        table = _WINANSI_ENCODING
    else:
        session.warn(f"font {label}: unsupported encoding {encoding}; text dropped", lost=True)
        return None
    if isinstance(differences, list):
        table = dict(table)
        code = 0
        for entry in differences:
            if isinstance(entry, bool):
                continue
            if isinstance(entry, int):
                code = entry
            elif isinstance(entry, Name):
                glyph = _GLYPH_LIST.get(str(entry))
                if glyph is None:
                    table.pop(code, None)  # unknown glyph: leave code unmapped
                else:
                    table[code] = glyph
                code += 1
    return _Decoder(1, table, label)


def _font_resolver(doc: _Document, resources: Any, session: _Session):
    resources = doc.resolve(resources)
    fonts = doc.resolve(resources.get("Font")) if isinstance(resources, dict) else None
    cache: dict[str, _Decoder | None] = {}

    def lookup(name: str) -> _Decoder | None:
        if name not in cache:
            entry = doc.resolve(fonts.get(name)) if isinstance(fonts, dict) else None
            cache[name] = _build_decoder(doc, entry, name, session)
        return cache[name]

    return lookup


# ---------------------------------------------------------------------------
# Content interpretation

def _skip_inline_image(lex: _Lexer) -> None:
    data = lex.data
    pos = lex.pos
    while True:
        idx = data.find(b"EI", pos)
        if idx < 0:
            lex.pos = len(data)
            return
        before_ok = idx == 0 or data[idx - 1] in _WHITESPACE
        after = data[idx + 2 : idx + 3]
        after_ok = after == b"" or after[0] in _REGULAR_STOP
        if before_ok and after_ok:
            lex.pos = idx + 2
            return
        pos = idx + 2


def _interpret_content(content: bytes, font_lookup, session: _Session) -> list[str]:
    lex = _Lexer(content)
    operands: list[Any] = []
    lines: list[str] = []
    buf: list[str] = []
    decoder: _Decoder | None = None
    font_selected = False

    def flush() -> None:
        if buf:
            text = "".join(buf)
            buf.clear()
            if text:
                lines.append(text)

    def show(raw: Any) -> None:
        if not isinstance(raw, bytes):
            return
        if not font_selected:
            session.warn("text shown before any font was selected; dropped", lost=True)
            return
        if decoder is not None:
            buf.append(decoder.decode(raw, session))

    while True:
        try:
            item = _parse_item(lex)
        except _ParseError as exc:
            session.warn(f"content stream damaged ({exc}); remainder skipped", lost=True)
            break
        if item is _EOF:
            break
        if not isinstance(item, _Op):
            operands.append(item)
            continue
        op = item.name
        if op == b"Tf":
            if len(operands) >= 2 and isinstance(operands[-2], Name):
                decoder = font_lookup(str(operands[-2]))
                font_selected = True
        elif op == b"Tj":
            if operands:
                show(operands[-1])
        elif op == b"'":
            flush()
            if operands:
                show(operands[-1])
        elif op == b'"':
            flush()
            if operands:
                show(operands[-1])
        elif op == b"TJ":
            if operands and isinstance(operands[-1], list):
                for element in operands[-1]:
                    show(element)  # numbers adjust spacing only: no characters
        elif op in (b"BT", b"ET"):
            flush()
        elif op == b"BI":
            _skip_inline_image(lex)
        operands.clear()
    flush()
    return lines


def _page_content(doc: _Document, page: dict, session: _Session) -> bytes:
    contents = doc.resolve(page.get("Contents"))
    items = contents if isinstance(contents, list) else [contents]
    parts: list[bytes] = []
    for item in items:
        stream = doc.resolve(item)
        if stream is None:
            continue
        if not isinstance(stream, Stream):
            session.warn("page /Contents entry is not a stream; skipped", lost=True)
            continue
        try:
            parts.append(doc.stream_payload(stream))
        except _UnsupportedData as exc:
            session.warn(f"page content skipped: unsupported {exc}", lost=True)
    return b"\n".join(parts)


def extract_pdf(data: bytes) -> ExtractedText:
    """Extract the text a PDF shows, page by page."""
    header = data[:1024].find(b"%PDF-")
    if header < 0:
        raise ExtractError("CorruptContainer", "missing %PDF header")
    if header:
        data = data[header:]

    try:
        doc = _Document(data)
    except _ParseError as exc:
        raise ExtractError("CorruptContainer", str(exc)) from None

    session = _Session()
    page_texts: list[str] = []
    line_count = 0
    for page, resources in doc.page_specs(session):
        content = _page_content(doc, page, session)
        lines = _interpret_content(content, _font_resolver(doc, resources, session), session)
        line_count += len(lines)
        if lines:
            page_texts.append("\n".join(lines))

    text = "\n".join(page_texts)
    if not text and not session.complete:
        raise ExtractError(
            "UnsupportedFeature",
            "no page yielded text: " + "; ".join(session.warnings),
        )
    return ExtractedText(
        text=text,
        paragraph_count=line_count,
        warnings=session.warnings,
        source_format="pdf",
        all_text_recovered=session.complete,
    )
