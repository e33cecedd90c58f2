"""Minimal reader for OLE compound files (the container behind legacy .doc).

Only what the scanner needs: enumerate stream entries and return their
bytes. Storage hierarchy is flattened; the first entry wins on duplicate
names. Structural damage raises OleError, which callers treat as
"nothing recoverable" rather than a hard failure.
"""

from __future__ import annotations

import struct

MAGIC = b"\xd0\xcf\x11\xe0\xa1\xb1\x1a\xe1"

# Sentinel sector numbers in FAT chains.
_ENDOFCHAIN = 0xFFFFFFFE
_FREESECT = 0xFFFFFFFF
_FATSECT = 0xFFFFFFFD
_DIFSECT = 0xFFFFFFFC


class OleError(Exception):
    pass


def _u32s(data: bytes) -> list[int]:
    return list(struct.unpack(f"<{len(data) // 4}I", data[: len(data) // 4 * 4]))


class _Container:
    def __init__(self, data: bytes) -> None:
        if data[:8] != MAGIC:
            raise OleError("missing OLE magic")
        if len(data) < 512:
            raise OleError("truncated header")
        (sector_shift, mini_shift) = struct.unpack_from("<HH", data, 30)
        if sector_shift not in (9, 12) or mini_shift != 6:
            raise OleError(f"unsupported sector shift {sector_shift}/{mini_shift}")
        self.data = data
        self.sector_size = 1 << sector_shift
        self.mini_size = 1 << mini_shift
        (self.n_fat_sectors,) = struct.unpack_from("<I", data, 44)
        (self.first_dir_sector,) = struct.unpack_from("<I", data, 48)
        (self.mini_cutoff,) = struct.unpack_from("<I", data, 56)
        (self.first_minifat_sector,) = struct.unpack_from("<I", data, 60)
        (self.n_minifat_sectors,) = struct.unpack_from("<I", data, 64)
        (self.first_difat_sector,) = struct.unpack_from("<I", data, 68)
        self.fat = self._load_fat()
        self.minifat: list[int] | None = None

    def _sector(self, n: int) -> bytes:
        start = (n + 1) * self.sector_size
        if start >= len(self.data):
            raise OleError(f"sector {n} beyond end of file")
        return self.data[start : start + self.sector_size]

    def _load_fat(self) -> list[int]:
        difat = _u32s(self.data[76:512])
        sector = self.first_difat_sector
        hops = 0
        while sector not in (_ENDOFCHAIN, _FREESECT):
            entries = _u32s(self._sector(sector))
            difat.extend(entries[:-1])
            sector = entries[-1]
            hops += 1
            if hops > len(self.data) // self.sector_size + 1:
                raise OleError("DIFAT chain loops")
        fat: list[int] = []
        for fat_sector in difat:
            if fat_sector in (_FREESECT, _ENDOFCHAIN):
                continue
            fat.extend(_u32s(self._sector(fat_sector)))
        return fat

    def _chain(self, start: int, fat: list[int]) -> list[int]:
        chain: list[int] = []
        sector = start
        while sector not in (_ENDOFCHAIN, _FREESECT):
            if sector >= len(fat) or sector in (_FATSECT, _DIFSECT):
                raise OleError(f"broken chain at sector {sector}")
            chain.append(sector)
            if len(chain) > len(fat):
                raise OleError("FAT chain loops")
            sector = fat[sector]
        return chain

    def _read_chain(self, start: int, size: int) -> bytes:
        blob = b"".join(self._sector(s) for s in self._chain(start, self.fat))
        return blob[:size]

    def _load_minifat(self) -> list[int]:
        if self.minifat is None:
            raw = b"".join(self._sector(s) for s in self._chain(self.first_minifat_sector, self.fat))
            self.minifat = _u32s(raw)
        return self.minifat

    def _read_mini_chain(self, start: int, size: int, mini_stream: bytes) -> bytes:
        minifat = self._load_minifat()
        parts = []
        sector = start
        hops = 0
        while sector not in (_ENDOFCHAIN, _FREESECT):
            if sector >= len(minifat):
                raise OleError(f"broken mini chain at {sector}")
            offset = sector * self.mini_size
            parts.append(mini_stream[offset : offset + self.mini_size])
            sector = minifat[sector]
            hops += 1
            if hops > len(minifat) + 1:
                raise OleError("mini FAT chain loops")
        return b"".join(parts)[:size]

    def directory(self) -> list[tuple[str, int, int, int]]:
        """(name, object type, start sector, size) per 128-byte entry."""
        raw = b"".join(self._sector(s) for s in self._chain(self.first_dir_sector, self.fat))
        entries = []
        for off in range(0, len(raw) - 127, 128):
            name_len = struct.unpack_from("<H", raw, off + 64)[0]
            obj_type = raw[off + 66]
            if obj_type == 0 or name_len < 2 or name_len > 64:
                continue
            name = raw[off : off + name_len - 2].decode("utf-16-le", errors="replace")
            start = struct.unpack_from("<I", raw, off + 116)[0]
            size = struct.unpack_from("<Q", raw, off + 120)[0]
            if self.sector_size == 512:
                size &= 0xFFFFFFFF
            entries.append((name, obj_type, start, size))
        return entries


def stream_names(data: bytes) -> list[str]:
    """Names of all stream entries, without reading their contents."""
    return [name for name, obj_type, _, _ in _Container(data).directory() if obj_type == 2]


def read_streams(data: bytes) -> dict[str, bytes]:
    """Map stream name to content for every stream in the container."""
    box = _Container(data)
    root_start = root_size = None
    streams: list[tuple[str, int, int]] = []
    for name, obj_type, start, size in box.directory():
        if obj_type == 5:
            root_start, root_size = start, size
        elif obj_type == 2:
            streams.append((name, start, size))

    out: dict[str, bytes] = {}
    mini_stream: bytes | None = None
    for name, start, size in streams:
        if size == 0:
            content = b""
        elif size < box.mini_cutoff:
            if mini_stream is None:
                if root_start is None:
                    raise OleError("mini stream without root entry")
                mini_stream = box._read_chain(root_start, root_size or 0)
            content = box._read_mini_chain(start, size, mini_stream)
        else:
            content = box._read_chain(start, size)
        out.setdefault(name, content)
    return out
