"""Shared test helpers."""

import os
from datetime import datetime, timezone


def set_mtime(path, iso: str) -> None:
    """Stamp a file's mtime with a UTC timestamp given as ISO text."""
    when = datetime.fromisoformat(iso).replace(tzinfo=timezone.utc).timestamp()
    os.utime(path, (when, when))
