"""On-disk JSON result cache for the CLI.

One JSON document ``{"version": ..., "entries": {key: value}}``. A version
mismatch or unreadable file is treated as empty. Writes go through a temp
file and ``os.replace`` under an advisory ``flock`` on a sibling lock file.
"""

from __future__ import annotations

import contextlib
import fcntl
import json
import os
import tempfile

CACHE_VERSION = "wilfkit-cache-1"


def make_key(op: str, args: dict) -> str:
    return json.dumps([op, args], sort_keys=True, separators=(",", ":"))


@contextlib.contextmanager
def _locked(path: str, exclusive: bool):
    with open(path + ".lock", "a") as fh:
        fcntl.flock(fh, fcntl.LOCK_EX if exclusive else fcntl.LOCK_SH)
        try:
            yield
        finally:
            fcntl.flock(fh, fcntl.LOCK_UN)


class ResultCache:
    def __init__(self, path: str):
        self.path = path

    def _read(self) -> dict:
        try:
            with open(self.path) as fh:
                doc = json.load(fh)
        except (OSError, ValueError):
            return {}
        if not isinstance(doc, dict) or doc.get("version") != CACHE_VERSION:
            return {}
        entries = doc.get("entries")
        return entries if isinstance(entries, dict) else {}

    def get(self, key: str):
        with _locked(self.path, exclusive=False):
            return self._read().get(key)

    def put(self, key: str, value) -> None:
        with _locked(self.path, exclusive=True):
            entries = self._read()
            entries[key] = value
            directory = os.path.dirname(os.path.abspath(self.path))
            fd, tmp = tempfile.mkstemp(dir=directory, prefix=".wilfkit-cache-")
            try:
                with os.fdopen(fd, "w") as fh:
                    json.dump({"version": CACHE_VERSION, "entries": entries}, fh, sort_keys=True)
                os.replace(tmp, self.path)
            except BaseException:
                with contextlib.suppress(OSError):
                    os.unlink(tmp)
                raise
