"""Checksummed JSON cache for the long enumerations.

Directory from HEXAMAGIC_CACHE (default ./.hexamagic).  Every file is a
single JSON object with the header field "hexamagic_cache_v1", the
payload and its SHA-256; corrupted or mismatched files are detected,
reported on stderr and rebuilt.  Writes are write-then-rename.
"""
from __future__ import annotations

import hashlib
import json
import os
import sys

FORMAT = "hexamagic_cache_v1"


def _payload_digest(payload) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


class Cache:
    def __init__(self, root: str | None = None, enabled: bool = True):
        self.root = root or os.environ.get("HEXAMAGIC_CACHE", ".hexamagic")
        self.enabled = enabled
        self.hits = 0
        self.misses = 0

    def _path(self, name: str) -> str:
        return os.path.join(self.root, f"{name}.json")

    def load(self, name: str):
        if not self.enabled:
            return None
        path = self._path(name)
        try:
            with open(path) as f:
                obj = json.load(f)
        except (OSError, json.JSONDecodeError):
            self.misses += 1
            return None
        if obj.get("format") != FORMAT or "payload" not in obj:
            print(f"cache: ignoring {path} (unknown format)", file=sys.stderr)
            self.misses += 1
            return None
        if _payload_digest(obj["payload"]) != obj.get("sha256"):
            print(f"cache: checksum mismatch in {path}, recomputing", file=sys.stderr)
            self.misses += 1
            return None
        self.hits += 1
        return obj["payload"]

    def store(self, name: str, payload) -> None:
        if not self.enabled:
            return
        os.makedirs(self.root, exist_ok=True)
        path = self._path(name)
        obj = {"format": FORMAT, "name": name, "sha256": _payload_digest(payload), "payload": payload}
        tmp = path + ".tmp"
        with open(tmp, "w") as f:
            json.dump(obj, f)
        os.replace(tmp, path)

    def get(self, name: str, builder, encode, decode):
        """Load-or-build: builder() -> value, encode(value) -> payload,
        decode(payload) -> value."""
        payload = self.load(name)
        if payload is not None:
            try:
                return decode(payload)
            except Exception as exc:  # stale schema etc.
                print(f"cache: failed to decode {name}: {exc}", file=sys.stderr)
        value = builder()
        self.store(name, encode(value))
        return value
