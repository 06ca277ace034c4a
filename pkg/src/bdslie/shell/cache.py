"""Persistent, content-addressed decomposition cache.

Layout under the cache root (``$BDSLIE_CACHE_DIR``, default
``$XDG_CACHE_HOME/bdslie`` or ``~/.cache/bdslie``)::

    v1/<operation>/<sha256[:2]>/<sha256>.json

The key is the SHA-256 of the canonical JSON of
``[schema version, datum fingerprint, operation, arguments]``.  Entries are
written to a temporary file in the same directory and renamed into place, so
readers never see partial files; unreadable entries are treated as misses
and overwritten.  Setting ``BDSLIE_NO_CACHE=1`` disables the cache.
"""
from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path
from typing import Callable

from .serialize import SCHEMA_VERSION

LAYOUT = "v1"


def cache_root() -> Path:
    env = os.environ.get("BDSLIE_CACHE_DIR")
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "bdslie"


def cache_disabled() -> bool:
    return os.environ.get("BDSLIE_NO_CACHE", "").strip().lower() not in ("", "0", "false", "no")


class DecompositionCache:
    def __init__(self, root: Path | str | None, enabled: bool = True):
        self.root = Path(root) if root is not None else None
        self.enabled = enabled and root is not None

    @staticmethod
    def key(fingerprint: str, op: str, args) -> str:
        blob = json.dumps([SCHEMA_VERSION, fingerprint, op, args], sort_keys=True,
                          separators=(",", ":"), ensure_ascii=True)
        return hashlib.sha256(blob.encode()).hexdigest()

    def path(self, op: str, key: str) -> Path:
        return self.root / LAYOUT / op / key[:2] / f"{key}.json"

    def get(self, fingerprint: str, op: str, args):
        if not self.enabled:
            return None
        key = self.key(fingerprint, op, args)
        try:
            obj = json.loads(self.path(op, key).read_text(encoding="utf-8"))
        except (OSError, ValueError):
            return None
        if not isinstance(obj, dict) or obj.get("key") != key or "value" not in obj:
            return None
        return obj["value"]

    def put(self, fingerprint: str, op: str, args, value) -> None:
        if not self.enabled:
            return
        key = self.key(fingerprint, op, args)
        target = self.path(op, key)
        try:
            target.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=target.parent, prefix=".tmp-", suffix=".json")
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump({"key": key, "value": value}, fh, sort_keys=True)
            os.replace(tmp, target)
        except OSError:
            # a read-only or full cache directory must not break the computation
            try:
                os.unlink(tmp)
            except (OSError, UnboundLocalError):
                pass

    def memo(self, fingerprint: str, op: str, args, compute: Callable[[], object]):
        """Return the cached value or compute, store and return it.

        ``compute`` must return plain JSON data; the value is round-tripped
        through JSON on a miss too, so cold and warm runs see the same objects.
        """
        hit = self.get(fingerprint, op, args)
        if hit is not None:
            return hit
        value = json.loads(json.dumps(compute()))
        self.put(fingerprint, op, args, value)
        return value


def default_cache() -> DecompositionCache:
    return DecompositionCache(cache_root(), enabled=not cache_disabled())
