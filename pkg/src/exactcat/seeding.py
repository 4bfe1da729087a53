"""Deterministic per-sample randomness.

Each sample derives its own ``random.Random`` from the run seed plus a label
path, via SHA-256.  Results are therefore independent of evaluation order and
identical across platforms and worker counts.
"""

from __future__ import annotations

import hashlib
import random

DEFAULT_SEED = 42


def child_rng(seed: int, *path) -> random.Random:
    material = repr((int(seed),) + tuple(path)).encode("utf-8")
    digest = hashlib.sha256(material).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))
