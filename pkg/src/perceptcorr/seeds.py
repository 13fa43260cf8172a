"""Deterministic seed derivation.

Every random draw in the package flows through a generator obtained from
``spawn(master_seed, *identity)``. The identity parts (config ids, condition
names, repetition indices) are hashed into a 64-bit stream key, so results are
independent of scheduling order: a worker can evaluate any subset of tasks in
any order and reproduce exactly the same draws.
"""

from __future__ import annotations

import hashlib

import numpy as np


def derive_seed(master_seed: int, *parts) -> int:
    """Derive a 64-bit seed from a master seed and a stable identity tuple."""
    text = repr((int(master_seed),) + tuple(str(p) for p in parts))
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "little")


def spawn(master_seed: int, *parts) -> np.random.Generator:
    """Return a generator keyed to (master_seed, *parts)."""
    return np.random.default_rng(derive_seed(master_seed, *parts))
