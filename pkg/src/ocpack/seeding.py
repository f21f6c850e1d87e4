"""Deterministic seed derivation for nested randomized procedures.

Child seeds are derived by hashing the parent seed together with a branch
label path (e.g. ("rep", 3) or ("shrink", 7)). SHA-256 is used instead of the
builtin hash() because the latter is randomized per process and would break
bit-reproducibility of seeded runs.
"""

import hashlib

MAX_SEED = (1 << 64) - 1


def check_seed(seed: int) -> int:
    """Validate and return a 64-bit unsigned seed."""
    if not isinstance(seed, int) or isinstance(seed, bool):
        raise ValueError(f"seed must be an integer, got {seed!r}")
    if not 0 <= seed <= MAX_SEED:
        raise ValueError(f"seed must fit in 64 unsigned bits, got {seed}")
    return seed


def derive_seed(seed: int, *labels: object) -> int:
    """Derive a 64-bit child seed from ``seed`` and a branch label path."""
    check_seed(seed)
    digest = hashlib.sha256(repr((seed,) + labels).encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")
