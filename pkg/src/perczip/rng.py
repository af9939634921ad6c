"""Counter-based randomness keyed by (seed, cell index).

Every random decision in the library is a pure function of a 64-bit seed
and an integer key, so configurations are order-independent: a lattice
cell sampled lazily during a walk gets the same value it would get in a
bulk sweep, and ensembles parallelize without shared state.
"""

from __future__ import annotations

import numpy as np

_MASK = np.uint64(0xFFFFFFFFFFFFFFFF)
_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)


def _mix(x: np.uint64) -> np.uint64:
    x = (x + _GAMMA) & _MASK
    z = x
    z = ((z ^ (z >> np.uint64(30))) * _M1) & _MASK
    z = ((z ^ (z >> np.uint64(27))) * _M2) & _MASK
    return z ^ (z >> np.uint64(31))


def hash_u64(seed: int, *keys: int) -> int:
    """Mix a seed and integer keys into a uniform 64-bit word."""
    h = np.uint64(seed & 0xFFFFFFFFFFFFFFFF)
    with np.errstate(over="ignore"):
        for k in keys:
            h = _mix(h ^ np.uint64(k & 0xFFFFFFFFFFFFFFFF))
    return int(h)


def hash_bit(seed: int, *keys: int) -> int:
    """Fair coin derived from (seed, keys)."""
    return hash_u64(seed, *keys) >> 63


def hash_bits_grid(seed: int, key0: int, ij: np.ndarray) -> np.ndarray:
    """Vectorized fair coins for an array of packed cell keys."""
    with np.errstate(over="ignore"):
        h = np.uint64(seed & 0xFFFFFFFFFFFFFFFF) ^ np.uint64(key0 & 0xFFFFFFFFFFFFFFFF)
        x = (ij.astype(np.uint64) ^ h) + _GAMMA
        z = x
        z = (z ^ (z >> np.uint64(30))) * _M1
        z = (z ^ (z >> np.uint64(27))) * _M2
        z = z ^ (z >> np.uint64(31))
    return (z >> np.uint64(63)).astype(np.uint8)


def derive_seed(seed: int, *keys: int) -> int:
    """Child seed for a labelled subtask (sample index, purpose tag)."""
    return hash_u64(seed, 0x5EEDD0000000000, *keys)


def pack_cell(i: int, j: int) -> int:
    """Pack signed lattice coordinates into one key."""
    return ((i & 0xFFFFFFFF) << 32) | (j & 0xFFFFFFFF)
