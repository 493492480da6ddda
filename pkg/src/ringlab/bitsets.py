"""Subsets of 0..n-1 as Python int bitmasks, with numpy conversions."""

from __future__ import annotations

from typing import Iterable

import numpy as np


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << int(i)
    return m


def mask_to_bool(mask: int, n: int) -> np.ndarray:
    raw = mask.to_bytes((n + 7) // 8, "little")
    bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
    return bits[:n].astype(bool)


def bool_to_mask(vec: np.ndarray) -> int:
    packed = np.packbits(vec.astype(np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def mask_to_indices(mask: int, n: int) -> np.ndarray:
    return np.flatnonzero(mask_to_bool(mask, n)).astype(np.int32)


def indices_to_mask(arr: np.ndarray) -> int:
    return mask_of(int(x) for x in np.asarray(arr).ravel())


def popcount(mask: int) -> int:
    return mask.bit_count()


def contains(mask: int, i: int) -> bool:
    return bool(mask >> int(i) & 1)


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0
