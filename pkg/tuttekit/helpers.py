"""Common helper functions for subsets encoded as bitmasks."""
from itertools import combinations
from typing import Iterable, Iterator, List

import numpy as np


def popcount(mask: int) -> int:
    return bin(mask).count('1')


def elements(mask: int) -> List[int]:
    """Indices of the set bits of `mask`, ascending."""
    result = []
    index = 0
    while mask:
        if mask & 1:
            result.append(index)
        mask >>= 1
        index += 1
    return result


def mask_of(items: Iterable[int]) -> int:
    mask = 0
    for i in items:
        mask |= 1 << i
    return mask


def subsets_of_size(size: int, k: int) -> Iterator[int]:
    for combo in combinations(range(size), k):
        yield mask_of(combo)


def all_masks(size: int) -> np.ndarray:
    return np.arange(1 << size, dtype=np.int64)


def popcounts(masks: np.ndarray, size: int) -> np.ndarray:
    """Cardinality of each mask in `masks` (elements below `size`)."""
    sizes = np.zeros(len(masks), dtype=np.int16)
    for e in range(size):
        sizes += ((masks >> e) & 1).astype(np.int16)
    return sizes


def mask_sizes(size: int) -> np.ndarray:
    """Cardinality of every subset of a `size` element set, by mask."""
    return popcounts(all_masks(size), size)


def format_mask(mask: int) -> str:
    return '{' + ','.join(str(e) for e in elements(mask)) + '}'
