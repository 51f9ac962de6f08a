"""Small helpers for subsets encoded as integer bitmasks (bit i <-> index i)."""

from __future__ import annotations

from collections.abc import Iterable, Iterator


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def members(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask: int) -> int:
    return mask.bit_count()


def submasks(mask: int) -> Iterator[int]:
    """Yield every submask of ``mask`` (including 0 and ``mask``), descending."""
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


def expand(compact: int, positions: list[int] | tuple[int, ...]) -> int:
    """Map a mask over ``range(len(positions))`` onto the given bit positions."""
    out = 0
    for k, pos in enumerate(positions):
        if compact >> k & 1:
            out |= 1 << pos
    return out


def complement_positions(m: int, mask: int) -> list[int]:
    return [i for i in range(m) if not mask >> i & 1]
