"""Small helpers for subsets of {0..n-1} stored as int bitmasks."""

from __future__ import annotations

from typing import Iterable, Iterator

Mask = int


def from_members(members: Iterable[int]) -> Mask:
    m = 0
    for x in members:
        m |= 1 << x
    return m


def members(mask: Mask) -> tuple[int, ...]:
    out = []
    x = 0
    while mask:
        if mask & 1:
            out.append(x)
        mask >>= 1
        x += 1
    return tuple(out)


def iter_bits(mask: Mask) -> Iterator[int]:
    x = 0
    while mask:
        if mask & 1:
            yield x
        mask >>= 1
        x += 1


def full_mask(n: int) -> Mask:
    return (1 << n) - 1


def popcount(mask: Mask) -> int:
    return mask.bit_count()


def subsets(universe: Mask) -> Iterator[Mask]:
    """All submasks of `universe` in ascending numeric order, including 0."""
    # Ascending order matters: callers rely on it for reproducible output.
    sub = 0
    while True:
        yield sub
        if sub == universe:
            return
        sub = (sub - universe) & universe
