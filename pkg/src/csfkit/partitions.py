"""Integer partitions as plain tuples, weakly decreasing.

A partition is represented as a tuple of positive ints sorted in weakly
decreasing order; the empty tuple is the (unique) partition of 0.  Tuples in
this form serve as keys everywhere a subset type or an edge-cut image is
stored.
"""

from __future__ import annotations

from typing import Iterable

Partition = tuple[int, ...]


def rearrange(values: Iterable[int]) -> Partition:
    """Sort positive integers into a weakly decreasing partition."""
    parts = tuple(sorted(values, reverse=True))
    if parts and parts[-1] < 1:
        raise ValueError(f"partition parts must be positive, got {parts[-1]}")
    return parts


def is_partition(parts: tuple) -> bool:
    """True if ``parts`` is a weakly decreasing tuple of positive ints."""
    return all(isinstance(p, int) and p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def degree(p: Partition) -> int:
    """Sum of the parts (the number of vertices a subset type accounts for)."""
    return sum(p)


def compare_balanced(a: Partition, b: Partition) -> int:
    """Order two 2-part partitions of the same n by their smaller part.

    Returns -1, 0 or 1.  (n-i, i) ranks above (n-j, j) exactly when i > j,
    so among the edge cuts of a tree the more balanced split is the greater.
    """
    if len(a) != 2 or len(b) != 2:
        raise ValueError(f"only 2-part partitions are comparable: {a} vs {b}")
    if sum(a) != sum(b):
        raise ValueError(f"cannot compare partitions of different degree: {a} vs {b}")
    return (a[1] > b[1]) - (a[1] < b[1])


def partition_key(p: Partition) -> str:
    """Comma-joined parts, e.g. (4,3,2,1,1) -> "4,3,2,1,1"; () -> ""."""
    return ",".join(map(str, p))


def parse_partition_key(text: str) -> Partition:
    """Inverse of :func:`partition_key`; rejects malformed keys."""
    if text == "":
        return ()
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"malformed partition key {text!r}") from None
    if not is_partition(parts):
        raise ValueError(f"partition key {text!r} is not weakly decreasing positive")
    return parts


def descending_key_order(keys: Iterable[Partition]) -> list[Partition]:
    """Partitions sorted descending lexicographically, the file/print order."""
    return sorted(keys, reverse=True)
