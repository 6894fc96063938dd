"""Partitions, hooks, and the rectangle subsets indexing the decompositions.

A partition is a plain tuple of weakly decreasing positive ints; the empty
tuple is the empty partition.  Trailing zeros are never stored, and the i-th
part of a short partition reads as 0.
"""

from __future__ import annotations

import enum
from typing import Iterable, Iterator

Partition = tuple[int, ...]

EMPTY: Partition = ()


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate and canonicalize: weakly decreasing, positive, no stored zeros."""
    lam = tuple(int(p) for p in parts)
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    for i, p in enumerate(lam):
        if p < 1:
            raise ValueError(f"partition parts must be positive, got {lam}")
        if i and lam[i - 1] < p:
            raise ValueError(f"parts must be weakly decreasing, got {lam}")
    return lam


def part(lam: Partition, i: int) -> int:
    """The i-th part (1-indexed), 0 beyond the stored length."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def size(lam: Partition) -> int:
    return sum(lam)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return EMPTY
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def contains(outer: Partition, inner: Partition) -> bool:
    """True when inner fits inside outer row by row."""
    return len(inner) <= len(outer) and all(
        o >= i for o, i in zip(outer, inner)
    )


def in_hook(lam: Partition, M: int, N: int) -> bool:
    """True iff the diagram fits the hook: the (M+1)-th part is at most N."""
    if M < 0 or N < 0:
        raise ValueError("hook arms must be nonnegative")
    return part(lam, M + 1) <= N


def add(mu: Partition, nu: Partition) -> Partition:
    n = max(len(mu), len(nu))
    return tuple(part(mu, i) + part(nu, i) for i in range(1, n + 1))


def partitions_of(
    n: int, max_part: int | None = None, max_len: int | None = None
) -> Iterator[Partition]:
    """All partitions of n, parts bounded by max_part, length by max_len.

    Yields in lexicographically decreasing order of the part sequence.
    """
    if n < 0:
        return
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n

    def rec(remaining: int, bound: int, slots: int, prefix: tuple[int, ...]):
        if remaining == 0:
            yield prefix
            return
        if slots == 0:
            return
        for p in range(min(bound, remaining), 0, -1):
            yield from rec(remaining - p, p, slots - 1, prefix + (p,))

    yield from rec(n, max_part, max_len, EMPTY)


def grevlex_key(lam: Partition) -> tuple:
    """Graded order key: by size, then largest parts first within a grade."""
    return (sum(lam), tuple(-p for p in lam))


def partitions_upto(max_size: int, max_len: int | None = None) -> list[Partition]:
    out: list[Partition] = []
    for n in range(max_size + 1):
        out.extend(partitions_of(n, max_len=max_len))
    out.sort(key=grevlex_key)
    return out


class PartitionClass(enum.Enum):
    ALL = "all"
    EVEN_ROWS = "even_rows"
    EVEN_COLUMNS = "even_columns"


def in_class(lam: Partition, tag: PartitionClass) -> bool:
    if tag is PartitionClass.ALL:
        return True
    if tag is PartitionClass.EVEN_ROWS:
        return all(p % 2 == 0 for p in lam)
    if tag is PartitionClass.EVEN_COLUMNS:
        # columns all even <=> rows come in equal pairs
        return len(lam) % 2 == 0 and all(
            lam[i] == lam[i + 1] for i in range(0, len(lam), 2)
        )
    raise ValueError(f"unknown class {tag!r}")


def enumerate_class(tag: PartitionClass, max_size: int) -> list[Partition]:
    if max_size < 0:
        raise ValueError("max_size must be nonnegative")
    return [lam for lam in partitions_upto(max_size) if in_class(lam, tag)]


class RectSubset(enum.Enum):
    BOX = "box"
    COLPAIRED = "colpaired"
    EVENROW = "evenrow"


def _check_rect(m: int, a: int) -> None:
    if m < 1 or a < 1:
        raise ValueError(f"rectangle sides must be >= 1, got m={m}, a={a}")


def in_rect_subset(tag: RectSubset, m: int, a: int, lam: Partition) -> bool:
    """Pointwise membership check against the defining inequality chain."""
    _check_rect(m, a)
    rows = [part(lam, i) for i in range(1, a + 1)]
    if len(lam) > a or (rows and rows[0] > m):
        return False
    if tag is RectSubset.BOX:
        return True
    if tag is RectSubset.COLPAIRED:
        if a % 2 == 1:
            if rows[0] != m:
                return False
            pairs = range(1, a - 1, 2)
        else:
            pairs = range(0, a - 1, 2)
        return all(rows[i] == rows[i + 1] for i in pairs)
    if tag is RectSubset.EVENROW:
        if m % 2 == 1:
            return all(r % 2 == 1 for r in rows)  # forces every r >= 1
        return all(r % 2 == 0 for r in rows)
    raise ValueError(f"unknown subset {tag!r}")


def box_partitions(m: int, a: int) -> list[Partition]:
    """All partitions inside the a-by-m rectangle, graded order."""
    _check_rect(m, a)
    out: list[Partition] = []

    def rec(row: int, bound: int, prefix: Partition):
        out.append(prefix)
        if row == a:
            return
        for p in range(bound, 0, -1):
            rec(row + 1, p, prefix + (p,))

    rec(0, m, EMPTY)
    return sorted(set(out), key=grevlex_key)


def enumerate_rect_subset(tag: RectSubset, m: int, a: int) -> list[Partition]:
    _check_rect(m, a)
    return [lam for lam in box_partitions(m, a) if in_rect_subset(tag, m, a, lam)]
