"""Littlewood-Richardson coefficients by lattice-word tableau counting.

The coefficient of S_lam in S_mu * S_nu is the number of column-strict skew
tableaux of shape lam/mu with content nu whose reverse reading word (right to
left along each row, rows top to bottom) is a lattice word: every prefix
contains at least as many i's as (i+1)'s.
"""

from __future__ import annotations

from functools import lru_cache

from .partitions import (
    Partition,
    PartitionClass,
    RectSubset,
    as_partition,
    box_partitions,
    contains,
    in_class,
    in_rect_subset,
    part,
    size,
)


@lru_cache(maxsize=None)
def lr_coeff(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Multiplicity of S_lam in S_mu * S_nu; 0 on any size or shape mismatch."""
    lam = as_partition(lam)
    mu = as_partition(mu)
    nu = as_partition(nu)
    if size(lam) != size(mu) + size(nu):
        return 0
    if not contains(lam, mu):
        return 0
    if not nu:
        return 1  # lam == mu is forced by the size check
    letters = len(nu)
    cells = [
        (i, j)
        for i in range(len(lam))
        for j in range(lam[i] - 1, part(mu, i + 1) - 1, -1)
    ]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (letters + 1)

    def place(pos: int) -> int:
        if pos == len(cells):
            return 1
        i, j = cells[pos]
        right = filling.get((i, j + 1))
        above = filling.get((i - 1, j)) if i and j >= part(mu, i) else None
        total = 0
        for v in range(1, letters + 1):
            if counts[v] >= nu[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue  # lattice prefix would fail
            if right is not None and v > right:
                continue  # rows weakly increase left to right
            if above is not None and v <= above:
                continue  # columns strictly increase downwards
            counts[v] += 1
            filling[(i, j)] = v
            total += place(pos + 1)
            del filling[(i, j)]
            counts[v] -= 1
        return total

    return place(0)


def lr_rectangle(m: int, a: int, mu: Partition, nu: Partition) -> int:
    """Closed form for the rectangle coefficient: complementary pairs only.

    Returns 1 iff mu_i + nu_{a+1-i} = m for every 1 <= i <= a, else 0.
    """
    mu = as_partition(mu)
    nu = as_partition(nu)
    box = (m,) * a
    if not contains(box, mu) or not contains(box, nu):
        raise ValueError(f"both inputs must fit inside the {a} x {m} rectangle")
    ok = all(part(mu, i) + part(nu, a + 1 - i) == m for i in range(1, a + 1))
    return 1 if ok else 0


_SUM_CLASS = {
    RectSubset.BOX: PartitionClass.ALL,
    RectSubset.COLPAIRED: PartitionClass.EVEN_COLUMNS,
    RectSubset.EVENROW: PartitionClass.EVEN_ROWS,
}

_VARIANT_SUBSET = {
    PartitionClass.ALL: RectSubset.BOX,
    PartitionClass.EVEN_COLUMNS: RectSubset.COLPAIRED,
    PartitionClass.EVEN_ROWS: RectSubset.EVENROW,
}


def lr_rect_sum(m: int, a: int, mu: Partition, variant: PartitionClass) -> int:
    """Sum of rectangle coefficients over a class of complements.

    Summing LR^{(m^a)}_{kappa, mu} over kappa in the chosen class gives 1
    exactly when mu lies in the matching rectangle subset, else 0; the sum is
    computed directly, membership is checked separately by the callers.
    """
    mu = as_partition(mu)
    box = (m,) * a
    want = size(box) - size(mu)
    if want < 0:
        return 0
    total = 0
    for kappa in box_partitions(m, a):
        if size(kappa) == want and in_class(kappa, variant):
            total += lr_coeff(box, kappa, mu)
    return total


def rect_sum_membership(m: int, a: int, mu: Partition, variant: PartitionClass) -> bool:
    """The subset membership the class sum is predicted to indicate."""
    return in_rect_subset(_VARIANT_SUBSET[variant], m, a, mu)
