"""Supersymmetric complete functions, Schur determinants, bracket characters.

The complete functions h_m(X|Y) are read off the series

    sum_m h_m(X|Y) t^m  =  prod_{y in Y} (1 - y t) / prod_{x in X} (1 - x t),

with h_0 = 1 and h_m = 0 for m < 0.  Characters are then determinants in the
h_m: the plain determinant det(h_{lam_i - i + j}) gives the supersymmetric
Schur function; the square-bracket and angle-bracket variants give the
orthogonal-type and symplectic-type characters.  Everything is exact integer
arithmetic over :mod:`superchar.laurent`.
"""

from __future__ import annotations

import enum
import hashlib
import json
import os
import tempfile
from dataclasses import dataclass
from functools import lru_cache

from .laurent import (
    LaurentPoly,
    TruncatedSeries,
    VarTable,
    det,
    divide_linear,
    monomial_str,
)
from .partitions import Partition, as_partition

SignedMonomial = tuple[int, tuple[int, ...]]


@dataclass(frozen=True)
class Alphabet:
    """An ordered finite multiset of signed Laurent monomials.

    Each element is (sign, exponent vector); the constants +1 and -1 are the
    elements with an all-zero exponent vector.
    """

    table: VarTable
    elements: tuple[SignedMonomial, ...]

    def __post_init__(self):
        n = len(self.table)
        for sign, exps in self.elements:
            if sign not in (1, -1):
                raise ValueError(f"element sign must be +-1, got {sign}")
            if len(exps) != n:
                raise ValueError("element exponent vector does not fit the table")

    @classmethod
    def empty(cls, table: VarTable) -> "Alphabet":
        return cls(table, ())

    @classmethod
    def formal(cls, table: VarTable, names: tuple[str, ...] | None = None) -> "Alphabet":
        if names is None:
            names = table.names
        elems = []
        for name in names:
            exps = [0] * len(table)
            exps[table.index[name]] = 1
            elems.append((1, tuple(exps)))
        return cls(table, tuple(elems))

    @classmethod
    def constants(cls, table: VarTable, values: tuple[int, ...]) -> "Alphabet":
        zero = (0,) * len(table)
        for v in values:
            if v not in (1, -1):
                raise ValueError("constant alphabet elements must be +-1")
        return cls(table, tuple((v, zero) for v in values))

    def union(self, other: "Alphabet") -> "Alphabet":
        if self.table != other.table:
            raise ValueError("alphabets over different tables")
        return Alphabet(self.table, self.elements + other.elements)

    __or__ = union

    def inverses(self) -> "Alphabet":
        return Alphabet(
            self.table,
            tuple((s, tuple(-e for e in exps)) for s, exps in self.elements),
        )

    def negated(self) -> "Alphabet":
        return Alphabet(self.table, tuple((-s, exps) for s, exps in self.elements))

    def polys(self) -> tuple[LaurentPoly, ...]:
        return tuple(
            LaurentPoly.monomial(self.table, exps, sign) for sign, exps in self.elements
        )

    def canonical(self) -> "Alphabet":
        return Alphabet(self.table, tuple(sorted(self.elements)))

    def describe(self) -> list[str]:
        out = []
        for sign, exps in self.elements:
            mono = monomial_str(self.table, exps)
            out.append(mono if sign == 1 else (f"-{mono}" if mono != "1" else "-1"))
        return out

    def __len__(self) -> int:
        return len(self.elements)


def palindromic(table: VarTable, names: tuple[str, ...]) -> Alphabet:
    """The multiset {v, v^-1 for v in names}, in v..., then inverses order."""
    base = Alphabet.formal(table, names)
    return base | base.inverses()


# ---------------------------------------------------------------------------
# Complete supersymmetric functions
# ---------------------------------------------------------------------------


def _linear_factor(table: VarTable, element: LaurentPoly, cutoff: int) -> TruncatedSeries:
    """The series 1 - (element) t."""
    coeffs = [LaurentPoly.const(table, 1), -element]
    return TruncatedSeries.from_poly_coeffs(table, coeffs, cutoff)


def _h_series(X: Alphabet, Y: Alphabet, degmax: int) -> tuple[LaurentPoly, ...]:
    table = X.table
    num = TruncatedSeries.one(table, degmax)
    for y in Y.polys():
        num = num * _linear_factor(table, y, degmax)
    den = TruncatedSeries.one(table, degmax)
    for x in X.polys():
        den = den * _linear_factor(table, x, degmax)
    series = num * den.inverse()
    return tuple(series.coeffs)


def _disk_key(X: Alphabet, Y: Alphabet, degmax: int) -> str:
    payload = {
        "vars": list(X.table.names),
        "x": [[s, list(e)] for s, e in X.elements],
        "y": [[s, list(e)] for s, e in Y.elements],
        "degmax": degmax,
    }
    blob = json.dumps(payload, separators=(",", ":"), sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


@lru_cache(maxsize=None)
def _h_list_cached(X: Alphabet, Y: Alphabet, degmax: int) -> tuple[LaurentPoly, ...]:
    cache_dir = os.environ.get("SUPERCHAR_CACHE_DIR")
    path = None
    if cache_dir:
        os.makedirs(cache_dir, exist_ok=True)
        path = os.path.join(cache_dir, f"h-{_disk_key(X, Y, degmax)}.json")
        try:
            with open(path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
            return tuple(LaurentPoly.from_json_dict(d) for d in data)
        except (OSError, ValueError, KeyError):
            pass
    result = _h_series(X, Y, degmax)
    if path:
        tmp = tempfile.NamedTemporaryFile(
            "w", dir=cache_dir, delete=False, encoding="utf-8"
        )
        try:
            json.dump([p.to_json_dict() for p in result], tmp)
            tmp.close()
            os.replace(tmp.name, path)
        except OSError:
            tmp.close()
    return result


def h_list(X: Alphabet, Y: Alphabet, degmax: int) -> tuple[LaurentPoly, ...]:
    """[h_0, ..., h_degmax] for the pair of alphabets.

    Results are cached on the canonicalized (order-forgotten) alphabets; the
    verification sweeps re-query identical pairs constantly.
    """
    if degmax < 0:
        raise ValueError("degmax must be nonnegative")
    if X.table != Y.table:
        raise ValueError("alphabets over different tables")
    return _h_list_cached(X.canonical(), Y.canonical(), degmax)


def _h_at(hs: tuple[LaurentPoly, ...], zero: LaurentPoly, k: int) -> LaurentPoly:
    if k < 0:
        return zero
    return hs[k]


# ---------------------------------------------------------------------------
# Jacobi-Trudi determinants
# ---------------------------------------------------------------------------


class BracketType(enum.Enum):
    PLAIN = "plain"
    SQUARE = "square"
    ANGLE = "angle"


@lru_cache(maxsize=None)
def super_schur(lam: Partition, X: Alphabet, Y: Alphabet) -> LaurentPoly:
    """det(h_{lam_i - i + j}) over 1 <= i, j <= len(lam); 1 for the empty shape."""
    lam = as_partition(lam)
    if not lam:
        return LaurentPoly.const(X.table, 1)
    n = len(lam)
    hs = h_list(X, Y, lam[0] + n)
    zero = LaurentPoly.zero(X.table)
    rows = [
        [_h_at(hs, zero, lam[i] - (i + 1) + (j + 1)) for j in range(n)]
        for i in range(n)
    ]
    return det(rows)


@lru_cache(maxsize=None)
def bracket_schur(tag: BracketType, lam: Partition, X: Alphabet, Y: Alphabet) -> LaurentPoly:
    """The three determinant characters, selected by tag.

    SQUARE is det(h_{lam_i-i+j} - h_{lam_i-i-j}); ANGLE is half of
    det(h_{lam_i-i+j} + h_{lam_i-i-j+2}), where the halving is exact on the
    integer determinant and failure to halve aborts the computation.
    """
    if tag is BracketType.PLAIN:
        return super_schur(lam, X, Y)
    lam = as_partition(lam)
    if not lam:
        return LaurentPoly.const(X.table, 1)
    n = len(lam)
    hs = h_list(X, Y, lam[0] + n)
    zero = LaurentPoly.zero(X.table)
    rows = []
    for i in range(n):
        base = lam[i] - (i + 1)
        if tag is BracketType.SQUARE:
            row = [
                _h_at(hs, zero, base + j) - _h_at(hs, zero, base - j)
                for j in range(1, n + 1)
            ]
        else:
            row = [
                _h_at(hs, zero, base + j) + _h_at(hs, zero, base - j + 2)
                for j in range(1, n + 1)
            ]
        rows.append(row)
    result = det(rows)
    if tag is BracketType.ANGLE:
        result = result.exact_div(2)
    return result


@lru_cache(maxsize=None)
def bracket_schur_altform(
    tag: BracketType, lam: Partition, X: Alphabet, Y: Alphabet
) -> LaurentPoly:
    """Block-determinant forms of the bracket characters.

    The first column is a single entry per row and the remaining columns are
    paired sums; the SQUARE case uses H_m = h_m - h_{m-2} in place of h_m and
    needs no 1/2 prefactor.
    """
    if tag is BracketType.PLAIN:
        raise ValueError("alternate forms exist for SQUARE and ANGLE only")
    lam = as_partition(lam)
    if not lam:
        return LaurentPoly.const(X.table, 1)
    n = len(lam)  # equals the first column length of the conjugate
    hs = h_list(X, Y, lam[0] + n)
    zero = LaurentPoly.zero(X.table)

    if tag is BracketType.SQUARE:
        def f(k: int) -> LaurentPoly:
            return _h_at(hs, zero, k) - _h_at(hs, zero, k - 2)
    else:
        def f(k: int) -> LaurentPoly:
            return _h_at(hs, zero, k)

    rows = []
    for i in range(n):
        base = lam[i] - (i + 1)
        row = [f(base + 1)]
        row.extend(f(base + j) + f(base - j + 2) for j in range(2, n + 1))
        rows.append(row)
    return det(rows)


# ---------------------------------------------------------------------------
# Bialternant oracle and Schur expansion
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def t_table(n: int) -> VarTable:
    return VarTable(tuple(f"t{i}" for i in range(1, n + 1)))


def _monomial_det(table: VarTable, exps_matrix: list[list[int]]) -> LaurentPoly:
    """Determinant of (t_i ^ exps_matrix[i][j]) by permutation expansion."""
    n = len(exps_matrix)
    acc: dict[tuple[int, ...], int] = {}

    def perms(remaining: tuple[int, ...], row: int, sign: int, exps: list[int]):
        if not remaining:
            key = tuple(exps)
            acc[key] = acc.get(key, 0) + sign
            return
        for pos, col in enumerate(remaining):
            exps[row] += exps_matrix[row][col]
            perms(
                remaining[:pos] + remaining[pos + 1 :],
                row + 1,
                sign if pos % 2 == 0 else -sign,
                exps,
            )
            exps[row] -= exps_matrix[row][col]

    perms(tuple(range(n)), 0, 1, [0] * len(table))
    return LaurentPoly(table, acc)


@lru_cache(maxsize=None)
def _bialternant_in(table: VarTable, lam: Partition) -> LaurentPoly:
    n = len(table)
    exps = [[lam[j] + n - (j + 1) if j < len(lam) else n - (j + 1) for j in range(n)]
            for _ in range(n)]
    numerator = _monomial_det(table, exps)
    result = numerator
    for i in range(n):
        for j in range(i + 1, n):
            result = divide_linear(result, table.names[i], table.names[j])
    return result


def bialternant_schur(lam: Partition, n: int) -> LaurentPoly:
    """The ratio of alternants det(t_i^{lam_j + n - j}) / det(t_i^{n - j}).

    The denominator is the Vandermonde product, and the division is exact
    polynomial division; this is the independent oracle for the determinant
    route.
    """
    lam = as_partition(lam)
    if n < len(lam):
        raise ValueError(f"need at least {len(lam)} variables for {lam}")
    return _bialternant_in(t_table(n), lam)


def schur_in_table(lam: Partition, table: VarTable) -> LaurentPoly:
    """Schur polynomial of lam in the given variables, 0 if lam is too long."""
    lam = as_partition(lam)
    if len(lam) > len(table):
        return LaurentPoly.zero(table)
    return _bialternant_in(table, lam)


def schur_expand(p: LaurentPoly, n: int) -> dict[Partition, int]:
    """Write a symmetric polynomial as an integer combination of Schur ones.

    Repeatedly subtracts c * S_lam at the dominance-greatest remaining
    partition-shaped monomial (largest degree first, lexicographic
    tie-break).  A residual with no partition-shaped monomial means the
    input was not symmetric and is rejected.
    """
    table = p.table
    if len(table) != n:
        raise ValueError("polynomial table does not have n variables")
    for exps, _ in p.terms():
        if any(e < 0 for e in exps):
            raise ValueError("schur_expand expects a polynomial, no negative exponents")
    out: dict[Partition, int] = {}
    residual = p
    while not residual.is_zero:
        candidates = [
            exps
            for exps, _ in residual.terms()
            if all(exps[k] >= exps[k + 1] for k in range(n - 1))
        ]
        if not candidates:
            raise ValueError("polynomial is not symmetric: irreducible residual")
        lead = max(candidates, key=lambda e: (sum(e), e))
        lam = tuple(e for e in lead if e)
        c = residual.coeff(lead)
        out[lam] = c
        residual = residual - c * _bialternant_in(table, lam)
    return out


# ---------------------------------------------------------------------------
# Cache control
# ---------------------------------------------------------------------------


def clear_caches() -> None:
    """Drop all memoized series and characters (used by fault-injection tests)."""
    _h_list_cached.cache_clear()
    super_schur.cache_clear()
    bracket_schur.cache_clear()
    bracket_schur_altform.cache_clear()
    _bialternant_in.cache_clear()
