"""The identity battery: truncated Cauchy checks, classical sums, suite engine.

Truncation semantics for the series checks: both sides are compared as
polynomials of total degree <= degmax in the auxiliary t variables.  The
character sums are cut at |lam| <= degmax, which loses nothing because the
Schur polynomial of lam is homogeneous of degree |lam| in the t's.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from itertools import combinations_with_replacement

from . import folding, lr, partitions, schur
from .laurent import LaurentPoly, VarTable
from .partitions import (
    PartitionClass,
    RectSubset,
    conjugate,
    in_class,
    in_hook,
    partitions_of,
    partitions_upto,
    size,
)
from .report import VerificationReport, poly_comparison, value_comparison
from .schur import Alphabet, BracketType

CAUCHY_KINDS = ("cauchy_plain", "cauchy_square", "cauchy_angle", "cauchy_angle_dual")
SUM_KINDS = ("schur_sum", "littlewood_even_rows", "littlewood_even_columns")


# ---------------------------------------------------------------------------
# Truncated product helpers
# ---------------------------------------------------------------------------


def _t_positions(table: VarTable, nT: int) -> tuple[int, ...]:
    return tuple(table.index[f"t{i}"] for i in range(1, nT + 1))


def _truncate(p: LaurentPoly, positions: tuple[int, ...], degmax: int) -> LaurentPoly:
    return p.map_terms(lambda e: sum(e[i] for i in positions) <= degmax)


def _geometric(u: LaurentPoly, positions: tuple[int, ...], degmax: int) -> LaurentPoly:
    """1/(1-u) truncated, for a single signed monomial u of positive t-degree."""
    ((exps, coeff),) = u.terms()
    d = sum(exps[i] for i in positions)
    if d < 1:
        raise ValueError("geometric factor needs positive degree in the t variables")
    acc: dict[tuple[int, ...], int] = {}
    cur = (0,) * len(u.table)
    c = 1
    for _ in range(degmax // d + 1):
        acc[cur] = acc.get(cur, 0) + c
        cur = tuple(a + b for a, b in zip(cur, exps))
        c *= coeff
    return LaurentPoly(u.table, acc)


def cauchy_alphabets(nx: int, ny: int, nT: int) -> tuple[Alphabet, Alphabet, VarTable]:
    """Formal X and Y alphabets over a table that also carries t1..tnT."""
    x_names = tuple(f"x{i}" for i in range(1, nx + 1))
    y_names = tuple(f"y{i}" for i in range(1, ny + 1))
    t_names = tuple(f"t{i}" for i in range(1, nT + 1))
    table = VarTable(x_names + y_names + t_names)
    return (
        Alphabet.formal(table, x_names),
        Alphabet.formal(table, y_names),
        table,
    )


def cauchy_check(
    kind: str, X: Alphabet, Y: Alphabet, nT: int, degmax: int
) -> VerificationReport:
    """One truncated Cauchy-type identity, compared exactly.

    The character sum side runs over shapes of size at most degmax with at
    most nT rows; the product side is expanded factor by factor with the same
    truncation.
    """
    if kind not in CAUCHY_KINDS:
        raise ValueError(f"unknown cauchy kind {kind!r}")
    if nT < 1:
        raise ValueError("need at least one t variable")
    table = X.table
    t_names = tuple(f"t{i}" for i in range(1, nT + 1))
    positions = _t_positions(table, nT)
    T = Alphabet.formal(table, t_names)
    none = Alphabet.empty(table)
    one = LaurentPoly.const(table, 1)

    lhs = LaurentPoly.zero(table)
    for lam in partitions_upto(degmax, max_len=nT):
        s_t = schur.super_schur(lam, T, none)
        if kind == "cauchy_plain":
            factor = schur.super_schur(lam, X, Y)
        elif kind == "cauchy_square":
            factor = schur.bracket_schur(BracketType.SQUARE, lam, X, Y)
        elif kind == "cauchy_angle":
            factor = schur.bracket_schur(BracketType.ANGLE, lam, X, Y)
        else:
            factor = schur.bracket_schur(BracketType.ANGLE, conjugate(lam), X, Y)
        lhs = lhs + factor * s_t

    rhs = one
    t_polys = [LaurentPoly.variable(table, name) for name in t_names]
    for tj in t_polys:
        if kind == "cauchy_angle_dual":
            for x in X.polys():
                rhs = _truncate(rhs * (one + tj * x), positions, degmax)
            for y in Y.polys():
                rhs = _truncate(rhs * _geometric(-(tj * y), positions, degmax), positions, degmax)
        else:
            for y in Y.polys():
                rhs = _truncate(rhs * (one - tj * y), positions, degmax)
            for x in X.polys():
                rhs = _truncate(rhs * _geometric(tj * x, positions, degmax), positions, degmax)
    if kind in ("cauchy_square", "cauchy_angle_dual"):
        pairs = combinations_with_replacement(range(nT), 2)
    elif kind == "cauchy_angle":
        pairs = combinations_with_replacement(range(nT), 2)
        pairs = (p for p in pairs if p[0] != p[1])
    else:
        pairs = ()
    for i, j in pairs:
        rhs = _truncate(rhs * (one - t_polys[i] * t_polys[j]), positions, degmax)

    params = {
        "kind": kind,
        "x": X.describe(),
        "y": Y.describe(),
        "nT": nT,
        "degmax": degmax,
    }
    return poly_comparison(f"cauchy.{kind}", params, lhs, rhs)


def littlewood_sum_check(kind: str, nT: int, degmax: int) -> VerificationReport:
    """Classical sum of Schur polynomials over a class against its product form."""
    if kind not in SUM_KINDS:
        raise ValueError(f"unknown sum kind {kind!r}")
    if nT < 1:
        raise ValueError("need at least one t variable")
    table = schur.t_table(nT)
    positions = tuple(range(nT))
    one = LaurentPoly.const(table, 1)

    cls = {
        "schur_sum": PartitionClass.ALL,
        "littlewood_even_rows": PartitionClass.EVEN_ROWS,
        "littlewood_even_columns": PartitionClass.EVEN_COLUMNS,
    }[kind]
    lhs = LaurentPoly.zero(table)
    for lam in partitions_upto(degmax, max_len=nT):
        if in_class(lam, cls):
            lhs = lhs + schur.schur_in_table(lam, table)

    rhs = one
    t_polys = [LaurentPoly.variable(table, name) for name in table.names]
    if kind == "schur_sum":
        for tp in t_polys:
            rhs = _truncate(rhs * _geometric(tp, positions, degmax), positions, degmax)
        pairs = [(i, j) for i in range(nT) for j in range(i + 1, nT)]
    elif kind == "littlewood_even_rows":
        pairs = list(combinations_with_replacement(range(nT), 2))
    else:
        pairs = [(i, j) for i in range(nT) for j in range(i + 1, nT)]
    for i, j in pairs:
        rhs = _truncate(
            rhs * _geometric(t_polys[i] * t_polys[j], positions, degmax),
            positions,
            degmax,
        )

    params = {"kind": kind, "nT": nT, "degmax": degmax}
    return poly_comparison(f"littlewood.{kind}", params, lhs, rhs)


def power_det_check(m: int) -> VerificationReport:
    """det(t_i^{m-j} - t_i^{m+j}) against its closed product form."""
    if m < 1:
        raise ValueError("m must be >= 1")
    table = schur.t_table(m)
    one = LaurentPoly.const(table, 1)

    def tvar(i: int, power: int) -> LaurentPoly:
        return LaurentPoly.variable(table, f"t{i}", power)

    rows = [
        [tvar(i, m - j) - tvar(i, m + j) for j in range(1, m + 1)]
        for i in range(1, m + 1)
    ]
    from .laurent import det

    lhs = det(rows)
    rhs = one
    for i in range(1, m + 1):
        rhs = rhs * (one - tvar(i, 2))
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            rhs = rhs * (tvar(i, 1) - tvar(j, 1)) * (one - tvar(i, 1) * tvar(j, 1))
    return poly_comparison("power-det", {"m": m}, lhs, rhs)


# ---------------------------------------------------------------------------
# Battery pieces reused by the suite and by the acceptance tests
# ---------------------------------------------------------------------------


def check_partition_properties(
    invol_max: int = 12, count_max: int = 6, subset_max: int = 4
) -> list[VerificationReport]:
    from math import comb

    out = []
    lams = partitions_upto(invol_max)
    bad = next(
        (lam for lam in lams if partitions.conjugate(partitions.conjugate(lam)) != lam),
        None,
    )
    out.append(
        VerificationReport(
            "partitions.conjugate-involution",
            {"max_size": invol_max},
            bad is None,
            witness=None if bad is None else list(bad),
        )
    )
    bad = next(
        (
            lam
            for lam in lams
            if in_class(lam, PartitionClass.EVEN_ROWS)
            != in_class(partitions.conjugate(lam), PartitionClass.EVEN_COLUMNS)
        ),
        None,
    )
    out.append(
        VerificationReport(
            "partitions.class-conjugate",
            {"max_size": invol_max},
            bad is None,
            witness=None if bad is None else list(bad),
        )
    )
    ok = True
    witness = None
    for m in range(1, count_max + 1):
        for a in range(1, count_max + 1):
            if len(partitions.box_partitions(m, a)) != comb(m + a, a):
                ok, witness = False, {"m": m, "a": a}
    out.append(
        VerificationReport("partitions.box-count", {"max": count_max}, ok, witness=witness)
    )
    ok = True
    witness = None
    for m in range(1, subset_max + 1):
        for a in range(1, subset_max + 1):
            box = set(partitions.box_partitions(m, a))
            for tag in (RectSubset.COLPAIRED, RectSubset.EVENROW, RectSubset.BOX):
                members = partitions.enumerate_rect_subset(tag, m, a)
                for lam in members:
                    if lam not in box or not partitions.in_rect_subset(tag, m, a, lam):
                        ok, witness = False, {"m": m, "a": a, "tag": tag.value}
                for lam in box:
                    if (lam in members) != partitions.in_rect_subset(tag, m, a, lam):
                        ok, witness = False, {"m": m, "a": a, "tag": tag.value}
    out.append(
        VerificationReport(
            "partitions.rect-subsets", {"max": subset_max}, ok, witness=witness
        )
    )
    return out


def _random_alphabet(rng: random.Random, table: VarTable, count: int) -> Alphabet:
    elems = []
    for _ in range(count):
        exps = tuple(rng.randint(-2, 2) for _ in range(len(table)))
        sign = rng.choice((1, -1))
        elems.append((sign, exps))
    return Alphabet(table, tuple(elems))


def check_schur_stability(
    max_lambda: int, seed: int, samples: int = 12
) -> VerificationReport:
    """Brackets are unchanged by adjoining one shared element to X and Y."""
    rng = random.Random(seed)
    table = VarTable(("u1", "u2"))
    lams = partitions_upto(max_lambda)
    witness = None
    for _ in range(samples):
        lam = rng.choice(lams)
        X = _random_alphabet(rng, table, rng.randint(0, 2))
        Y = _random_alphabet(rng, table, rng.randint(0, 2))
        eta = _random_alphabet(rng, table, 1)
        X2 = X | eta
        Y2 = Y | eta
        for tag in BracketType:
            before = schur.bracket_schur(tag, lam, X, Y)
            after = schur.bracket_schur(tag, lam, X2, Y2)
            if before != after:
                witness = {
                    "lam": list(lam),
                    "tag": tag.value,
                    "x": X.describe(),
                    "y": Y.describe(),
                    "eta": eta.describe(),
                }
                break
        if witness:
            break
    return VerificationReport(
        "schur.stability",
        {"max_lambda": max_lambda, "seed": seed, "samples": samples},
        witness is None,
        witness=witness,
    )


def check_schur_invariants(max_lambda: int) -> list[VerificationReport]:
    """Hook vanishing, homogeneity, the two dualities, alternate forms, oracle."""
    out = []
    lams = partitions_upto(max_lambda)

    witness = None
    for nx, ny in ((1, 0), (0, 1), (1, 1), (2, 1)):
        X, Y, _ = cauchy_alphabets(nx, ny, 1)
        for lam in lams:
            outside = partitions.part(lam, nx + 1) > ny
            value = schur.super_schur(lam, X, Y)
            if outside and not value.is_zero:
                witness = {"lam": list(lam), "nx": nx, "ny": ny}
    out.append(
        VerificationReport(
            "schur.hook-vanishing", {"max_lambda": max_lambda}, witness is None, witness=witness
        )
    )

    witness = None
    for nx in (1, 2, 3):
        table = VarTable(tuple(f"x{i}" for i in range(1, nx + 1)))
        X = Alphabet.formal(table)
        none = Alphabet.empty(table)
        for lam in lams:
            sign = -1 if size(lam) % 2 else 1
            lhs = schur.super_schur(lam, X.negated(), none)
            rhs = sign * schur.super_schur(lam, X, none)
            if lhs != rhs:
                witness = {"lam": list(lam), "nx": nx}
    out.append(
        VerificationReport(
            "schur.homogeneity", {"max_lambda": max_lambda}, witness is None, witness=witness
        )
    )

    wit_a = None
    wit_bcd = None
    for nx, ny in ((1, 1), (2, 1), (2, 2)):
        X, Y, _ = cauchy_alphabets(nx, ny, 1)
        for lam in lams:
            sign = -1 if size(lam) % 2 else 1
            if schur.super_schur(conjugate(lam), X, Y) != sign * schur.super_schur(lam, Y, X):
                wit_a = {"lam": list(lam), "nx": nx, "ny": ny}
            lhs = schur.bracket_schur(BracketType.ANGLE, conjugate(lam), X, Y)
            rhs = sign * schur.bracket_schur(BracketType.SQUARE, lam, Y, X)
            if lhs != rhs:
                wit_bcd = {"lam": list(lam), "nx": nx, "ny": ny}
    out.append(
        VerificationReport(
            "schur.dual-plain", {"max_lambda": max_lambda}, wit_a is None, witness=wit_a
        )
    )
    out.append(
        VerificationReport(
            "schur.dual-bracket", {"max_lambda": max_lambda}, wit_bcd is None, witness=wit_bcd
        )
    )

    witness = None
    pairs = [cauchy_alphabets(2, 1, 1)[:2], cauchy_alphabets(1, 2, 1)[:2]]
    pal_table = VarTable(("x1", "x2"))
    pal = schur.palindromic(pal_table, ("x1", "x2")) | Alphabet.constants(pal_table, (1,))
    pairs.append((pal, Alphabet.empty(pal_table)))
    for X, Y in pairs:
        for lam in lams:
            for tag in (BracketType.SQUARE, BracketType.ANGLE):
                direct = schur.bracket_schur(tag, lam, X, Y)
                alt = schur.bracket_schur_altform(tag, lam, X, Y)
                if direct != alt:
                    witness = {"lam": list(lam), "tag": tag.value, "x": X.describe()}
    out.append(
        VerificationReport(
            "schur.altform", {"max_lambda": max_lambda}, witness is None, witness=witness
        )
    )

    witness = None
    for n in (1, 2, 3, 4):
        table = schur.t_table(n)
        T = Alphabet.formal(table)
        none = Alphabet.empty(table)
        for lam in lams:
            if len(lam) > n:
                continue
            if schur.super_schur(lam, T, none) != schur.bialternant_schur(lam, n):
                witness = {"lam": list(lam), "n": n}
    out.append(
        VerificationReport(
            "schur.bialternant-agreement",
            {"max_lambda": max_lambda},
            witness is None,
            witness=witness,
        )
    )
    return out


def check_lr_oracle(max_size: int) -> VerificationReport:
    """Tableau counts against the Schur-expansion of explicit products."""
    witness = None
    for n in range(max_size + 1):
        nvars = max(n, 1)
        table = schur.t_table(nvars)
        for k in range(n + 1):
            if witness:
                break
            for mu in partitions_of(k):
                for nu in partitions_of(n - k):
                    if (size(mu), mu) > (size(nu), nu):
                        continue  # product is symmetric; check both orders below
                    product = schur.schur_in_table(mu, table) * schur.schur_in_table(
                        nu, table
                    )
                    expansion = schur.schur_expand(product, nvars)
                    for lam in partitions_of(n):
                        want = expansion.get(lam, 0)
                        if lr.lr_coeff(lam, mu, nu) != want or lr.lr_coeff(lam, nu, mu) != want:
                            witness = {
                                "lam": list(lam),
                                "mu": list(mu),
                                "nu": list(nu),
                                "expected": want,
                            }
    return VerificationReport(
        "lr.oracle", {"max_size": max_size}, witness is None, witness=witness
    )


def check_lr_properties(max_size: int, stack_max: int = 4) -> list[VerificationReport]:
    out = []
    wit_sym = None
    wit_tr = None
    for n in range(max_size + 1):
        for lam in partitions_of(n):
            lam_c = conjugate(lam)
            for k in range(n + 1):
                for mu in partitions_of(k):
                    for nu in partitions_of(n - k):
                        c = lr.lr_coeff(lam, mu, nu)
                        if c != lr.lr_coeff(lam, nu, mu):
                            wit_sym = {"lam": list(lam), "mu": list(mu), "nu": list(nu)}
                        if c != lr.lr_coeff(lam_c, conjugate(mu), conjugate(nu)):
                            wit_tr = {"lam": list(lam), "mu": list(mu), "nu": list(nu)}
    out.append(
        VerificationReport(
            "lr.symmetry", {"max_size": max_size}, wit_sym is None, witness=wit_sym
        )
    )
    out.append(
        VerificationReport(
            "lr.transpose", {"max_size": max_size}, wit_tr is None, witness=wit_tr
        )
    )

    witness = None
    for k in range(stack_max + 1):
        for mu in partitions_of(k):
            for j in range(stack_max + 1):
                for nu in partitions_of(j):
                    if lr.lr_coeff(partitions.add(mu, nu), mu, nu) != 1:
                        witness = {"mu": list(mu), "nu": list(nu)}
    out.append(
        VerificationReport(
            "lr.stacking", {"max_size": stack_max}, witness is None, witness=witness
        )
    )

    witness = None
    for n in range(min(max_size, 5) + 1):
        for lam in partitions_of(n):
            for k in range(n):
                for mu in partitions_of(k):
                    for nu in partitions_of(max(n - k - 1, 0)):
                        if size(mu) + size(nu) != n and lr.lr_coeff(lam, mu, nu) != 0:
                            witness = {"lam": list(lam), "mu": list(mu), "nu": list(nu)}
    out.append(
        VerificationReport(
            "lr.size-vanishing", {"max_size": min(max_size, 5)}, witness is None, witness=witness
        )
    )

    witness = None
    for n in range(min(max_size, 6) + 1):
        for lam in partitions_of(n):
            for nu in partitions_of(n):
                want = 1 if lam == nu else 0
                if lr.lr_coeff(lam, (), nu) != want or lr.lr_coeff(lam, nu, ()) != want:
                    witness = {"lam": list(lam), "nu": list(nu)}
    out.append(
        VerificationReport(
            "lr.empty-delta", {"max_size": min(max_size, 6)}, witness is None, witness=witness
        )
    )
    return out


def check_lr_rectangle(max_rect: int) -> list[VerificationReport]:
    wit_rect = None
    wit_sum = None
    for m in range(1, max_rect + 1):
        for a in range(1, max_rect + 1):
            box = partitions.box_partitions(m, a)
            box_shape = (m,) * a
            for mu in box:
                for nu in box:
                    if lr.lr_rectangle(m, a, mu, nu) != lr.lr_coeff(box_shape, mu, nu):
                        wit_rect = {"m": m, "a": a, "mu": list(mu), "nu": list(nu)}
            for mu in box:
                for variant in PartitionClass:
                    got = lr.lr_rect_sum(m, a, mu, variant)
                    want = 1 if lr.rect_sum_membership(m, a, mu, variant) else 0
                    if got != want:
                        wit_sum = {
                            "m": m,
                            "a": a,
                            "mu": list(mu),
                            "variant": variant.value,
                        }
    return [
        VerificationReport(
            "lr.rectangle", {"max": max_rect}, wit_rect is None, witness=wit_rect
        ),
        VerificationReport(
            "lr.rect-sum", {"max": max_rect}, wit_sum is None, witness=wit_sum
        ),
    ]


def check_dc_sweep(
    max_lambda: int, max_x: int, max_y: int
) -> list[VerificationReport]:
    """All eight relations over all formal alphabet sizes and small shapes."""
    out = []
    lams = partitions_upto(max_lambda)
    for relation in folding.DC_RELATIONS:
        xis = (1, -1) if relation in folding.XI_RELATIONS else (1,)
        for nx in range(max_x + 1):
            for ny in range(max_y + 1):
                X, Y, _ = cauchy_alphabets(nx, ny, 1)
                for xi in xis:
                    witness = None
                    for lam in lams:
                        rep = folding.general_dc_check(relation, lam, X, Y, xi)
                        if not rep.passed:
                            witness = {"lam": list(lam), "diff": str(rep.witness)}
                            break
                    params = {
                        "relation": relation,
                        "nx": nx,
                        "ny": ny,
                        "xi": xi,
                        "max_lambda": max_lambda,
                    }
                    out.append(
                        VerificationReport(
                            f"dc.{relation}", params, witness is None, witness=witness
                        )
                    )
    return out


def fold_cases(max_rank: int) -> list[folding.FoldingCase]:
    cases = []
    for tag in folding.FoldingTag:
        for r in range(max_rank + 1):
            for s in range(max_rank + 1 - r):
                if r + s < 1:
                    continue
                if tag is folding.FoldingTag.D2 and r < 1:
                    continue
                cases.append(folding.FoldingCase(tag, r, s))
    return cases


def check_fold_sweep(max_rank: int, max_am: int = 3) -> list[VerificationReport]:
    out = []
    for case in fold_cases(max_rank):
        M, N = folding.ambient_hook(case)
        for branch in folding.branches(case):
            for a in range(1, max_am + 1):
                for m in range(1, max_am + 1):
                    if not in_hook((m,) * a, M, N):
                        continue
                    out.append(folding.verify_decomposition(case, branch, a, m))
    return out


def check_fold_hook_sanity(max_rank: int, max_am: int = 4) -> VerificationReport:
    """Folded rectangle characters vanish outside the alphabet's hook.

    Only this direction holds: alphabets containing the pair {1, -1} also
    vanish at some in-hook rectangles (e.g. the symplectic-type folding at
    rank one kills the 2 x 3 rectangle), so in-hook nonvanishing is not
    asserted.  Rejection at the case API is cross-checked against in_hook.
    """
    witness = None
    for case in fold_cases(max_rank):
        X, Y = folding.fold_alphabets(case)
        M, N = len(X), len(Y)
        M_api, N_api = folding.ambient_hook(case)
        for a in range(1, max_am + 1):
            for m in range(1, max_am + 1):
                rect = (m,) * a
                value = schur.super_schur(rect, X, Y)
                if not in_hook(rect, M, N) and not value.is_zero:
                    witness = {
                        "case": case.tag.value,
                        "r": case.r,
                        "s": case.s,
                        "a": a,
                        "m": m,
                    }
                rejected = False
                try:
                    folding.kr_supercharacter(case, a, m)
                except ValueError:
                    rejected = True
                if rejected != (not in_hook(rect, M_api, N_api)):
                    witness = {
                        "case": case.tag.value,
                        "r": case.r,
                        "s": case.s,
                        "a": a,
                        "m": m,
                        "rejection": rejected,
                    }
    return VerificationReport(
        "fold.hook-sanity", {"max_rank": max_rank, "max_am": max_am}, witness is None, witness=witness
    )


_DIMENSION_SPOTS = {
    folding.FoldingTag.B1: lambda r: 2 * r + 1,
    folding.FoldingTag.A2_EVEN: lambda r: 2 * r - 1,
    folding.FoldingTag.A2_ODD: lambda r: 2 * r + 1,
    folding.FoldingTag.A2_EE: lambda r: 2 * r,
    folding.FoldingTag.D1: lambda r: 2 * r,
    folding.FoldingTag.SPO: lambda r: 2 * r,
    folding.FoldingTag.D2: lambda r: 2 * r,
}


def check_fold_dimensions(max_r: int) -> list[VerificationReport]:
    """All-ones evaluation of each vector-level folded character at s = 0."""
    out = []
    for tag, expect in _DIMENSION_SPOTS.items():
        for r in range(1, max_r + 1):
            case = folding.FoldingCase(tag, r, 0)
            value = folding.kr_supercharacter(case, 1, 1).eval_all_ones()
            out.append(
                value_comparison(
                    "fold.dimension",
                    {"case": tag.value, "r": r},
                    expect(r),
                    value,
                )
            )
    return out


def check_fold_double_form(max_r: int, max_am: int = 3) -> list[VerificationReport]:
    """Two ways to write the twisted even-orthogonal character agree."""
    out = []
    for r in range(1, max_r + 1):
        names = tuple(f"x{i}" for i in range(1, r + 1))
        table = VarTable(names)
        pal = schur.palindromic(table, names)
        X1 = pal | Alphabet.constants(table, (1, 1))
        Y1 = Alphabet.constants(table, (1, -1))
        X2 = pal | Alphabet.constants(table, (1,))
        Y2 = Alphabet.constants(table, (-1,))
        for a in range(1, max_am + 1):
            for m in range(1, max_am + 1):
                rect = (m,) * a
                out.append(
                    poly_comparison(
                        "fold.double-form",
                        {"r": r, "a": a, "m": m},
                        schur.super_schur(rect, X1, Y1),
                        schur.super_schur(rect, X2, Y2),
                    )
                )
    return out


# ---------------------------------------------------------------------------
# Suite orchestration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SuiteConfig:
    degmax: int = 6
    max_lambda_size: int = 5
    max_rank: int = 3
    t_count: int = 3
    parallelism: int = 1
    seed: int = 0

    def __post_init__(self):
        for name, value in asdict(self).items():
            if value < 0:
                raise ValueError(f"{name} must be nonnegative")

    @classmethod
    def from_json_dict(cls, data: dict) -> "SuiteConfig":
        allowed = {f for f in cls.__dataclass_fields__}
        unknown = set(data) - allowed
        if unknown:
            raise ValueError(f"unknown config fields {sorted(unknown)}")
        return cls(**data)


def _battery_jobs(config: SuiteConfig):
    lr_oracle_max = config.max_lambda_size + 1  # 6 at the default config
    lr_prop_max = config.max_lambda_size + 3  # 8 at the default config
    rect_max = min(config.max_lambda_size, 4)  # 4 at the default config
    power_det_max = max(1, min(config.degmax, 5))  # 5 at the default config

    jobs = []
    jobs.append(check_partition_properties)
    jobs.append(lambda: [check_schur_stability(config.max_lambda_size, config.seed)])
    jobs.append(lambda: check_schur_invariants(config.max_lambda_size))
    jobs.append(lambda: [check_lr_oracle(lr_oracle_max)])
    jobs.append(lambda: check_lr_properties(lr_prop_max))
    jobs.append(lambda: check_lr_rectangle(rect_max))
    jobs.append(lambda: check_dc_sweep(config.max_lambda_size, 3, 2))
    jobs.append(lambda: check_fold_sweep(config.max_rank))
    jobs.append(lambda: [check_fold_hook_sanity(config.max_rank)])
    jobs.append(lambda: check_fold_dimensions(config.max_rank))
    jobs.append(lambda: check_fold_double_form(config.max_rank))

    def cauchy_job():
        reports = []
        for kind in CAUCHY_KINDS:
            for nx in range(3):
                for ny in range(3):
                    for nT in range(1, config.t_count + 1):
                        X, Y, _ = cauchy_alphabets(nx, ny, nT)
                        reports.append(cauchy_check(kind, X, Y, nT, config.degmax))
        return reports

    def sums_job():
        return [
            littlewood_sum_check(kind, nT, config.degmax)
            for kind in SUM_KINDS
            for nT in range(1, config.t_count + 1)
        ]

    jobs.append(cauchy_job)
    jobs.append(sums_job)
    jobs.append(lambda: [power_det_check(m) for m in range(1, power_det_max + 1)])
    return jobs


def run_suite(config: SuiteConfig) -> list[VerificationReport]:
    """Run the whole battery and return deterministically sorted reports."""
    jobs = _battery_jobs(config)
    workers = max(1, config.parallelism)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(lambda job: job(), jobs))
    else:
        chunks = [job() for job in jobs]
    reports = [report for chunk in chunks for report in chunk]
    reports.sort(key=VerificationReport.sort_key)
    return reports


def suite_to_json(reports: list[VerificationReport]) -> str:
    return "\n".join(report.to_json() for report in reports) + "\n"
