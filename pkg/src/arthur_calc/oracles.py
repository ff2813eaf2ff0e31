"""Brute-force reference implementations.

Nothing here calls the fast paths it is meant to check: transposition
counts Young-diagram cells, collapse searches all minorants, duality is
rebuilt from those two, and parameters are enumerated by exact cover of
the infinitesimal parameter.  Everything is exponential and meant for
small inputs only.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product

from .errors import OracleMismatchError
from .parameters import (
    ArthurParameter,
    ASummand,
    GroupContext,
    HalfInt,
    InfinitesimalParameter,
    LParameter,
    LSummand,
    validate_for_group,
)
from .partitions import ClassicalType, Partition

__all__ = [
    "transpose_cells",
    "dominates_brute",
    "is_type_brute",
    "collapse_brute",
    "dbv_brute",
    "preimage_brute",
    "lparams_brute",
    "apars_brute",
    "check_equal",
]

_SOURCE = {ClassicalType.B: ClassicalType.C, ClassicalType.C: ClassicalType.B, ClassicalType.D: ClassicalType.D}


def transpose_cells(p: Partition) -> Partition:
    cells = {(i, j) for i, row in enumerate(p.parts) for j in range(row)}
    columns = Counter(j for _, j in cells)
    return Partition(tuple(columns.values()))


def dominates_brute(p: Partition, q: Partition) -> bool:
    a, b, sa, sb = list(p.parts), list(q.parts), 0, 0
    for k in range(max(len(a), len(b))):
        sa += a[k] if k < len(a) else 0
        sb += b[k] if k < len(b) else 0
        if sa < sb:
            return False
    return sa == sb


def is_type_brute(p: Partition, X: ClassicalType) -> bool:
    size = sum(p.parts)
    if (size % 2 == 1) != (X is ClassicalType.B):
        return False
    bad = 1 if X is ClassicalType.C else 0
    return all(m % 2 == 0 for part, m in Counter(p.parts).items() if part % 2 == bad)


@lru_cache(maxsize=None)
def _all_partitions(n: int) -> tuple[Partition, ...]:
    out = []

    def rec(rest, cap, acc):
        if rest == 0:
            out.append(Partition(tuple(acc)))
            return
        for k in range(min(rest, cap), 0, -1):
            rec(rest - k, k, acc + [k])

    rec(n, n, [])
    return tuple(out)


def collapse_brute(p: Partition, X: ClassicalType) -> Partition:
    """The unique dominance-maximal type-X partition below ``p``."""
    below = [q for q in _all_partitions(sum(p.parts)) if is_type_brute(q, X) and dominates_brute(p, q)]
    # a dominance maximum, if one exists, is also the lexicographic maximum
    top = max(below, key=lambda q: q.parts)
    if not all(dominates_brute(top, r) for r in below):
        raise OracleMismatchError(f"{X}-collapse of {p}: no unique maximal minorant")
    return top


@lru_cache(maxsize=None)
def dbv_brute(p: Partition, X: ClassicalType) -> Partition:
    parts = list(p.parts)
    if X is ClassicalType.B:
        parts[-1] -= 1
        return transpose_cells(collapse_brute(Partition(tuple(parts)), ClassicalType.C))
    if X is ClassicalType.C:
        parts = [parts[0] + 1] + parts[1:] if parts else [1]
        return transpose_cells(collapse_brute(Partition(tuple(parts)), ClassicalType.B))
    return collapse_brute(transpose_cells(p), ClassicalType.D)


def preimage_brute(target: Partition, X_target: ClassicalType) -> list[Partition]:
    """Every partition of the dual type mapping onto ``target``, decreasing."""
    source = _SOURCE[X_target]
    size = sum(target.parts) + {ClassicalType.B: -1, ClassicalType.C: 1, ClassicalType.D: 0}[X_target]
    if size < 0:
        return []
    return list(_image_table(size, source).get(target, ()))


@lru_cache(maxsize=None)
def _image_table(size: int, source: ClassicalType) -> dict[Partition, tuple[Partition, ...]]:
    table: dict[Partition, list[Partition]] = {}
    for q in _all_partitions(size):
        if is_type_brute(q, source):
            table.setdefault(dbv_brute(q, source), []).append(q)
    return {k: tuple(sorted(v, key=lambda q: q.parts, reverse=True)) for k, v in table.items()}


# --- parameters -------------------------------------------------------------


def _exact_covers(pool: Counter, pieces: list[tuple[object, Counter]]) -> set[tuple]:
    """All multisets of pieces whose exponent multisets sum to ``pool``."""
    found: set[tuple] = set()

    def rec(rest: Counter, start: int, chosen: list):
        if not rest:
            found.add(tuple(sorted(chosen, key=repr)))
            return
        for i in range(start, len(pieces)):
            key, need = pieces[i]
            if all(rest[e] >= k for e, k in need.items()):
                rec(rest - need, i, chosen + [key])

    rec(+pool, 0, [])
    return found


def lparams_brute(lam: InfinitesimalParameter, G: GroupContext) -> list[LParameter]:
    pool = Counter((rho, x.twice) for rho, x in lam.exps)
    values = sorted({t for _, t in pool})
    pieces = []
    for rho in sorted({r for r, _ in pool}, key=lambda r: r.name):
        for top, a in product(values, range(1, len(values) + 1)):
            need = Counter((rho, top - 2 * k) for k in range(a))
            if all(pool[e] >= m for e, m in need.items()):
                pieces.append((LSummand(rho, HalfInt(top - (a - 1)), a), need))
    phis = {LParameter(c) for c in _exact_covers(pool, pieces)}
    return sorted((phi for phi in phis if validate_for_group(phi, G)), key=LParameter.sort_key)


def apars_brute(lam: InfinitesimalParameter, G: GroupContext) -> list[ArthurParameter]:
    """Valid multisets of ``(rho, a, b)`` whose full expansion is ``lam``."""
    pool = Counter((rho, x.twice) for rho, x in lam.exps)
    n = sum(pool.values())
    pieces = []
    for rho in sorted({r for r, _ in pool}, key=lambda r: r.name):
        for a, b in product(range(1, n + 1), repeat=2):
            if a * b > n:
                continue
            need = Counter((rho, (a - 1) - 2 * i + (b - 1) - 2 * j) for i in range(a) for j in range(b))
            if all(pool[e] >= m for e, m in need.items()):
                pieces.append((ASummand(rho, a, b), need))
    psis = {ArthurParameter(c) for c in _exact_covers(pool, pieces)}
    return sorted((psi for psi in psis if validate_for_group(psi, G)), key=ArthurParameter.sort_key)


def check_equal(what: str, fast, slow) -> None:
    if list(fast) != list(slow):
        raise OracleMismatchError(f"{what}: fast path gave {len(fast)} items, brute force {len(slow)}")
