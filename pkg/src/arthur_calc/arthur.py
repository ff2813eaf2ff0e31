"""Arthur-type decisions and enumeration of parameters with a given infinitesimal parameter."""

from __future__ import annotations

import enum
from collections import Counter
from functools import lru_cache
from itertools import product

from .errors import InvalidParameterError
from .fibers import MoveSequence, validate_moves
from .parameters import (
    ArthurParameter,
    ASummand,
    GroupContext,
    HalfInt,
    InfinitesimalParameter,
    LParameter,
    LSummand,
    Rho,
    phi_of_psi,
    validate_for_group,
)
from .partitions import Partition

__all__ = [
    "ArthurStatus",
    "isotypic_blocks",
    "gl_arthur_decomposition",
    "arthur_status",
    "arthur_witness",
    "construct_psi_special_case",
    "multisegments",
    "enumerate_lparams",
    "enumerate_apars",
]


class ArthurStatus(enum.Enum):
    WITNESS = "witness"
    NO_DECOMPOSITION = "no-decomposition"
    INVALID_FOR_GROUP = "decomposes-over-GL-but-invalid-for-G"


def isotypic_blocks(phi: LParameter) -> dict[tuple[Rho, int], list[HalfInt]]:
    """Twists of ``phi`` grouped by ``(rho, a)``, each list decreasing."""
    blocks: dict[tuple[Rho, int], list[HalfInt]] = {}
    for s in phi.summands:
        blocks.setdefault((s.rho, s.a), []).append(s.twist)
    for twists in blocks.values():
        twists.sort(reverse=True)
    return blocks


def gl_arthur_decomposition(phi: LParameter) -> ArthurParameter | None:
    """The unique ``psi`` over GL_N with ``phi_psi = phi``, if any.

    Each Arthur block expands to a twist chain centered at 0 on a single
    ``(rho, a)``, so the chain through the largest remaining twist is forced.
    """
    out = []
    for (rho, a), twists in isotypic_blocks(phi).items():
        pool = Counter(t.twice for t in twists)
        while pool:
            top = max(pool)
            if top < 0:
                return None
            chain = range(top, -top - 1, -2)
            if any(pool[t] == 0 for t in chain):
                return None
            for t in chain:
                pool[t] -= 1
                if not pool[t]:
                    del pool[t]
            out.append(ASummand(rho, a, top + 1))
    return ArthurParameter(tuple(out))


def _check_input(phi: LParameter, G: GroupContext) -> None:
    if not phi.is_self_dual:
        raise InvalidParameterError("L-parameter is not self-dual")
    if not validate_for_group(phi, G):
        raise InvalidParameterError(f"L-parameter is not valid for {G}")


def arthur_status(phi: LParameter, G: GroupContext) -> tuple[ArthurStatus, ArthurParameter | None]:
    _check_input(phi, G)
    psi = gl_arthur_decomposition(phi)
    if psi is None:
        return ArthurStatus.NO_DECOMPOSITION, None
    assert phi_of_psi(psi) == phi
    if not validate_for_group(psi, G):
        return ArthurStatus.INVALID_FOR_GROUP, psi
    return ArthurStatus.WITNESS, psi


def arthur_witness(phi: LParameter, G: GroupContext) -> ArthurParameter | None:
    status, psi = arthur_status(phi, G)
    return psi if status is ArthurStatus.WITNESS else None


def construct_psi_special_case(p: Partition, moves: MoveSequence, rho: Rho) -> ArthurParameter:
    """Arthur parameter attached to a move sequence on ``rho (x) (+) S_{p_j}``.

    Untouched parts give ``rho (x) S_{p_j} (x) S_1``; a move (x, y) gives
    ``rho (x) S_{p_x - 1} (x) S_2``.
    """
    if rho.dim != 1 or not rho.self_dual:
        raise InvalidParameterError(f"{rho} must be a self-dual character")
    validate_moves(p, moves)
    touched = {i for pair in moves for i in pair}
    summands = [ASummand(rho, p.part(j), 1) for j in range(1, len(p) + 1) if j not in touched]
    summands += [ASummand(rho, p.part(x) - 1, 2) for x, _ in moves]
    return ArthurParameter(tuple(summands))


# --- enumeration -------------------------------------------------------------


@lru_cache(maxsize=None)
def _multisegments(pool: tuple[tuple[int, int], ...], cap_top: int | None, cap_len: int) -> tuple:
    """Decompositions of a multiset of twice-exponents into step-1 segments.

    ``pool`` is a sorted tuple of (value, multiplicity).  Segments are
    produced top-first; segments sharing a top appear with non-increasing
    lengths so each multiset is produced once.  Returns a tuple of
    tuples of ``(twice_top, length)``.
    """
    if not pool:
        return ((),)
    counts = dict(pool)
    top = max(counts)
    limit = cap_len if top == cap_top else len(counts) + 1
    results = []
    length = 0
    while length < limit:
        nxt = top - 2 * length
        if counts.get(nxt, 0) == 0:
            break
        length += 1
        rest = dict(counts)
        for k in range(length):
            v = top - 2 * k
            rest[v] -= 1
            if not rest[v]:
                del rest[v]
        key = tuple(sorted(rest.items()))
        for tail in _multisegments(key, top, length):
            results.append(((top, length),) + tail)
    return tuple(results)


def multisegments(exponents: list[HalfInt]) -> list[list[tuple[HalfInt, int]]]:
    """All multisegment decompositions as lists of ``(twist, a)``."""
    pool = tuple(sorted(Counter(x.twice for x in exponents).items()))
    return [
        [(HalfInt(top - (length - 1)), length) for top, length in decomposition]
        for decomposition in _multisegments(pool, None, 0)
    ]


def enumerate_lparams(lam: InfinitesimalParameter, G: GroupContext, limit: int | None = None) -> list[LParameter]:
    """``Phi(G)_lambda`` in canonical order."""
    if lam.dim != G.N or not lam.is_self_dual:
        return []
    per_rho = []
    for rho, exps in sorted(lam.by_rho().items(), key=lambda kv: kv[0].name):
        per_rho.append([[LSummand(rho, t, a) for t, a in dec] for dec in multisegments(exps)])
    found = set()
    for choice in product(*per_rho):
        phi = LParameter(tuple(s for block in choice for s in block))
        if validate_for_group(phi, G):
            found.add(phi)
    out = sorted(found, key=LParameter.sort_key)
    return out if limit is None else out[:limit]


def enumerate_apars(lam: InfinitesimalParameter, G: GroupContext, limit: int | None = None) -> list[ArthurParameter]:
    """``Psi(G)_lambda``, via Arthur witnesses of ``Phi(G)_lambda`` (psi -> phi_psi is injective)."""
    found = []
    for phi in enumerate_lparams(lam, G):
        psi = arthur_witness(phi, G)
        if psi is not None:
            found.append(psi)
    out = sorted(found, key=ArthurParameter.sort_key)
    return out if limit is None else out[:limit]
