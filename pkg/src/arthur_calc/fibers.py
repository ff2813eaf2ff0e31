"""Fibers of the Barbasch-Vogan duality.

Candidates for the preimage of a special partition are generated from the
maximal preimage by the necessary moves: a move (x, y) lowers ``p_x`` by
one and raises ``p_y`` by one, where ``p_x = p_{x+1}+1 = ... = p_{y-1}+1
= p_y+2``.  Every candidate is re-checked with :func:`dbv_partition`, so
the moves are only used to bound the search.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidMoveError, TypeMismatchError
from .orbits import NilpotentOrbit, dbv_orbit, is_special_orbit, is_very_even, orbits_of_partition
from .partitions import (
    ClassicalType,
    Partition,
    dbv_partition,
    is_special,
    is_type,
)

__all__ = [
    "MoveSequence",
    "validate_moves",
    "apply_moves",
    "candidate_moves",
    "enumerate_move_sequences",
    "prefix_drops",
    "fiber_partitions",
    "fiber_orbits",
]


@dataclass(frozen=True)
class MoveSequence:
    """Index pairs ``(x, y)``, 1-based, over an ambient partition."""

    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple((int(x), int(y)) for x, y in self.pairs))

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)


def validate_moves(p: Partition, moves: MoveSequence) -> None:
    """Raise :class:`InvalidMoveError` naming the first violated condition."""
    r = len(p)
    used: set[int] = set()
    previous = None
    for x, y in moves:
        if not 1 <= x < y <= r + 1:
            raise InvalidMoveError("a", f"pair ({x},{y}) outside 1 <= x < y <= {r + 1}")
        top = p.part(x)
        chain_ok = p.part(y) == top - 2 and all(p.part(z) == top - 1 for z in range(x + 1, y))
        if not chain_ok:
            raise InvalidMoveError("b", f"pair ({x},{y}) does not satisfy p_x = p_(x+1)+1 = ... = p_y+2 on {p}")
        if previous is not None and not top < previous:
            raise InvalidMoveError("c", f"values p_x must strictly decrease, got {previous} then {top}")
        previous = top
        if x in used or y in used:
            raise InvalidMoveError("overlap", f"pair ({x},{y}) reuses a position")
        used.update((x, y))


def apply_moves(p: Partition, moves: MoveSequence) -> Partition:
    validate_moves(p, moves)
    parts = list(p.parts) + [0]
    for x, y in moves:
        parts[x - 1] -= 1
        parts[y - 1] += 1
    return Partition(tuple(parts))


def candidate_moves(p: Partition) -> list[tuple[int, int]]:
    """Every single pair satisfying (a) and (b), by decreasing ``p_x``.

    Condition (b) forces x to be the last occurrence of its value and y the
    first position after the following run of ``p_x - 1``.
    """
    r = len(p)
    out = []
    for x in range(1, r + 1):
        top = p.part(x)
        y = x + 1
        while y <= r and p.part(y) == top - 1:
            y += 1
        if y <= r + 1 and p.part(y) == top - 2 and (x == r or p.part(x + 1) != top):
            out.append((x, y))
    return out


def enumerate_move_sequences(p: Partition) -> list[MoveSequence]:
    """All valid move sequences, one per resulting partition."""
    pairs = candidate_moves(p)
    seen: dict[Partition, MoveSequence] = {}
    for k in range(len(pairs) + 1):
        for subset in combinations(pairs, k):
            moves = MoveSequence(subset)
            try:
                q = apply_moves(p, moves)
            except InvalidMoveError:
                continue
            seen.setdefault(q, moves)
    return list(seen.values())


def prefix_drops(p: Partition, q: Partition) -> list[int]:
    """``sum_{z<=t} p_z - sum_{z<=t} q_z`` for t = 1 .. max length."""
    length = max(len(p), len(q))
    return [a - b for a, b in zip(p.partial_sums(length), q.partial_sums(length))]


def fiber_partitions(p_special: Partition, X_target: ClassicalType) -> list[tuple[Partition, ClassicalType]]:
    """All ``p`` of the dual type with ``d_BV(p) = p_special``, sorted decreasingly."""
    if not is_type(p_special, X_target):
        raise TypeMismatchError(f"{p_special} is not a partition of type {X_target}")
    if not is_special(p_special, X_target):
        return []
    p_max, source = dbv_partition(p_special, X_target)
    found = {p_max}
    for moves in enumerate_move_sequences(p_max):
        q = apply_moves(p_max, moves)
        if is_type(q, source) and dbv_partition(q, source)[0] == p_special:
            found.add(q)
    return [(q, source) for q in sorted(found, key=lambda q: q.parts, reverse=True)]


def fiber_orbits(target: NilpotentOrbit) -> list[NilpotentOrbit]:
    if not is_special_orbit(target):
        return []
    if is_very_even(target.partition, target.type):
        return [dbv_orbit(target)]
    out = []
    for q, source in fiber_partitions(target.partition, target.type):
        lifted = orbits_of_partition(q, source)
        if len(lifted) != 1:
            raise AssertionError(f"fiber element {q} over non-very-even {target} is very even")
        out.extend(lifted)
    return out

