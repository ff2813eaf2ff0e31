"""Partition arithmetic for the classical types B, C and D.

A :class:`Partition` is stored canonically (non-increasing, no zero parts)
so structural equality is multiset equality.  All operations are pure.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, Iterator

from .errors import ParityError, TypeMismatchError

__all__ = [
    "ClassicalType",
    "OrderRelation",
    "Partition",
    "transpose",
    "union",
    "plus",
    "minus",
    "is_type",
    "collapse",
    "dominance",
    "dominates",
    "dbv_partition",
    "is_special",
    "dual_type",
    "partitions_of",
    "partitions_of_type",
]


class ClassicalType(enum.Enum):
    B = "B"
    C = "C"
    D = "D"

    def __str__(self) -> str:
        return self.value

    @property
    def odd_size(self) -> bool:
        return self is ClassicalType.B

    @property
    def forbidden_parity(self) -> int:
        """Parity (0 even, 1 odd) of parts that must have even multiplicity."""
        return 1 if self is ClassicalType.C else 0


class OrderRelation(enum.Enum):
    GREATER = "Greater"
    LESS = "Less"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"

    def __str__(self) -> str:
        return self.value

    def reversed(self) -> "OrderRelation":
        return {
            OrderRelation.GREATER: OrderRelation.LESS,
            OrderRelation.LESS: OrderRelation.GREATER,
        }.get(self, self)


@dataclass(frozen=True)
class Partition:
    """A partition of a non-negative integer.

    Accepts parts in any order; zeros are dropped and the rest sorted
    non-increasingly.  Negative parts are rejected.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        object.__setattr__(self, "parts", tuple(sorted((p for p in parts if p), reverse=True)))

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(parts)

    @classmethod
    def from_multiplicities(cls, mult: dict[int, int] | Iterable[tuple[int, int]]) -> "Partition":
        items = mult.items() if isinstance(mult, dict) else mult
        out: list[int] = []
        for part, m in items:
            out.extend([part] * m)
        return cls(tuple(out))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def part(self, i: int) -> int:
        """1-based part access with ``p_i = 0`` beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def multiplicities(self) -> dict[int, int]:
        """``{part: multiplicity}`` in decreasing part order."""
        return dict(Counter(self.parts))

    def partial_sums(self, length: int | None = None) -> list[int]:
        parts = list(self.parts)
        if length is not None:
            parts = (parts + [0] * length)[:length]
        return list(accumulate(parts))

    def __str__(self) -> str:
        chunks = []
        for part, m in self.multiplicities().items():
            chunks.append(f"{part}^{m}" if m > 1 else str(part))
        return "[" + ",".join(chunks) + "]"

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"


def transpose(p: Partition) -> Partition:
    if not p.parts:
        return p
    return Partition(tuple(sum(1 for x in p.parts if x >= i) for i in range(1, p.parts[0] + 1)))


def union(p: Partition, q: Partition) -> Partition:
    return Partition(p.parts + q.parts)


def plus(p: Partition) -> Partition:
    if not p.parts:
        return Partition((1,))
    return Partition((p.parts[0] + 1,) + p.parts[1:])


def minus(p: Partition) -> Partition:
    if not p.parts:
        raise ValueError("minus() of the empty partition")
    return Partition(p.parts[:-1] + (p.parts[-1] - 1,))


def _bad_parts(p: Partition, X: ClassicalType) -> list[int]:
    """Parts of forbidden parity with odd multiplicity, largest first."""
    return [
        part
        for part, m in p.multiplicities().items()
        if part % 2 == X.forbidden_parity and m % 2 == 1
    ]


def _parity_ok(n: int, X: ClassicalType) -> bool:
    return (n % 2 == 1) == X.odd_size


def is_type(p: Partition, X: ClassicalType) -> bool:
    return _parity_ok(p.size, X) and not _bad_parts(p, X)


def _check_type(p: Partition, X: ClassicalType) -> None:
    if not is_type(p, X):
        raise TypeMismatchError(f"{p} is not a partition of type {X}")


def collapse(p: Partition, X: ClassicalType) -> Partition:
    """The X-collapse: largest type-X partition dominated by ``p``.

    Repeatedly take the largest offending part q, lower its last
    occurrence to q-1 and raise the first later part below q-1 by one
    (a virtual zero part if none exists).
    """
    if not _parity_ok(p.size, X):
        raise ParityError(f"size {p.size} of {p} has the wrong parity for type {X}")
    parts = list(p.parts)
    while True:
        bad = _bad_parts(Partition(tuple(parts)), X)
        if not bad:
            return Partition(tuple(parts))
        q = bad[0]
        i = max(k for k, v in enumerate(parts) if v == q)
        parts[i] = q - 1
        for j in range(i + 1, len(parts)):
            if parts[j] < q - 1:
                parts[j] += 1
                break
        else:
            parts.append(1)
        parts = [v for v in parts if v]


def dominance(p: Partition, q: Partition) -> OrderRelation:
    if p.size != q.size:
        raise ValueError(f"cannot compare {p} and {q}: sizes {p.size} != {q.size}")
    if p == q:
        return OrderRelation.EQUAL
    length = max(len(p), len(q))
    ge = le = True
    for a, b in zip(p.partial_sums(length), q.partial_sums(length)):
        if a < b:
            ge = False
        elif a > b:
            le = False
    if ge:
        return OrderRelation.GREATER
    if le:
        return OrderRelation.LESS
    return OrderRelation.INCOMPARABLE


def dominates(p: Partition, q: Partition) -> bool:
    """``p >= q`` in dominance order."""
    return dominance(p, q) in (OrderRelation.GREATER, OrderRelation.EQUAL)


_DUAL = {ClassicalType.B: ClassicalType.C, ClassicalType.C: ClassicalType.B, ClassicalType.D: ClassicalType.D}


def dual_type(X: ClassicalType) -> ClassicalType:
    return _DUAL[X]


def dbv_partition(p: Partition, X: ClassicalType) -> tuple[Partition, ClassicalType]:
    """Barbasch-Vogan duality ``P_B(2n+1) <-> P_C(2n)``, ``P_D(2n) -> P_D(2n)``."""
    _check_type(p, X)
    if X is ClassicalType.B:
        return transpose(collapse(minus(p), ClassicalType.C)), ClassicalType.C
    if X is ClassicalType.C:
        return transpose(collapse(plus(p), ClassicalType.B)), ClassicalType.B
    return collapse(transpose(p), ClassicalType.D), ClassicalType.D


def is_special(p: Partition, X: ClassicalType) -> bool:
    return dbv_partition(*dbv_partition(p, X))[0] == p


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n

    def rec(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    for parts in rec(n, max_part):
        yield Partition(parts)


def partitions_of_type(n: int, X: ClassicalType) -> list[Partition]:
    if not _parity_ok(n, X):
        return []
    return [p for p in partitions_of(n) if is_type(p, X)]
