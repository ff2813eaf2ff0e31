"""Nilpotent orbits of classical Lie algebras as labeled partitions."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import AmbiguousLabelError, InvalidOrbitError, TypeMismatchError
from .partitions import (
    ClassicalType,
    OrderRelation,
    Partition,
    dbv_partition,
    dominance,
    is_special,
    is_type,
)

__all__ = [
    "VeryEvenLabel",
    "NilpotentOrbit",
    "is_very_even",
    "orbits_of_partition",
    "closure_compare",
    "orbit_leq",
    "dbv_orbit",
    "is_special_orbit",
]


class VeryEvenLabel(enum.Enum):
    I = "I"
    II = "II"

    def __str__(self) -> str:
        return self.value

    def swapped(self) -> "VeryEvenLabel":
        return VeryEvenLabel.II if self is VeryEvenLabel.I else VeryEvenLabel.I


def is_very_even(p: Partition, X: ClassicalType) -> bool:
    """Type D, nonempty, every part even.  The zero orbit of so(0) does not split."""
    return X is ClassicalType.D and len(p) > 0 and all(part % 2 == 0 for part in p)


@dataclass(frozen=True)
class NilpotentOrbit:
    type: ClassicalType
    partition: Partition
    label: VeryEvenLabel | None = None

    def __post_init__(self):
        if not is_type(self.partition, self.type):
            raise TypeMismatchError(f"{self.partition} is not a partition of type {self.type}")
        very_even = is_very_even(self.partition, self.type)
        if very_even and self.label is None:
            raise InvalidOrbitError(f"very even partition {self.partition} needs a label I or II")
        if not very_even and self.label is not None:
            raise InvalidOrbitError(f"{self.partition} is not very even; label {self.label} not allowed")

    @property
    def size(self) -> int:
        return self.partition.size

    def __str__(self) -> str:
        suffix = f"#{self.label}" if self.label is not None else ""
        return f"{self.type}:{self.partition}{suffix}"


def orbits_of_partition(p: Partition, X: ClassicalType) -> list[NilpotentOrbit]:
    if not is_type(p, X):
        raise TypeMismatchError(f"{p} is not a partition of type {X}")
    if is_very_even(p, X):
        return [NilpotentOrbit(X, p, VeryEvenLabel.I), NilpotentOrbit(X, p, VeryEvenLabel.II)]
    return [NilpotentOrbit(X, p)]


def closure_compare(o1: NilpotentOrbit, o2: NilpotentOrbit) -> OrderRelation:
    if o1.type is not o2.type or o1.size != o2.size:
        raise TypeMismatchError(f"cannot compare {o1} with {o2}")
    if o1.partition == o2.partition and o1.label != o2.label:
        return OrderRelation.INCOMPARABLE
    return dominance(o1.partition, o2.partition)


def orbit_leq(o1: NilpotentOrbit, o2: NilpotentOrbit) -> bool:
    return closure_compare(o1, o2) in (OrderRelation.LESS, OrderRelation.EQUAL)


def dbv_orbit(orbit: NilpotentOrbit) -> NilpotentOrbit:
    """Duality on orbits.

    A very even orbit of so(2n) maps to the like-labeled orbit on the dual
    partition when n is even and to the other label when n is odd.
    """
    image, image_type = dbv_partition(orbit.partition, orbit.type)
    if orbit.label is not None:
        n = orbit.size // 2
        label = orbit.label if n % 2 == 0 else orbit.label.swapped()
        if not is_very_even(image, image_type):
            raise AmbiguousLabelError(f"dual {image} of labeled orbit {orbit} is not very even")
        return NilpotentOrbit(image_type, image, label)
    if is_very_even(image, image_type):
        raise AmbiguousLabelError(f"unlabeled orbit {orbit} has very even dual {image}")
    return NilpotentOrbit(image_type, image)


def is_special_orbit(orbit: NilpotentOrbit) -> bool:
    return is_special(orbit.partition, orbit.type)
