"""L-parameters, local Arthur parameters and infinitesimal parameters.

Parameters are modeled by their composition with the standard embedding
into GL_N: finite multisets of summands ``rho|.|^x (x) S_a`` and
``rho (x) S_a (x) S_b``.  ``rho`` is an opaque bounded irreducible
representation label carrying only a dimension and a self-duality kind.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import InvalidParameterError
from .partitions import ClassicalType, Partition

__all__ = [
    "Duality",
    "Rho",
    "TRIVIAL",
    "HalfInt",
    "LSummand",
    "LParameter",
    "ASummand",
    "ArthurParameter",
    "InfinitesimalParameter",
    "Family",
    "GroupContext",
    "phi_of_psi",
    "lambda_of_phi",
    "lambda_of_psi",
    "hat_psi",
    "partition_of_phi",
    "pD",
    "pA",
    "validate_for_group",
    "ParameterFlags",
    "classify",
    "dll_data",
]


class Duality(enum.Enum):
    ORTHOGONAL = "O"
    SYMPLECTIC = "S"
    NOT_SELF_DUAL = "N"

    def flipped(self) -> "Duality":
        if self is Duality.ORTHOGONAL:
            return Duality.SYMPLECTIC
        if self is Duality.SYMPLECTIC:
            return Duality.ORTHOGONAL
        return self


@dataclass(frozen=True)
class Rho:
    """Label of a bounded irreducible representation of the Weil group.

    A non-self-dual label names its partner; the partner label is rebuilt
    on demand by :meth:`dual`, so no registry is needed for duality.
    """

    name: str
    dim: int = 1
    duality: Duality = Duality.ORTHOGONAL
    partner: str | None = None
    unramified: bool = False

    def __post_init__(self):
        if self.dim < 1:
            raise InvalidParameterError(f"rho {self.name!r}: dimension must be positive")
        if self.dim == 1 and self.duality is Duality.SYMPLECTIC:
            raise InvalidParameterError(f"rho {self.name!r}: a character cannot be symplectic")
        if (self.duality is Duality.NOT_SELF_DUAL) != (self.partner is not None):
            raise InvalidParameterError(f"rho {self.name!r}: partner given iff not self-dual")
        if self.partner == self.name:
            raise InvalidParameterError(f"rho {self.name!r} cannot be its own non-self-dual partner")

    @property
    def self_dual(self) -> bool:
        return self.duality is not Duality.NOT_SELF_DUAL

    def dual(self) -> "Rho":
        if self.self_dual:
            return self
        return Rho(self.partner, self.dim, Duality.NOT_SELF_DUAL, self.name, self.unramified)

    @classmethod
    def nonselfdual_pair(cls, name: str, partner: str, dim: int = 1, unramified: bool = False):
        return (
            cls(name, dim, Duality.NOT_SELF_DUAL, partner, unramified),
            cls(partner, dim, Duality.NOT_SELF_DUAL, name, unramified),
        )

    def __str__(self) -> str:
        return self.name


TRIVIAL = Rho("1", 1, Duality.ORTHOGONAL, None, True)


@dataclass(frozen=True, order=True)
class HalfInt:
    """An element of (1/2)Z stored as twice its value."""

    twice: int

    @classmethod
    def of(cls, value: Union[int, Fraction, str, "HalfInt"]) -> "HalfInt":
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, str):
            value = Fraction(value.strip())
        f = Fraction(value) * 2
        if f.denominator != 1:
            raise InvalidParameterError(f"{value} is not a half-integer")
        return cls(int(f))

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice, 2)

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    def __add__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice + HalfInt.of(other).twice)

    def __sub__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice - HalfInt.of(other).twice)

    def __str__(self) -> str:
        return str(self.twice // 2) if self.is_integer else f"{self.twice}/2"




@dataclass(frozen=True)
class LSummand:
    """``rho |.|^twist (x) S_a``."""

    rho: Rho
    twist: HalfInt
    a: int

    def __post_init__(self):
        object.__setattr__(self, "twist", HalfInt.of(self.twist))
        if self.a < 1:
            raise InvalidParameterError(f"S_{self.a}: block size must be positive")

    @property
    def dim(self) -> int:
        return self.rho.dim * self.a

    def dual(self) -> "LSummand":
        return LSummand(self.rho.dual(), -self.twist, self.a)

    def sort_key(self):
        return (self.rho.name, self.a, self.twist.twice)


@dataclass(frozen=True)
class ASummand:
    """``rho (x) S_a (x) S_b``; a on the Deligne SL2, b on the Arthur SL2."""

    rho: Rho
    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise InvalidParameterError(f"S_{self.a} (x) S_{self.b}: block sizes must be positive")

    @property
    def dim(self) -> int:
        return self.rho.dim * self.a * self.b

    def dual(self) -> "ASummand":
        return ASummand(self.rho.dual(), self.a, self.b)

    def sort_key(self):
        return (self.rho.name, self.a, self.b)


def _canonical(summands: Iterable) -> tuple:
    return tuple(sorted(summands, key=lambda s: s.sort_key()))


@dataclass(frozen=True)
class LParameter:
    summands: tuple[LSummand, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "summands", _canonical(self.summands))

    @property
    def dim(self) -> int:
        return sum(s.dim for s in self.summands)

    def dual(self) -> "LParameter":
        return LParameter(tuple(s.dual() for s in self.summands))

    @property
    def is_self_dual(self) -> bool:
        return self.dual() == self

    def sort_key(self):
        return tuple(s.sort_key() for s in self.summands)

    def labels(self) -> set[Rho]:
        return {s.rho for s in self.summands}


@dataclass(frozen=True)
class ArthurParameter:
    summands: tuple[ASummand, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "summands", _canonical(self.summands))

    @property
    def dim(self) -> int:
        return sum(s.dim for s in self.summands)

    def dual(self) -> "ArthurParameter":
        return ArthurParameter(tuple(s.dual() for s in self.summands))

    @property
    def is_self_dual(self) -> bool:
        return self.dual() == self

    def sort_key(self):
        return tuple(s.sort_key() for s in self.summands)

    def labels(self) -> set[Rho]:
        return {s.rho for s in self.summands}


@dataclass(frozen=True)
class InfinitesimalParameter:
    """Multiset of ``(rho, exponent)``; each entry stands for ``rho|.|^x``."""

    exps: tuple[tuple[Rho, HalfInt], ...] = ()

    def __post_init__(self):
        items = tuple((rho, HalfInt.of(x)) for rho, x in self.exps)
        object.__setattr__(self, "exps", tuple(sorted(items, key=lambda e: (e[0].name, -e[1].twice))))

    def counter(self) -> Counter:
        return Counter(self.exps)

    def by_rho(self) -> dict[Rho, list[HalfInt]]:
        """Exponents of each label in decreasing order."""
        out: dict[Rho, list[HalfInt]] = {}
        for rho, x in self.exps:
            out.setdefault(rho, []).append(x)
        return out

    @property
    def dim(self) -> int:
        return sum(rho.dim for rho, _ in self.exps)

    def dual(self) -> "InfinitesimalParameter":
        return InfinitesimalParameter(tuple((rho.dual(), -x) for rho, x in self.exps))

    @property
    def is_self_dual(self) -> bool:
        return self.dual() == self

    def __len__(self) -> int:
        return len(self.exps)


class Family(enum.Enum):
    SO_ODD = "SO_odd"
    SP = "Sp"
    SO_EVEN = "SO_even"


_DUAL_TYPE = {Family.SO_ODD: ClassicalType.C, Family.SP: ClassicalType.B, Family.SO_EVEN: ClassicalType.D}


@dataclass(frozen=True)
class GroupContext:
    """Split SO(2n+1), Sp(2n) or SO(2n) over a p-adic field."""

    family: Family
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise InvalidParameterError("rank must be non-negative")

    @property
    def N(self) -> int:
        """Dimension of the standard representation of the dual group."""
        return 2 * self.n + 1 if self.family is Family.SP else 2 * self.n

    @property
    def dual_type(self) -> ClassicalType:
        return _DUAL_TYPE[self.family]

    @property
    def dual_form(self) -> Duality:
        """Form preserved by the dual group: Sp(2n,C) for SO(2n+1), orthogonal otherwise."""
        return Duality.SYMPLECTIC if self.family is Family.SO_ODD else Duality.ORTHOGONAL

    @property
    def name(self) -> str:
        if self.family is Family.SP:
            return f"Sp{2 * self.n}"
        return f"SO{2 * self.n + 1}" if self.family is Family.SO_ODD else f"SO{2 * self.n}"

    def __str__(self) -> str:
        return self.name

    @classmethod
    def with_dual_dimension(cls, N: int) -> list["GroupContext"]:
        """Groups whose dual group has standard representation of dimension N."""
        if N % 2:
            return [cls(Family.SP, (N - 1) // 2)]
        return [cls(Family.SO_ODD, N // 2), cls(Family.SO_EVEN, N // 2)]


# --- expansions -----------------------------------------------------------


def _centered(b: int) -> list[int]:
    """Twice the exponents (b-1)/2 - k for k = 0 .. b-1."""
    return [b - 1 - 2 * k for k in range(b)]


def phi_of_psi(psi: ArthurParameter) -> LParameter:
    return LParameter(
        tuple(LSummand(s.rho, HalfInt(t), s.a) for s in psi.summands for t in _centered(s.b))
    )


def lambda_of_phi(phi: LParameter) -> InfinitesimalParameter:
    return InfinitesimalParameter(
        tuple((s.rho, HalfInt(s.twist.twice + t)) for s in phi.summands for t in _centered(s.a))
    )


def lambda_of_psi(psi: ArthurParameter) -> InfinitesimalParameter:
    return lambda_of_phi(phi_of_psi(psi))


def hat_psi(psi: ArthurParameter) -> ArthurParameter:
    return ArthurParameter(tuple(ASummand(s.rho, s.b, s.a) for s in psi.summands))


def partition_of_phi(phi: LParameter) -> Partition:
    return Partition(tuple(s.a for s in phi.summands for _ in range(s.rho.dim)))


def pD(psi: ArthurParameter) -> Partition:
    return Partition(tuple(s.a for s in psi.summands for _ in range(s.rho.dim * s.b)))


def pA(psi: ArthurParameter) -> Partition:
    return Partition(tuple(s.b for s in psi.summands for _ in range(s.rho.dim * s.a)))


# --- validity ---------------------------------------------------------------


def _constituent_kind(rho: Rho, even_blocks: int) -> Duality:
    kind = rho.duality
    return kind.flipped() if even_blocks % 2 else kind


def validate_for_group(param: LParameter | ArthurParameter, G: GroupContext) -> bool:
    """Whether ``param`` defines a parameter of ``G``.

    The dimension must match, the multiset must be self-dual, and every
    self-dual constituent whose form opposes the dual group's occurs with
    even multiplicity.
    """
    if param.dim != G.N or not param.is_self_dual:
        return False
    counts = Counter(param.summands)
    for s, m in counts.items():
        if not s.rho.self_dual:
            continue
        if isinstance(s, LSummand):
            if s.twist.twice != 0:
                continue
            kind = _constituent_kind(s.rho, 1 if s.a % 2 == 0 else 0)
        else:
            kind = _constituent_kind(s.rho, (s.a % 2 == 0) + (s.b % 2 == 0))
        if kind is not G.dual_form and m % 2:
            return False
    return True


# --- classification ---------------------------------------------------------


@dataclass(frozen=True)
class ParameterFlags:
    tempered: bool
    unramified: bool
    real_infinitesimal: bool
    self_dual: bool
    anti_tempered: bool | None = None
    basic: bool | None = None

    def as_dict(self) -> dict[str, bool | None]:
        return {
            "tempered": self.tempered,
            "anti_tempered": self.anti_tempered,
            "basic": self.basic,
            "unramified": self.unramified,
            "real_infinitesimal": self.real_infinitesimal,
            "self_dual": self.self_dual,
        }


def classify(param: LParameter | ArthurParameter) -> ParameterFlags:
    """Flags of a parameter.  ``anti_tempered``/``basic`` are None for L-parameters."""
    unramified = all(rho.unramified for rho in param.labels())
    if isinstance(param, LParameter):
        return ParameterFlags(
            tempered=all(s.twist.twice == 0 for s in param.summands),
            unramified=unramified,
            real_infinitesimal=unramified,
            self_dual=param.is_self_dual,
        )
    anti = all(s.a == 1 for s in param.summands)
    return ParameterFlags(
        tempered=all(s.b == 1 for s in param.summands),
        unramified=unramified,
        real_infinitesimal=unramified,
        self_dual=param.is_self_dual,
        anti_tempered=anti,
        basic=anti and all(s.rho == TRIVIAL for s in param.summands),
    )


def dll_data(phi: LParameter, G: GroupContext) -> tuple[InfinitesimalParameter, Partition]:
    """Exponents of the semisimple element ``s`` and the partition of the nilpotent ``x``.

    ``s = phi(Fr, diag(q^1/2, q^-1/2))`` has eigenvalues ``rho(Fr) q^-x`` over
    the exponents of the infinitesimal parameter; ``x`` lies in the orbit of
    the partition of ``phi``.
    """
    if not classify(phi).unramified:
        raise InvalidParameterError("DLL data needs an unramified L-parameter")
    if not validate_for_group(phi, G):
        raise InvalidParameterError(f"L-parameter is not valid for {G}")
    return lambda_of_phi(phi), partition_of_phi(phi)
