"""Weak local Arthur packets at the level of parameters.

A representation ``pi`` is represented here by the L-parameter of its
Aubert-Zelevinsky dual; its wavefront orbit is then ``d_BV(O_phi)``.  So
every packet below is a set of parameters, never of representations.

For SO(2n) the multiset model does not distinguish ``phi`` from its outer
conjugate, whose orbit carries the other very even label.  A very even
``p(phi)`` therefore stands for both labeled orbits, and a condition on
``O_phi`` holds when it holds for either of them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arthur import arthur_witness, enumerate_apars, enumerate_lparams
from .errors import EmptyParameterSetError, InvalidParameterError, NonUniqueExtremumError
from .orbits import NilpotentOrbit, dbv_orbit, orbit_leq, orbits_of_partition
from .parameters import (
    ArthurParameter,
    ASummand,
    GroupContext,
    InfinitesimalParameter,
    LParameter,
    classify,
    hat_psi,
    lambda_of_psi,
    pA,
    partition_of_phi,
    phi_of_psi,
    validate_for_group,
)
from .partitions import Partition, dominates

__all__ = [
    "WeakPacketReport",
    "dual_orbits",
    "open_closed",
    "lpar_fiber",
    "apar_fiber",
    "lpar_leq_set",
    "weak_packet",
    "generalized_weak_packet",
    "tempered_arthur",
    "closed_from_open",
]


def dual_orbits(p: Partition, G: GroupContext) -> list[NilpotentOrbit]:
    """``d_BV`` of every orbit of the dual Lie algebra with partition ``p``."""
    return [dbv_orbit(o) for o in orbits_of_partition(p, G.dual_type)]


def _maps_to(p: Partition, G: GroupContext, target: NilpotentOrbit) -> bool:
    return any(o == target for o in dual_orbits(p, G))


def _maps_below(p: Partition, G: GroupContext, target: NilpotentOrbit) -> bool:
    return any(orbit_leq(o, target) for o in dual_orbits(p, G))


def open_closed(lam: InfinitesimalParameter, G: GroupContext) -> tuple[LParameter, LParameter]:
    """The open and closed L-parameters of ``Phi(G)_lambda``."""
    phis = enumerate_lparams(lam, G)
    if not phis:
        raise EmptyParameterSetError(f"no L-parameter of {G} has this infinitesimal parameter")
    parts = [partition_of_phi(phi) for phi in phis]

    def extremum(upper: bool) -> LParameter:
        hits = [
            phi
            for phi, p in zip(phis, parts)
            if all(dominates(p, q) if upper else dominates(q, p) for q in parts)
        ]
        if len(hits) != 1:
            which = "maximum" if upper else "minimum"
            raise NonUniqueExtremumError(f"dominance {which} attained by {len(hits)} parameters")
        return hits[0]

    phi_open, phi_closed = extremum(True), extremum(False)
    if classify(phi_open).tempered and closed_from_open(phi_open) != phi_closed:
        raise AssertionError("closed parameter differs from phi of the dual of the tempered open one")
    return phi_open, phi_closed


def lpar_fiber(lam: InfinitesimalParameter, G: GroupContext, target: NilpotentOrbit) -> list[LParameter]:
    return [phi for phi in enumerate_lparams(lam, G) if _maps_to(partition_of_phi(phi), G, target)]


def apar_fiber(lam: InfinitesimalParameter, G: GroupContext, target: NilpotentOrbit) -> list[ArthurParameter]:
    return [psi for psi in enumerate_apars(lam, G) if _maps_to(pA(psi), G, target)]


def lpar_leq_set(lam: InfinitesimalParameter, G: GroupContext, target: NilpotentOrbit) -> list[LParameter]:
    return [phi for phi in enumerate_lparams(lam, G) if _maps_below(partition_of_phi(phi), G, target)]


@dataclass(frozen=True)
class WeakPacketReport:
    psi0: ArthurParameter
    group: GroupContext
    lam: InfinitesimalParameter
    target: NilpotentOrbit
    lpar_fiber: tuple[LParameter, ...]
    apar_fiber: tuple[ArthurParameter, ...]
    leq_set: tuple[LParameter, ...]
    witnesses: dict = field(default_factory=dict, compare=False)

    @property
    def all_arthur(self) -> bool:
        return all(self.witnesses.get(phi) is not None for phi in self.lpar_fiber)


def weak_packet(psi0: ArthurParameter, G: GroupContext) -> WeakPacketReport:
    """Parameter-level weak packet of an anti-tempered ``psi0``.

    ``leq_set`` collects every ``phi`` with ``d_BV(O_phi) <= d_BV(O^A_psi0)``;
    since the open parameter ``phi_{hat psi0}`` is tempered and ``d_BV``
    reverses order, this collapses onto ``lpar_fiber``.  ``apar_fiber``
    is indexed by ``psi``, and ``psi -> phi_{hat psi}`` maps it onto
    ``lpar_fiber``.
    """
    if not classify(psi0).anti_tempered:
        raise InvalidParameterError("weak packets need an anti-tempered Arthur parameter")
    if not validate_for_group(psi0, G):
        raise InvalidParameterError(f"Arthur parameter is not valid for {G}")
    lam = lambda_of_psi(psi0)
    # a very even image gets label I; _maps_to accepts either label on the source side
    target = dual_orbits(pA(psi0), G)[0]
    fiber = lpar_fiber(lam, G, target)
    leq = lpar_leq_set(lam, G, target)
    if set(leq) != set(fiber):
        raise AssertionError("leq_set differs from lpar_fiber although the open parameter is tempered")
    return WeakPacketReport(
        psi0=psi0,
        group=G,
        lam=lam,
        target=target,
        lpar_fiber=tuple(fiber),
        apar_fiber=tuple(apar_fiber(lam, G, target)),
        leq_set=tuple(leq),
        witnesses={phi: arthur_witness(phi, G) for phi in fiber},
    )


def generalized_weak_packet(
    target: NilpotentOrbit, lam: InfinitesimalParameter, G: GroupContext
) -> list[ArthurParameter]:
    """Arthur parameters indexing the generalized weak packet over ``target``."""
    return [psi for psi in enumerate_apars(lam, G) if _maps_below(pA(psi), G, target)]


def tempered_arthur(phi: LParameter) -> ArthurParameter:
    """``phi (x) S_1`` for a tempered ``phi``."""
    if not classify(phi).tempered:
        raise InvalidParameterError("phi (x) S_1 needs a tempered phi")
    return ArthurParameter(tuple(ASummand(s.rho, s.a, 1) for s in phi.summands))


def closed_from_open(phi_open: LParameter) -> LParameter:
    """``phi_{hat psi^0}`` with ``psi^0 = phi^0 (x) S_1``."""
    return phi_of_psi(hat_psi(tempered_arthur(phi_open)))
