"""Combinatorics of Barbasch-Vogan duality, L-parameters and local Arthur parameters.

Subsystems, one module each: ``partitions`` and ``orbits`` (duality on
partitions and nilpotent orbits), ``fibers`` (preimages of duality),
``parameters`` and ``arthur`` (parameter calculus, Arthur-type tests and
enumeration), ``packets`` (parameter-level weak packets), ``syntax`` (text
and JSON), ``oracles`` (brute-force references) and ``cli``.
"""

from .arthur import (
    ArthurStatus,
    arthur_status,
    arthur_witness,
    construct_psi_special_case,
    enumerate_apars,
    enumerate_lparams,
    gl_arthur_decomposition,
)
from .errors import ArthurCalcError, DomainError, ParseError
from .fibers import MoveSequence, apply_moves, enumerate_move_sequences, fiber_orbits, fiber_partitions, validate_moves
from .orbits import NilpotentOrbit, VeryEvenLabel, closure_compare, dbv_orbit
from .packets import WeakPacketReport, generalized_weak_packet, lpar_fiber, apar_fiber, open_closed, weak_packet
from .parameters import (
    TRIVIAL,
    ArthurParameter,
    ASummand,
    Duality,
    Family,
    GroupContext,
    HalfInt,
    InfinitesimalParameter,
    LParameter,
    LSummand,
    Rho,
    classify,
    hat_psi,
    lambda_of_phi,
    lambda_of_psi,
    pA,
    pD,
    partition_of_phi,
    phi_of_psi,
    validate_for_group,
)
from .partitions import ClassicalType, OrderRelation, Partition, collapse, dbv_partition, dominance, transpose

__version__ = "0.1.0"
