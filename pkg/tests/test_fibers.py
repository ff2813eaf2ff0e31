import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arthur_calc.errors import InvalidMoveError, TypeMismatchError
from arthur_calc.fibers import (
    MoveSequence,
    apply_moves,
    candidate_moves,
    enumerate_move_sequences,
    fiber_orbits,
    fiber_partitions,
    prefix_drops,
    validate_moves,
)
from arthur_calc.orbits import NilpotentOrbit, VeryEvenLabel
from arthur_calc.partitions import ClassicalType, Partition, dbv_partition, dominates, is_special, partitions_of_type

B, C, D = ClassicalType.B, ClassicalType.C, ClassicalType.D
P = Partition.of
M = lambda *pairs: MoveSequence(pairs)  # noqa: E731


@pytest.mark.parametrize(
    "moves, expected",
    [((), (4, 2, 2, 2)), (((1, 2),), (3, 3, 2, 2)), (((4, 5),), (4, 2, 2, 1, 1)), (((1, 2), (4, 5)), (3, 3, 2, 1, 1))],
)
def test_apply_moves(moves, expected):
    assert apply_moves(P(4, 2, 2, 2), M(*moves)) == Partition(expected)


@pytest.mark.parametrize(
    "p, moves, condition",
    [
        ((4, 2, 2, 2), ((0, 2),), "a"),
        ((4, 2, 2, 2), ((1, 6),), "a"),
        ((4, 2, 2, 2), ((2, 5),), "b"),  # 2 is followed by another 2
        ((2, 2), ((1, 3),), "b"),
        ((5, 3, 3, 1), ((3, 4),  (1, 2)), "c"),
        ((4, 2, 2, 2, 2), ((2, 3),), "b"),
    ],
)
def test_invalid_moves_name_condition(p, moves, condition):
    with pytest.raises(InvalidMoveError) as err:
        validate_moves(Partition(p), M(*moves))
    assert err.value.condition == condition


def test_overlapping_moves_rejected():
    # (1,3) and (3,4) share position 3
    with pytest.raises(InvalidMoveError) as err:
        validate_moves(P(4, 3, 2), M((1, 3), (3, 4)))
    assert err.value.condition == "overlap"


@pytest.mark.parametrize(
    "p, expected",
    [
        ((1,), [()]),
        ((2, 2), [(), ((2, 3),)]),
        ((4, 2, 2, 2), [(), ((1, 2),), ((4, 5),), ((1, 2), (4, 5))]),
    ],
)
def test_enumerate_move_sequences(p, expected):
    assert [m.pairs for m in enumerate_move_sequences(Partition(p))] == [tuple(e) for e in expected]


def test_candidate_moves_use_last_occurrence():
    assert candidate_moves(P(4, 2, 2, 2)) == [(1, 2), (4, 5)]


def test_fiber_examples():
    assert fiber_partitions(P(5, 3, 1, 1, 1), B) == [(P(4, 2, 2, 2), C), (P(4, 2, 2, 1, 1), C)]
    assert (P(3, 3, 1, 1, 1, 1), C) in fiber_partitions(P(7, 2, 2), B)
    assert fiber_partitions(P(2, 1, 1), C) == []  # not special
    with pytest.raises(TypeMismatchError):
        fiber_partitions(P(2, 2), B)


def test_fiber_orbits():
    assert fiber_orbits(NilpotentOrbit(B, P(5, 3, 1, 1, 1))) == [
        NilpotentOrbit(C, P(4, 2, 2, 2)),
        NilpotentOrbit(C, P(4, 2, 2, 1, 1)),
    ]
    o = NilpotentOrbit(D, P(2, 2), VeryEvenLabel.I)
    assert fiber_orbits(o) == [o]
    assert fiber_orbits(NilpotentOrbit(B, P(1))) == [NilpotentOrbit(C, Partition())]


_SPECIAL = [(X, p) for X in (B, C, D) for n in range(15) if (n % 2 == 1) == (X is B)
            for p in partitions_of_type(n, X) if is_special(p, X)]


@given(st.sampled_from(_SPECIAL))
def test_fiber_members_lie_below_maximum_with_prefix_bounds(Xp):
    X, target = Xp
    fiber = fiber_partitions(target, X)
    top, source = dbv_partition(target, X)
    assert fiber[0] == (top, source)
    for q, _ in fiber:
        assert dominates(top, q)
        assert dbv_partition(q, source)[0] == target
        assert all(0 <= d <= 1 for d in prefix_drops(top, q)[: len(top)])


def _random_split(p: Partition, rng: random.Random):
    left_p = [x for x in p.parts if rng.random() < 0.5]
    rest_p = list(p.parts)
    for x in left_p:
        rest_p.remove(x)
    return Partition(tuple(left_p)), Partition(tuple(rest_p))


@settings(max_examples=60)
@given(st.sampled_from(_SPECIAL), st.randoms(use_true_random=False))
def test_componentwise_prefix_bounds(Xp, rng):
    # Decompose p = p1 + p2, q = q1 + q2 with p_j >= q_j; each component obeys the 0..1 drop bound.
    X, target = Xp
    fiber = fiber_partitions(target, X)
    top, _ = dbv_partition(target, X)
    for q, _ in fiber:
        p1, p2 = _random_split(top, rng)
        for q1_parts in _sub_multisets(q.parts, p1.size):
            q1 = Partition(q1_parts)
            if q1.size != p1.size:
                continue
            q2 = Partition(tuple(_minus(q.parts, q1_parts)))
            if dominates(p1, q1) and dominates(p2, q2):
                for a, b in ((p1, q1), (p2, q2)):
                    assert all(0 <= d <= 1 for d in prefix_drops(a, b)[: len(a)])


def _sub_multisets(parts, size):
    out = set()

    def rec(i, acc, total):
        if total == size:
            out.add(tuple(acc))
        if i == len(parts) or total >= size:
            return
        rec(i + 1, acc + [parts[i]], total + parts[i])
        rec(i + 1, acc, total)

    rec(0, [], 0)
    return sorted(out)


def _minus(parts, sub):
    rest = list(parts)
    for x in sub:
        rest.remove(x)
    return rest
