import pytest
from hypothesis import given
from hypothesis import strategies as st

from arthur_calc.errors import InvalidOrbitError, TypeMismatchError
from arthur_calc.orbits import (
    NilpotentOrbit,
    VeryEvenLabel,
    closure_compare,
    dbv_orbit,
    is_special_orbit,
    is_very_even,
    orbits_of_partition,
)
from arthur_calc.partitions import ClassicalType, OrderRelation, Partition, dominance, is_special, partitions_of_type

B, C, D = ClassicalType.B, ClassicalType.C, ClassicalType.D
I, II = VeryEvenLabel.I, VeryEvenLabel.II
P = Partition.of


def D_orbits(max_size):
    return [o for n in range(0, max_size + 1, 2) for p in partitions_of_type(n, D) for o in orbits_of_partition(p, D)]


def test_orbits_of_partition():
    assert len(orbits_of_partition(P(4, 2, 2, 2), C)) == 1
    assert [o.label for o in orbits_of_partition(P(2, 2), D)] == [I, II]
    assert orbits_of_partition(P(3, 1), D) == [NilpotentOrbit(D, P(3, 1))]


def test_very_even():
    assert is_very_even(P(4, 4, 2, 2), D)
    assert not is_very_even(P(3, 3, 1, 1), D)
    assert not is_very_even(P(2, 2), C)
    assert not is_very_even(Partition(), D)


def test_label_invariants():
    with pytest.raises(InvalidOrbitError):
        NilpotentOrbit(D, P(2, 2))
    with pytest.raises(InvalidOrbitError):
        NilpotentOrbit(D, P(3, 3, 1, 1), I)
    with pytest.raises(TypeMismatchError):
        NilpotentOrbit(B, P(2, 2))


def test_closure_compare_examples():
    o = NilpotentOrbit(C, P(4, 2, 2, 2))
    assert closure_compare(o, o) is OrderRelation.EQUAL
    assert closure_compare(NilpotentOrbit(D, P(2, 2), I), NilpotentOrbit(D, P(2, 2), II)) is OrderRelation.INCOMPARABLE
    assert closure_compare(NilpotentOrbit(C, P(4, 2)), NilpotentOrbit(C, P(2, 2, 1, 1))) is OrderRelation.GREATER


def test_labeled_orbits_compare_with_smaller_partitions():
    assert closure_compare(NilpotentOrbit(D, P(2, 2), I), NilpotentOrbit(D, P(1, 1, 1, 1))) is OrderRelation.GREATER
    assert closure_compare(NilpotentOrbit(D, P(3, 1)), NilpotentOrbit(D, P(2, 2), II)) is OrderRelation.GREATER


def test_dbv_orbit_examples():
    assert dbv_orbit(NilpotentOrbit(C, P(4, 2, 2, 1, 1))) == NilpotentOrbit(B, P(5, 3, 1, 1, 1))
    assert dbv_orbit(NilpotentOrbit(D, P(2, 2), I)) == NilpotentOrbit(D, P(2, 2), I)
    # n = 3 is odd: the label swaps
    assert dbv_orbit(NilpotentOrbit(D, P(2, 2, 1, 1))) == NilpotentOrbit(D, P(3, 3))


def test_dbv_orbit_more_values():
    assert dbv_orbit(NilpotentOrbit(D, P(5, 1))) == NilpotentOrbit(D, P(1, 1, 1, 1, 1, 1))
    assert dbv_orbit(NilpotentOrbit(D, P(4, 4, 2, 2), II)) == NilpotentOrbit(D, P(4, 4, 2, 2), II)


def test_very_even_sizes_are_multiples_of_four():
    # so the label-swapping branch (n odd) never fires
    for o in D_orbits(16):
        if o.label is not None:
            assert o.size % 4 == 0


def test_dbv_orbit_is_involution_on_special_D_orbits_exhaustive():
    # no AmbiguousLabelError can be raised on any orbit of size <= 12
    for o in D_orbits(12):
        d = dbv_orbit(o)
        if is_special_orbit(o):
            assert dbv_orbit(d) == o


@given(st.sampled_from([B, C, D]).flatmap(
    lambda X: st.sampled_from(
        [o for n in range(13) if (n % 2 == 1) == (X is B) for p in partitions_of_type(n, X) for o in orbits_of_partition(p, X)]
    )
))
def test_dbv_orbit_twice_on_special(o):
    assert is_special_orbit(o) == is_special(o.partition, o.type)
    if is_special_orbit(o):
        assert dbv_orbit(dbv_orbit(o)) == o


def test_closure_compare_agrees_with_dominance_when_unlabeled():
    orbits = [o for o in D_orbits(10) if o.label is None]
    for a in orbits:
        for b in orbits:
            if a.size == b.size:
                assert closure_compare(a, b) is dominance(a.partition, b.partition)
