"""Numerical semigroup invariants: gaps, delta, conductor, generators."""

import pytest

from hilbstrat import NumericalSemigroup
from hilbstrat.errors import EmptyGenerators, NonCoprime


def test_e6_invariants():
    sg = NumericalSemigroup((3, 4))
    assert sg.gens == (3, 4)
    assert sg.gaps == (1, 2, 5)
    assert sg.delta == 3
    assert sg.conductor == 6
    assert sg.multiplicity == 3


def test_e8_invariants():
    sg = NumericalSemigroup((3, 5))
    assert sg.gaps == (1, 2, 4, 7)
    assert sg.delta == 4
    assert sg.conductor == 8


def test_cusp():
    sg = NumericalSemigroup((2, 3))
    assert sg.gaps == (1,)
    assert sg.delta == 1
    assert sg.conductor == 2


def test_smooth_point():
    sg = NumericalSemigroup((1,))
    assert sg.gens == (1,)
    assert sg.gaps == ()
    assert sg.delta == 0
    assert sg.conductor == 0


def test_redundant_generators_dropped():
    assert NumericalSemigroup((3, 4, 7)).gens == (3, 4)
    assert NumericalSemigroup((4, 5, 9, 13)).gens == (4, 5)
    # 6 is not a sum of 4s and 5s, so it stays
    assert NumericalSemigroup((4, 5, 6)).gens == (4, 5, 6)


def test_generator_order_does_not_matter():
    assert NumericalSemigroup((5, 3)).gens == NumericalSemigroup((3, 5)).gens


@pytest.mark.parametrize("gens", [(4, 6), (2, 4), (6, 9, 15)])
def test_non_coprime_rejected(gens):
    with pytest.raises(NonCoprime):
        NumericalSemigroup(gens)


def test_empty_and_nonpositive_rejected():
    with pytest.raises(EmptyGenerators):
        NumericalSemigroup(())
    with pytest.raises(ValueError):
        NumericalSemigroup((0, 3))
    with pytest.raises(ValueError):
        NumericalSemigroup((-2, 3))


def test_membership_matches_reachability():
    sg = NumericalSemigroup((3, 5))
    reachable = {0}
    for n in range(1, 41):
        if any(n - g in reachable for g in sg.gens if n - g >= 0):
            reachable.add(n)
    for n in range(41):
        assert (n in sg) == (n in reachable)


@pytest.mark.parametrize("gens", [(2, 3), (3, 4), (3, 5), (4, 5), (3, 7), (5, 7)])
def test_gap_count_and_conductor(gens):
    sg = NumericalSemigroup(gens)
    assert len(sg.gaps) == sg.delta
    if sg.gaps:
        assert sg.conductor == max(sg.gaps) + 1
        assert all(n in sg for n in range(sg.conductor, sg.conductor + 10))
    else:
        assert sg.conductor == 0
