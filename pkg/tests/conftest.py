"""Shared fixtures: the two worked semigroups and a cached cell factory."""

from itertools import combinations

import pytest

from hilbstrat import NumericalSemigroup, build_cell, enumerate_colength


@pytest.fixture
def e6():
    return NumericalSemigroup((3, 4))


@pytest.fixture
def e8():
    return NumericalSemigroup((3, 5))


_CELL_CACHE = {}


@pytest.fixture(scope="session")
def cells_of():
    """Factory returning the full list of stratum cells for (gens, r).

    Cells are cached for the whole session; building the E8 strata
    repeatedly would dominate the suite runtime otherwise.
    """

    def get(gens, r):
        key = (tuple(gens), r)
        if key not in _CELL_CACHE:
            sg = NumericalSemigroup(gens)
            mods = enumerate_colength(sg, r)
            _CELL_CACHE[key] = [
                build_cell(sg, m, r, index=i) for i, m in enumerate(mods)
            ]
        return _CELL_CACHE[key]

    return get


@pytest.fixture(scope="session")
def valid_delta_sets():
    """Brute-force enumerator of all valid Δ-sets of a semigroup.

    A valid Δ-set is a δ-element subset of [0, 2δ) whose union with
    [2δ, ∞) is closed under adding semigroup elements.
    """

    def compute(sg):
        dd = 2 * sg.delta
        out = set()
        for combo in combinations(range(dd), sg.delta):
            members = set(combo)
            if all(e + g in members or e + g >= dd for e in combo for g in sg.gens):
                out.add(combo)
        return out

    return compute
