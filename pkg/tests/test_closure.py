"""Closure verdicts, degeneration certificates, component assembly."""

import pytest

from hilbstrat import (
    NumericalSemigroup,
    ParamPoly,
    cell_closure_contains,
    closure_leq,
    components,
    degeneration_limit,
    replay_certificate,
)
from hilbstrat.closure_analysis import CONTAINED, NOT_CONTAINED, UNKNOWN, ClosureVerdict

E6 = (3, 4)
E8 = (3, 5)


def test_reflexivity(cells_of):
    for c in cells_of(E6, 3):
        v = cell_closure_contains(c, c)
        assert v.status == CONTAINED


def test_e6_r2_degeneration(cells_of):
    """The 1-dimensional cell degenerates onto the monomial cell via a -> u/s."""
    src, dst = cells_of(E6, 2)[1], cells_of(E6, 2)[0]
    v = cell_closure_contains(src, dst)
    assert v.status == CONTAINED
    cert = v.certificate
    assert cert["system"] == 0
    assert cert["exponents"] == [-1]
    assert cert["substitution"] == {"a": "u00*s^-1"}
    assert replay_certificate(src, dst, cert)


def test_e6_r2_limit_lands_on_target(cells_of):
    src, dst = cells_of(E6, 2)[1], cells_of(E6, 2)[0]
    lim = degeneration_limit(src, 0, (-1,))
    assert lim[dst.pivot_minor_index] == ParamPoly.variable("u00")
    for k, p in enumerate(lim):
        if k != dst.pivot_minor_index:
            assert p.is_zero()


def test_e6_r3_dimension_reject(cells_of):
    cells = cells_of(E6, 3)
    src, dst = cells[1], cells[2]
    assert src.dim == 1 and dst.dim == 2
    v = cell_closure_contains(src, dst)
    assert v.status == NOT_CONTAINED
    assert v.reason == "dimension"
    # the other direction is a genuine containment
    back = cell_closure_contains(dst, src)
    assert back.status == CONTAINED


def test_e6_r6_needs_adapted_coordinates(cells_of):
    """The top cell reaches the <4>-cell only after replacing b by b - a^2."""
    cells = cells_of(E6, 6)
    v = cell_closure_contains(cells[4], cells[2])
    assert v.status == CONTAINED
    cert = v.certificate
    assert cert["system"] == 1
    assert cert["replacements"] == [
        {"parameter": "b", "coordinate": "w01", "expression": "-b + a^2"}
    ]
    assert cert["exponents"] == [-1, -1, -3]
    assert replay_certificate(cells[4], cells[2], cert)


def test_e6_r6_adapted_limit_respects_target_zeros(cells_of):
    cells = cells_of(E6, 6)
    src, dst = cells[4], cells[2]
    lim = degeneration_limit(src, 1, (-1, -1, -3))
    assert not lim[dst.pivot_minor_index].is_zero()
    for k in dst.forced_zero:
        assert lim[k].is_zero()


def test_e8_r5_wide_window_containment(cells_of):
    """One containment needs a minor-derived coordinate and exponent -5."""
    cells = cells_of(E8, 5)
    src, dst = cells[4], cells[2]
    narrow = cell_closure_contains(src, dst, window=4)
    assert narrow.status == UNKNOWN
    v = cell_closure_contains(src, dst)
    assert v.status == CONTAINED
    cert = v.certificate
    assert cert["exponents"] == [-1, -3, -5]
    assert cert["replacements"][0]["expression"] == "a*c - b^2"
    assert replay_certificate(src, dst, cert)


def test_e8_r5_pivot_coordinate_reject(cells_of):
    cells = cells_of(E8, 5)
    src, dst = cells[3], cells[1]
    assert src.module.gap_set == (0, 3, 5, 8, 10)
    assert dst.module.gap_set == (0, 3, 5, 6, 9)
    v = cell_closure_contains(src, dst)
    assert v.status == NOT_CONTAINED
    assert v.reason == "pivot_coordinate"
    # the rejection is forced: the source point never charges the target pivot
    assert src.plucker[dst.pivot_minor_index].is_zero()


def test_e8_r8_top_cell_containments(cells_of):
    cells = cells_of(E8, 8)
    for j in (4, 5):
        v = cell_closure_contains(cells[6], cells[j])
        assert v.status == CONTAINED
        assert v.certificate["exponents"] == [-1, -1, -2, -4]
        assert replay_certificate(cells[6], cells[j], v.certificate)


def test_schubert_reject():
    sg = NumericalSemigroup((4, 5))
    from hilbstrat import build_cell, enumerate_colength

    mods = enumerate_colength(sg, 6)
    src = build_cell(sg, mods[7], 6, index=7)
    dst = build_cell(sg, mods[5], 6, index=5)
    assert dst.dim < src.dim
    v = cell_closure_contains(src, dst)
    assert v.status == NOT_CONTAINED
    assert v.reason == "schubert"


def test_zero_window_is_honest(cells_of):
    src, dst = cells_of(E6, 2)[1], cells_of(E6, 2)[0]
    v = cell_closure_contains(src, dst, window=0)
    assert v.status == UNKNOWN
    assert v.certificate is None


def test_containment_respects_schubert_order(cells_of):
    for r in range(1, 7):
        cells = cells_of(E6, r)
        for a in cells:
            for b in cells:
                if a is b:
                    continue
                v = cell_closure_contains(a, b)
                if v.status == CONTAINED:
                    assert closure_leq(a.schubert, b.schubert)
                    assert b.dim < a.dim


def test_no_mutual_containment(cells_of):
    for r in range(1, 7):
        cells = cells_of(E6, r)
        for i, a in enumerate(cells):
            for j, b in enumerate(cells):
                if i >= j:
                    continue
                fwd = cell_closure_contains(a, b).status == CONTAINED
                bwd = cell_closure_contains(b, a).status == CONTAINED
                assert not (fwd and bwd)


def _verdicts(cells):
    out = {}
    for i, a in enumerate(cells):
        for j, b in enumerate(cells):
            if i != j:
                out[(i, j)] = cell_closure_contains(a, b)
    return out


def test_components_e6_r5(cells_of):
    cells = cells_of(E6, 5)
    ana = components(cells, _verdicts(cells))
    assert len(ana.components) == 2
    assert sorted(c["top"] for c in ana.components) == [2, 3]
    assert ana.singular_candidates == [0, 1]
    assert not ana.incomplete
    for comp in ana.components:
        assert set(ana.singular_candidates) <= set(comp["members"])


def test_components_e6_r6(cells_of):
    cells = cells_of(E6, 6)
    ana = components(cells, _verdicts(cells))
    assert len(ana.components) == 1
    assert ana.components[0]["top"] == 4
    assert ana.components[0]["members"] == [0, 1, 2, 3, 4]
    assert ana.singular_candidates == []


def test_components_e8_r4(cells_of):
    cells = cells_of(E8, 4)
    ana = components(cells, _verdicts(cells))
    assert len(ana.components) == 2
    assert ana.singular_candidates == [0, 1]


def test_components_flag_unresolved_pairs(cells_of):
    cells = cells_of(E6, 2)
    verdicts = {
        (0, 1): ClosureVerdict(NOT_CONTAINED, "dimension"),
        (1, 0): ClosureVerdict(UNKNOWN),
    }
    ana = components(cells, verdicts)
    assert ana.incomplete
    assert ana.residual_unknowns == [(1, 0)]
