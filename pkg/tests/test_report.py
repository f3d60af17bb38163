"""Stratification reports, canonical labels, oracle helpers, and the CLI."""

import json
from fractions import Fraction

import pytest

from hilbstrat import (
    GammaModule,
    NumericalSemigroup,
    analyze,
    canonical_delta_labels,
    canonical_family,
    enumerate_colength,
    oracle_check,
    stratify,
)
from hilbstrat.report_cli import (
    enumerate_colength_reference,
    main,
    specialization_diff,
    specialized_orders,
)

E6 = NumericalSemigroup((3, 4))
E8 = NumericalSemigroup((3, 5))


def test_canonical_labels_first_appearance():
    assert canonical_delta_labels(E6) == [
        (2, 3, 5),
        (2, 4, 5),
        (1, 4, 5),
        (3, 4, 5),
        (0, 3, 4),
    ]
    labels8 = canonical_delta_labels(E8)
    assert len(labels8) == 7
    assert labels8[0] == (2, 4, 5, 7)
    assert labels8[5] == (0, 3, 5, 6)


def test_report_schema():
    rep = analyze(E6, r_max=2)
    d = rep.to_dict()
    assert d["schema_version"] == 1
    assert set(d) == {"schema_version", "semigroup", "strata"}
    assert d["semigroup"] == {
        "gens": [3, 4],
        "gaps": [1, 2, 5],
        "delta": 3,
        "conductor": 6,
    }
    sec = d["strata"][1]
    assert set(sec) == {
        "r",
        "cells",
        "dim",
        "components",
        "irreducible",
        "pd_pattern",
        "singular_candidates",
        "unknowns",
    }
    cell = sec["cells"][0]
    assert set(cell) == {
        "label",
        "gaps",
        "min_gens",
        "delta_set",
        "schubert",
        "dim",
        "generators",
        "eliminated",
    }


def test_analyze_is_deterministic():
    a = analyze(E6).to_json()
    b = analyze(E6).to_json()
    assert a == b


def test_e6_r2_section():
    sec = stratify(E6, 2)
    assert sec.dim == 1
    assert sec.unknowns == 0
    d = sec.to_dict()
    assert d["irreducible"] is True
    assert d["pd_pattern"] is True
    assert [c["label"] for c in d["cells"]] == ["Δ_2", "Δ_3"]


def test_e6_r4_two_components_each_projective_like():
    sec = stratify(E6, 4)
    d = sec.to_dict()
    assert d["irreducible"] is False
    assert len(d["components"]) == 2
    for comp in d["components"]:
        assert comp["pd_pattern"] is True
        dims = sorted(sec.cells[i].dim for i in comp["members"])
        assert dims == [0, 1, 2]
    assert d["singular_candidates"] == [0, 1]


def test_e6_r5_shared_boundary_labels():
    sec = stratify(E6, 5)
    d = sec.to_dict()
    assert len(d["components"]) == 2
    assert d["singular_candidates"] == [0, 1]
    shared = {d["cells"][i]["label"] for i in d["singular_candidates"]}
    assert shared == {"Δ_2", "Δ_4"}
    tops = {d["cells"][c["top"]]["label"] for c in d["components"]}
    assert tops == {"Δ_1", "Δ_3"}


def test_smooth_point_report():
    rep = analyze(NumericalSemigroup((1,)))
    assert rep.dimension_row() == (0,)
    assert rep.cell_count_row() == (1,)
    sec = rep.sections[0]
    assert sec.r == 1
    assert sec.cells[0].dim == 0


def test_render_table_mentions_cells_and_verdict():
    rep = analyze(E6, r_max=3)
    table = rep.render_table()
    assert "Δ_1" in table
    assert "W(3,2,2)" in table
    assert "irreducible" in table


def test_stratify_rejects_bad_r():
    with pytest.raises(ValueError):
        stratify(E6, 0)


def test_reference_enumeration_agrees():
    for r in range(1, 5):
        fast = [m.gap_set for m in enumerate_colength(E6, r)]
        assert fast == enumerate_colength_reference(E6, r)


def test_specialized_orders_fixture():
    f = canonical_family(E6, GammaModule(E6, (0, 4, 8)))
    inv = {v: k for k, v in f.display_names.items()}
    orders = specialized_orders(f, {inv["a"]: Fraction(2), inv["b"]: Fraction(3)})
    assert tuple(orders) == (3, 6, 7, 9)


def test_specialized_orders_rejects_symbolic_assignment():
    f = canonical_family(E6, GammaModule(E6, (0, 4)))
    inv = {v: k for k, v in f.display_names.items()}
    from hilbstrat import ParamPoly

    with pytest.raises(ValueError):
        specialized_orders(f, {inv["a"]: ParamPoly.variable("z")})


def test_specialization_diff_clean():
    assert specialization_diff(E6, 3, samples=2, seed=0) == []


def test_oracle_check_small():
    out = oracle_check(NumericalSemigroup((2, 3)), samples=2, seed=1)
    assert out["ok"] is True
    assert out["semigroup"] == [2, 3]
    assert set(out["strata"]) == {1, 2}


def test_cli_json_roundtrip(capsys):
    rc = main(["--gens", "3,4", "--max-r", "2", "--format", "json"])
    out = capsys.readouterr().out
    assert rc == 0
    data = json.loads(out)
    assert data["schema_version"] == 1
    assert len(data["strata"]) == 2


def test_cli_single_stratum(capsys):
    rc = main(["--gens", "3,4", "--r", "5", "--format", "json"])
    data = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert [s["r"] for s in data["strata"]] == [5]


def test_cli_table_default(capsys):
    rc = main(["--gens", "3,4", "--max-r", "2"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "Δ_1" in out


def test_cli_rejects_non_coprime(capsys):
    rc = main(["--gens", "4,6"])
    assert rc == 2
    assert capsys.readouterr().out == ""


def test_cli_rejects_malformed_gens(capsys):
    assert main(["--gens", "abc"]) == 2
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "invalid" in captured.err


def test_cli_zero_window_reports_unknowns(capsys):
    rc = main(["--gens", "3,4", "--r", "2", "--degen-window", "0", "--format", "json"])
    out = capsys.readouterr().out
    assert rc == 3
    data = json.loads(out)
    assert data["strata"][0]["unknowns"] > 0


def test_cli_oracle_mode(capsys):
    rc = main(["--gens", "2,3", "--oracle-check"])
    out = capsys.readouterr().out
    assert rc == 0
    assert json.loads(out)["ok"] is True
