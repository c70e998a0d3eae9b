import pathlib

import pytest

import tsibc

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


@pytest.fixture
def thermo():
    return tsibc.parse_graph((DATA / "thermoregulation.txt").read_text())


def test_graph_round_trip(thermo):
    assert len(thermo) == 5
    for fmt in ("json", "edgelist", "dot"):
        assert tsibc.parse_graph(thermo.serialize(fmt), fmt) == thermo
    assert ("L", "O") in thermo.edges


def test_fork_witness(thermo):
    v = tsibc.decide(thermo, ["K@-1", "L@-1"], "O@0", consistency=True)
    assert v["identifiable"] is False
    assert v["witness"]["kind"] == "fork"
    assert v["witness"]["fork"] == {"series": "B", "time": -1}


def test_identifiable_with_formula(thermo):
    v = tsibc.decide(thermo, ["K@-1", "L@-1", "L@0"], ["O@0"], consistency=True)
    assert v["identifiable"] is True
    assert v["formula"].startswith("Σ_z P(o_0 | k_-1, l_-1, l_0, z)")


def test_thresholds(thermo):
    t = tsibc.thresholds(thermo, ["K@-1", "L@-1"], ["O@0"])
    assert t == {"B": -1, "K": 0, "L": 0, "O": -1, "Outside": "inf"}


def test_oracle_agrees(thermo):
    for consistency in (False, True):
        r = tsibc.oracle_check(thermo, ["K@-1", "L@-1"], ["O@0"], consistency=consistency)
        assert r["result"] == "AGREE"


def test_errors(thermo):
    with pytest.raises(tsibc.ParseError):
        tsibc.parse_graph("A ->\n")
    with pytest.raises(tsibc.Error):
        tsibc.decide(thermo, ["Q@0"], ["O@0"])
    with pytest.raises(tsibc.BudgetExceeded):
        tsibc.oracle_check(thermo, ["K@-1", "L@-1"], ["O@0"], budget=1)


def test_random_is_deterministic():
    g1, q1 = tsibc.random_instance(7)
    g2, q2 = tsibc.random_instance(7)
    assert g1 == g2 and q1 == q2
    assert tsibc.decide(g1, q1["interventions"], q1["effects"]) == tsibc.decide(g2, q2["interventions"], q2["effects"])
