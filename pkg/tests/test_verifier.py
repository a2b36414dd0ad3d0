import pytest

from rhotensor.errors import PreconditionViolated, ResourceLimit
from rhotensor.rootsystem import build_root_datum, parse_spec
from rhotensor.verifier import (
    SATURATION_TABLE,
    conjecture4_probe,
    exterior_dim_check,
    kostant_check,
    saturation_factor,
)


def test_saturation_table():
    expected = {"A3": 1, "B3": 2, "C4": 2, "D5": 4, "G2": 2, "F4": 144,
                "E6": 36, "E7": 144, "E8": 3600}
    for t, k in expected.items():
        assert saturation_factor(parse_spec(t)) == k
    assert len(SATURATION_TABLE) == 9


@pytest.mark.parametrize("t", ["A1", "A2", "B2", "G2", "D4", "E8"])
def test_exterior_dims(t):
    rep = exterior_dim_check(build_root_datum(t))
    assert rep.passed and len(rep.cases) == 1
    assert rep.to_dict()["totals"] == {"cases": 1, "failures": 0}


def test_kostant_examples():
    a1 = build_root_datum("A1")
    rep = kostant_check(a1)
    assert rep.passed
    assert rep.extra["weights_below_2rho"] == 2
    assert rep.extra["multiplicities"] == [{"weight": [0], "mult": 1}, {"weight": [2], "mult": 1}]
    a2 = build_root_datum("A2")
    rep = kostant_check(a2)
    assert rep.passed and rep.extra["components"] == 5
    assert {tuple(e["weight"]): e["mult"] for e in rep.extra["multiplicities"]}[(1, 1)] == 2
    assert kostant_check(build_root_datum("B2"), 2).passed


def test_kostant_refuses_e_types_and_bad_factor():
    with pytest.raises(ResourceLimit):
        kostant_check(build_root_datum("E6"))
    with pytest.raises(ValueError):
        kostant_check(build_root_datum("A1"), 0)


def test_probe_examples():
    a2 = build_root_datum("A2")
    rep = conjecture4_probe(a2, 2)
    assert rep.passed and rep.extra["candidates"] == []
    assert rep.extra["triples_scanned"] > 0
    assert conjecture4_probe(a2, 0).extra == {"triples_scanned": 1, "candidates": []}
    rep = conjecture4_probe(build_root_datum("D4"), 1)
    assert rep.passed and isinstance(rep.extra["candidates"], list)
    with pytest.raises(PreconditionViolated):
        conjecture4_probe(build_root_datum("B2"), 1)
    with pytest.raises(ResourceLimit):
        conjecture4_probe(build_root_datum("E6"), 1)


def test_reports_are_deterministic():
    d = build_root_datum("G2")
    a, b = kostant_check(d).to_dict(), kostant_check(d).to_dict()
    a.pop("wall_time"), b.pop("wall_time")
    assert a == b
