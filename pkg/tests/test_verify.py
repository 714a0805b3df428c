import json

import pytest

from leastgap import verify as vf

EXPECTED_IDS = [
    "ER", "BIS1", "EQ1", "T0", "T1i", "T1ii", "PARITY", "COR1", "C1", "C6", "T2",
    "EQ11", "EQ12", "SQ-EVEN", "SQ-ODD", "RANK-I", "RANK-II", "R10", "CRANK",
    "CRANK-PAR", "CRANK-U1i", "CRANK-U1ii",
]
PARAMETERIZED = {"T0", "T1i", "T1ii", "PARITY", "COR1", "T2"}


def test_registry_ids_and_order():
    assert [d.id for d in vf.registry()] == EXPECTED_IDS
    assert {d.id for d in vf.registry() if d.parameterized} == PARAMETERIZED
    assert all(d.statement for d in vf.registry())


@pytest.mark.parametrize("identity", EXPECTED_IDS)
def test_every_identity_passes_small(identity):
    rep = vf.verify(identity, 60, (1, 2, 3) if identity in PARAMETERIZED else None)
    assert rep.passed, rep.summary()
    assert rep.first_mismatch is None


def test_self_test_fails_with_mismatch():
    rep = vf.verify(vf.SELF_TEST_ID, 20)
    assert rep.status == "fail"
    assert rep.first_mismatch == {"n": 7, "r": 1, "lhs": "32", "rhs": "33"}
    assert vf.SELF_TEST_ID not in [d.id for d in vf.registry()]


def test_unknown_id():
    with pytest.raises(KeyError):
        vf.verify("NOPE", 5)


def test_r_set_on_unparameterized_rejected():
    with pytest.raises(ValueError):
        vf.verify("ER", 5, (1,))


def test_half_integers_reported_exactly(monkeypatch):
    # a deliberately odd right-hand side yields a fractional half
    desc = vf.lookup("T1i")
    broken = vf.IdentityDescriptor("tmp", "", desc.lhs, lambda N, r: vf._halves([1] * (N + 1), signs=(1,)), True)
    monkeypatch.setitem(vf._BY_ID, "tmp", broken)
    rep = vf.verify("tmp", 3, (1,))
    assert rep.first_mismatch["rhs"] == "1/2"


def test_report_serialization():
    rep = vf.verify("T0", 10, (1, 2))
    d = json.loads(rep.to_json())
    assert d["status"] == "pass"
    assert d["r_range"] == [1, 2]
    assert d["n_range"] == [0, 10]
    assert rep.summary().startswith("PASS T0")
    bad = vf.verify(vf.SELF_TEST_ID, 10, (2,))
    assert "first mismatch at n=7, r=2" in bad.summary()


def test_deterministic_iteration_order():
    # n ascending before r: the corruption sits at n=7 for every r
    rep = vf.verify(vf.SELF_TEST_ID, 50, (6, 3, 5))
    assert (rep.first_mismatch["n"], rep.first_mismatch["r"]) == (7, 3)
