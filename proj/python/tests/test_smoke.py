import json

import pytest

import qnkit


def test_qq4():
    a = qnkit.Algebra(2)
    assert a.equal("E[1]*F[1] - F[1]*E[1]", "(K[1]*K[2]^-1 - K[1]^-1*K[2])/(v - v^-1)")
    assert not a.equal("E[1]*F[1]", "F[1]*E[1]")


def test_braid_example():
    a = qnkit.Algebra(3)
    assert a.equal("T(1,E[2])", "-E[1]*E[2] + v^-1*E[2]*E[1]")
    assert a.normalize("Tinv(1,T(1,Fb[1]))") == "Eb[2,1]"


def test_json_round_trip():
    a = qnkit.Algebra(3)
    j = a.to_json("Kb[1]*Kb[1] + E[1,3]^(2)")
    assert json.loads(j)["n"] == 3
    assert a.equal(a.from_json(j), "Kb[1]*Kb[1] + E[1,3]^(2)")
    assert a.to_json("Kb[1]*Kb[1] + E[1,3]^(2)") == j


def test_integral_and_unity():
    a = qnkit.Algebra(2)
    assert a.is_integral("E[1]^(2)*F[1]^(2)")
    assert not a.is_integral("E[1]/(v + v^-1)")
    assert a.specialize("E[1]^3", 3) == "0"
    with pytest.raises(ArithmeticError):
        a.specialize("E[1]/qint(3)", 3)


def test_errors():
    a = qnkit.Algebra(3)
    with pytest.raises(IndexError):
        a.normalize("E[3,3]")
    with pytest.raises(ValueError):
        a.normalize("E[1] +")


def test_scalars_and_suite():
    assert qnkit.quantum_int(2) == "v + v^-1"
    assert qnkit.gauss_binom(4, 2) == "v^4 + v^2 + 2 + v^-2 + v^-4"
    r = qnkit.Algebra(2).suite("qq")
    assert r["ok"] and r["checked"] > 0
