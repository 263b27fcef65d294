import os
import pathlib

import pytest

import qsr

DATA = pathlib.Path(os.environ.get("QSR_DATA_DIR", pathlib.Path(__file__).resolve().parents[2] / "data"))


def test_builtins_classify():
    for name in ("pc1", "rcc5", "cycb"):
        report = qsr.analyze(qsr.Calculus.builtin(name))
        assert report["classification"] == "RA"
        assert all(a["holds"] for a in report["axioms"])


def test_fixture_violations():
    report = qsr.analyze(qsr.Calculus.builtin("appendixB2"))
    sides = {s["id"] for a in report["axioms"] for s in a["sides"] if not s["holds"]}
    assert {"R4sub", "R4sup", "PLright", "PLleft"} <= sides
    assert report["classification"] != "RA"


def test_calculus_operations():
    pc1 = qsr.Calculus.builtin("pc1")
    assert pc1.symbols == ["<", "=", ">"]
    assert pc1.compose(["<"], ["<"]) == ["<"]
    assert pc1.converse(["<", "="]) == ["=", ">"]


def test_closure_and_unsolvable_chain():
    pc1 = qsr.Calculus.builtin("pc1")
    net = qsr.Network.load(str(DATA / "incomplete.net"), pc1)
    out = qsr.a_closure(net)
    assert out.closed
    assert out.network.at(0, 2) == ["<"]

    chain = qsr.Network.load(str(DATA / "chain4.net"), pc1)
    closed = qsr.a_closure(chain, order="lifo")
    assert closed.closed
    assert qsr.solve(closed.network, qsr.Model.chain(pc1, 3)) is None
    assert qsr.solve(closed.network, qsr.Model.chain(pc1, 4)) == [0, 1, 2, 3]


def test_decide_with_model():
    cycb = qsr.Calculus.builtin("cycb")
    net = qsr.Network.load(str(DATA / "cycb-left-right.net"), cycb)
    verdict, witness, _ = qsr.decide(net)
    assert verdict == "closed_unknown" and witness is None
    verdict, witness, _ = qsr.decide(net, qsr.Model.load(str(DATA / "orient4.model"), cycb))
    assert verdict == "consistent"
    assert witness.is_atomic()


def test_model_strength():
    pc1 = qsr.Calculus.builtin("pc1")
    chain = qsr.Model.chain(pc1, 3)
    assert chain.is_jepd()
    assert chain.operation_summary("converse") == "converse: strong"
    assert chain.operation_summary("composition") == "composition: weak, not strong"


def test_random_networks_are_sound():
    pc1 = qsr.Calculus.builtin("pc1")
    model = qsr.Model.chain(pc1, 4)
    for seed in range(30):
        net = qsr.Network.random(pc1, vars=5, density=0.6, seed=seed)
        valuation = qsr.solve(net, model)
        if valuation is not None:
            assert model.satisfies(qsr.a_closure(net).network, valuation)


def test_errors():
    with pytest.raises(KeyError):
        qsr.Calculus.builtin("nope")
    with pytest.raises(ValueError):
        qsr.Network.parse("calculus pc1\nvars A\nA ( ?) B\n", qsr.Calculus.builtin("pc1"))
    with pytest.raises(qsr.BudgetExceeded):
        pc1 = qsr.Calculus.builtin("pc1")
        qsr.solve(qsr.Network.random(pc1, vars=30, density=0.1), qsr.Model.chain(pc1, 3), budget=1e3)
