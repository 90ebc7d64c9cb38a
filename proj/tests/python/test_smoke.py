"""Smoke tests for the python module: exact values over the bound surface."""

import json
import os
from fractions import Fraction

import pytest

import gccp

FIXTURES = os.environ.get("GCCP_FIXTURES_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "fixtures"))


def load(name):
    return gccp.Instance.from_file(os.path.join(FIXTURES, name))


def test_toy_tau_and_report():
    inst = load("toy.json")
    assert inst.width == 8
    assert inst.goal_count == 4
    assert gccp.tau_vector(inst) == [0, 0, 7, 37, 63, 55, 28, 8, 1]
    assert gccp.brute_tau(inst) == gccp.tau_vector(inst)

    report = gccp.solve(inst)
    assert report["expected_no_replacement"] == Fraction(449, 140)
    assert report["expected_with_replacement"] == Fraction(59, 15)
    assert report["variance_with_replacement"] == Fraction(836, 225)
    assert report["variance_no_replacement"] == Fraction(18339, 19600)
    assert report["q"][2] == Fraction(1, 4)


def test_roundtrip_and_validation():
    inst = load("toy.json")
    again = gccp.Instance.from_json(inst.to_json())
    assert again == inst
    assert json.loads(inst.to_json())["coupons"][0] == "c1"

    with pytest.raises(ValueError):
        gccp.Instance.from_json('{"coupons":["a"],"goals":{"G":[]}}')


def test_roulette_exact_fractions():
    report = gccp.solve(gccp.roulette())
    assert report["expected_with_replacement"] == Fraction(54728027202913, 7600186994400)
    assert report["expected_no_replacement"] == Fraction(65774035502891, 10043104242600)


def test_partition_and_baselines():
    inst = gccp.partition_instance(["1/6"] * 6)
    assert inst.width == 6
    report = gccp.solve(inst)
    assert report["expected_with_replacement"] == Fraction(147, 10)
    assert gccp.homogeneous_length(6) == Fraction(147, 10)
    assert gccp.incl_excl_length([Fraction(1, 6)] * 6) == Fraction(147, 10)
    assert abs(gccp.triangular_asymptotic(15) - 150.624) < 1e-3


def test_transversouls():
    inst = load("transversoul.json")
    assert inst.alpha == [2, 1, 3]
    counts = gccp.count_transversouls(inst)
    assert counts == [0, 0, 0, 1, 41, 274, 616, 699, 481, 219, 66, 12, 1]
    assert gccp.count_transversouls(inst, strategy="reduce") == counts
    q = gccp.alpha_success_probabilities(inst)
    assert q[6] == Fraction(2, 3)
    assert gccp.to_fixed(q[6], 3) == "0.667"

    ok, diff = gccp.verify_reference_fixture()
    assert ok, diff


def test_simulation_reproducible():
    inst = load("toy.json")
    a = gccp.simulate(inst, with_replacement=True, trials=20000, seed=7)
    b = gccp.simulate(inst, with_replacement=True, trials=20000, seed=7)
    assert a == b
    assert a["cap_hits"] == 0
    assert abs(a["mean"] - 59 / 15) < 4 * a["standard_error"]


def test_laplace_and_rendering():
    assert sum(gccp.laplace_exact_count(6, 5, k) for k in range(7)) == 1
    assert gccp.to_decimal(Fraction(449, 140), 6) == "3.20714"
    assert gccp.to_fixed(Fraction(449, 140), 6) == "3.207143"


def test_series_bracket_encloses_the_closed_form():
    inst = load("toy.json")
    lower, upper = gccp.series_bracket(inst, 200)
    assert lower <= Fraction(59, 15) <= upper
    assert upper - lower < Fraction(1, 10**6)


def test_chess_builders():
    rooks = gccp.chess("rook", "closed")
    assert rooks.width == 64
    assert len(rooks.goal_members("a1")) == 15
    kings = gccp.chess("king", "closed")
    assert len(kings.goal_members("a1")) == 4
    assert kings.reduced().goal_count == 36


def test_benchmark_csv():
    csv = gccp.benchmark_csv([5], cap=5)
    lines = csv.strip().splitlines()
    assert lines[0] == "h,w,exact,decimal,method,seconds"
    assert len(lines) == 3
    assert "row-polynomial" in lines[1]
