from fractions import Fraction
from pathlib import Path

import pytest

import sparsetrace

DATA = Path(__file__).resolve().parents[2] / "examples_data"
T = ["t1", "t2", "t3"]
EXAMPLE_ONE = ["-1 + t1^2 + t2^2", "-1 + t2^2 + t3^2", "-1 + t1^2 + t2^2 + t3^2"]
PENTAGON = ["t1 + 2*t1*t2 + 3*t2^2", "5*t2 + 7*t1*t2 + 11*t1^2"]


def test_example_one_trace():
    r = sparsetrace.trace("t2^2", "1", EXAMPLE_ONE, T)
    assert r["value"] == 8
    assert isinstance(r["value"], Fraction)
    assert r["e"] == 1 and r["index"] == 8
    assert sparsetrace.trace_oracle("t2^2", "1", EXAMPLE_ONE, T)["value"] == 8


def test_formula_matches_oracle():
    v = ["t1", "t2"]
    a = sparsetrace.trace("t1^2", "1 + t1 - 2*t2", PENTAGON, v, seed=4)["value"]
    b = sparsetrace.trace_oracle("t1^2", "1 + t1 - 2*t2", PENTAGON, v)["value"]
    assert a == b


def test_chow_trace():
    roots = [((1, 2), 1), ((Fraction(-1, 2), 3), 2)]
    r = sparsetrace.chow_trace(roots, 2, "x*y", "x + y", ["x", "y"])
    expected = Fraction(2, 3) + 2 * Fraction(-3, 2) / Fraction(5, 2)
    assert r["value"] == expected


def test_mixed_volume_and_resultant():
    square = [(0, 0), (1, 0), (0, 1), (1, 1)]
    assert sparsetrace.mixed_volume([square, square]) == 2
    r = sparsetrace.sparse_resultant(["1 + 2*x + 3*y", "4 + 5*x + 6*y", "7 + 8*x + 10*y"], ["x", "y"])
    assert abs(r) == 3


def test_residues_and_discriminant():
    assert sparsetrace.global_residue("x", ["x^2 - 1"], ["x"]) == 1
    assert sparsetrace.global_residue("1", ["x^2 - 1"], ["x"]) == 0
    assert abs(sparsetrace.discriminant(["x^2 - 1"], ["x"])) == 4
    assert sparsetrace.torus_residue("1", ["x - 2"], ["x"]) == Fraction(1, 2)


def test_degenerate_raises():
    with pytest.raises(sparsetrace.DegenerateError):
        sparsetrace.trace("1", "x - 1", ["x^2 - 1"], ["x"])
    with pytest.raises(sparsetrace.Error):
        sparsetrace.trace("1", "1", ["x^2 +"], ["x"])


def test_run_matches_cli_document():
    doc, code = sparsetrace.run("trace", DATA / "three_quadrics.txt")
    assert code == 0
    assert doc["value"] == "8/1" and doc["oracle_agrees"] is True
    doc, code = sparsetrace.run("mixed-volume", DATA / "unit_squares.txt")
    assert doc["value"] == "2"
