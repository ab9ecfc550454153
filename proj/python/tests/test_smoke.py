import json

import pytest

import cedga


def test_catalog_lists_entries():
    names = cedga.example_names()
    assert "unknot_one_handle" in names
    assert "singular_torus" in names


def test_point_algebra_d_squared_and_h0():
    P = cedga.example("I3").presentation()
    assert cedga.check_d_squared(P) == []
    assert cedga.check_degree(P) == []
    assert cedga.check_parity_flip(P) is None
    assert P.d("c0_12") == "0"
    assert P.d("c0_13") == "c0_23*c0_12"


def test_theta_fails_over_rationals():
    P = cedga.example("theta", ring="Q").presentation()
    bad = cedga.check_d_squared(P)
    assert bad and bad[0][0] == "a"


def test_unknot_h0_is_ground_ring():
    rep = cedga.h0(cedga.example("unknot_one_handle").presentation())
    assert rep["is_ground_ring"] and rep["dimension"] == 1 and rep["complete"]


def test_exactness_witness_satisfies_equation():
    P = cedga.example("unknot_one_handle").presentation()
    r = cedga.exactness_search(P, "e1 - t0_12")
    assert r["verdict"] == "witness"
    assert P.d(r["witness"]) == P.d("a")


def test_round_trip_through_text():
    B = cedga.example("singular_torus")
    text = B.to_text()
    assert cedga.parse(text).to_text() == text
    assert B.verify_augmentation("eps")["ok"]


def test_obstruction_on_unknot_edge():
    rep = cedga.example("unknot_edge").obstruct("link")
    assert rep["verdict"] == "obstructed"
    assert rep["certificate"]["verdict"] == "none_within_bounds"


def test_parse_error_carries_position():
    with pytest.raises(cedga.ParseError, match="line 2"):
        cedga.parse("idempotents e1\ngen a deg\n")


def test_cli_json():
    text = cedga.example("I2").to_text()
    code, out, err = cedga.run_cli(["check-d2", "-", "--json"], text)
    assert code == 0, err
    assert json.loads(out)["verdict"] == "pass"
