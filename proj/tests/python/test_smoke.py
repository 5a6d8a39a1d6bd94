"""Smoke tests for the python extension module."""

import pytest

import mvspcurves as mc


def test_construct_record():
    rec = mc.construct(2, 3, [0, 2])
    assert rec["f"] == "x^6+x^5+x^3"
    assert rec["u"] == "x^5+x^3"
    assert rec["v"] == "x^3"
    assert rec["deg_f"] == 6
    assert rec["eta"] == 1
    assert rec["N_formula"] == 33
    assert rec["genus_formula"] == 6


def test_construct_default_profile():
    rec = mc.construct(2, 5)
    assert rec["r_list"] == [0, 3]
    assert rec["deg_f"] == 20


def test_certify_pass():
    rep = mc.certify(2, 3)
    assert rep["verdict"] == "pass"
    assert rep["curve"]["N_bruteforce"] == 33
    assert rep["genus_agreement"]["gap_count"] == 6
    assert rep["castle"] is True
    assert all(v == "pass" for k, v in rep["checks"].items() if not k.endswith("_reason"))


def test_certify_skips_on_small_bound():
    rep = mc.certify(2, 5, max_enum=16)
    assert rep["verdict"] == "incomplete"
    assert rep["checks"]["point_count"] == "skipped"


def test_invalid_profile_raises():
    with pytest.raises(ValueError):
        mc.certify(2, 3, [2, 0])
    with pytest.raises(ValueError):
        mc.construct(12, 3)


def test_semigroup_record():
    gens = mc.weierstrass_generators(2, 5, 3)
    assert gens == [16, 20, 36, 34, 41]
    rec = mc.semigroup(gens)
    assert rec["genus"] == 60
    assert rec["symmetric"] is True
    assert rec["telescopic"] is True
    assert rec["redundant_gens"] == [36]
    assert mc.telescopic_genus(gens) == 60
    assert mc.telescopic_genus([2, 3]) == 1


def test_pole_orders():
    entries = mc.pole_orders(3, 3, 2)
    orders = {e["function"]: e["pole_order"] for e in entries}
    assert orders["x"] == 9
    assert orders["y"] == 12
    assert orders["s"] == 28
    assert orders["w2"] == 64
    assert all(e["ok"] for e in entries)


def test_identities_and_rule():
    assert mc.h_family_r(7) == 4
    assert mc.snm_identity(2, 4, 3)


def test_sweep_csv():
    csv = mc.sweep_csv([2], 3, 5)
    lines = csv.strip().split("\n")
    assert lines[0].startswith("q,n,r_list")
    assert len(lines) == 4
    assert "2,5,[0;3],20,9,513,513,60,60,1,1,1,1,8.55" in lines
