import math

import pytest

import hypergon


def test_mg_genus_two():
    assert hypergon.mg(2) == pytest.approx(19.9546, abs=1e-4)
    assert hypergon.perim_regular(12, 4 * math.pi) == pytest.approx(hypergon.mg(2), rel=1e-12)
    assert hypergon.systole_lower_bound(2) == pytest.approx(hypergon.mg(2) / 2)


def test_interior_angle_right_angled():
    assert hypergon.interior_angle(12, 4 * math.pi) == pytest.approx(math.pi / 2, abs=1e-12)


def test_phi_tilde_root():
    root = hypergon.phi_tilde_root()
    assert 9.33 <= root <= 9.35
    assert hypergon.phi_tilde(9.0) < 0 < hypergon.phi_tilde(10.0)


def test_verify_report_dict():
    report = hypergon.verify("L6_3")
    assert report["lemma_id"] == "L6_3"
    assert report["passed"]
    assert 9.33 <= report["witness"]["x0"] <= 9.35


def test_verify_overrides_and_pieces():
    assert hypergon.verify("P4_1", n=10)["passed"]
    assert not hypergon.verify("L6_2_phi", a=12.0)["passed"]
    pieces = [(3, 2 * math.pi), (5, 2 * math.pi)]
    assert hypergon.verify("MAIN_THEOREM", pieces=pieces)["worst_margin"] > 0


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        hypergon.perim_regular(4, 10.0)
    with pytest.raises(ValueError):
        hypergon.verify("L9_9")


def test_shapes_and_minimize():
    assert hypergon.enumerate_partition_shapes(2, 2) == [[2, 6], [3, 5], [4, 4]]
    value, argmin = hypergon.brute_force_min([2, 6], 4 * math.pi, 64)
    assert value == pytest.approx(hypergon.mg(2), rel=1e-12)
    assert sum(argmin) == pytest.approx(4 * math.pi)


def test_merge_margins_telescope():
    margins, total, final_is_pg = hypergon.merge_margins([(3, 2 * math.pi), (5, 2 * math.pi)])
    assert final_is_pg
    assert sum(margins) == pytest.approx(total)


def test_certify_small():
    summary = hypergon.certify(genus=2, k_max=2, samples=5)
    assert summary["passed"]
    assert len(summary["shapes"]) == 4
