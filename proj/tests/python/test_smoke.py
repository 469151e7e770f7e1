import pytest

import totalcolor


def test_build_graph():
    g = totalcolor.build_graph("sn-tm", 4)
    assert g["vertices"] == 24
    assert g["max_degree"] == 3


def test_color_and_verify():
    cert = totalcolor.color("sn-tm", 4)
    assert cert["palette"] == 4
    assert cert["verified"] is True
    report = totalcolor.verify(cert)
    assert report["valid"] is True
    assert report["palette"] == 4


def test_verify_rejects_a_mutation():
    cert = totalcolor.color("dihedral-interval", 12, k=1)
    cert["vertex_colors"][0] = cert["vertex_colors"][1]
    assert totalcolor.verify(cert)["valid"] is False


def test_exact():
    report = totalcolor.exact("kneser-complement", 4, k=2)
    assert report["chi"] == 5
    assert report["type"] == "TYPE_I"


def test_strategies_agree_on_validity():
    for strategy in ("theorem", "greedy", "exact"):
        cert = totalcolor.color("circulant", 12, diffs=(1, 11), strategy=strategy)
        assert totalcolor.verify(cert)["valid"] is True


def test_audit_claim():
    row = totalcolor.audit_claim("sn-tm", n=3)
    assert row["verdict"] == "CONFIRMED"
    row = totalcolor.audit_claim("kneser", n=6, k=2)
    assert row["verdict"] == "INAPPLICABLE"
    assert row["proof_step"] == "REFUTED_AT_INSTANCE"


def test_matrix_and_ids():
    ids = set(totalcolor.theorem_ids())
    assert {row["theorem"] for row in totalcolor.claim_matrix()} == ids
    assert totalcolor.default_budget() > 0


def test_errors_raise_value_error():
    with pytest.raises(ValueError):
        totalcolor.build_graph("circulant", 6, diffs=(1,))
    with pytest.raises(ValueError):
        totalcolor.audit_claim("fermat", n=3)
