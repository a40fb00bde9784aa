"""Smoke tests for the python bindings."""

import pytest

gencliff = pytest.importorskip("gencliff")


def test_kl_presentation_f2():
    p = gencliff.kl_presentation(
        ring="GF(2)", vars=["x", "y"], m=1, d=2, forms={1: "y"}, mode="ordered"
    )
    assert p.generators == ["a", "b"]
    assert p.relations == ["a^2", "a*b + a", "b*a", "b^2 + b"]
    assert p.provenance == "kl"
    assert "rel: a*b + a" in p.format()


def test_psi_presentation_and_membership():
    p = gencliff.psi_presentation(
        ring="GF(2)", vars=["x", "y"], m=1, d=2, forms={1: "y"}, mode="ordered"
    )
    assert p.relations == ["a^2", "b*a + a*b + a", "b^2 + b"]
    assert gencliff.member(p, "a*b - a", bound=6) == "certified-non-member"
    assert gencliff.member(p, "a^2", bound=6) == "member"


def test_quadratic_dimension():
    p = gencliff.quadratic_presentation(ring="QQ", vars=["x", "y"], form="x^2 + y^2")
    dims = gencliff.quotient_dimension(p, bound=6)
    assert dims["total"] == 4
    assert dims["exact"] is True
    assert dims["per_degree"][:3] == [1, 2, 1]


def test_weyl_normal_form():
    p = gencliff.weyl_presentation(ring="QQ", matrix=[["0", "1"], ["-1", "0"]])
    assert gencliff.normal_form(p, "b*a", bound=6) == "a*b - 1"
    gb = gencliff.groebner_basis(p, bound=6)
    assert "complete: true" in gb


def test_compare_and_hypersurface():
    report = gencliff.compare(
        ring="GF(2)", vars=["x", "y"], m=1, d=2, forms={1: "y"}, mode="ordered", bound=6
    )
    assert report["verdict"] == "proper-inclusion"
    assert report["psi_inside_kl"] is True
    eq = gencliff.hypersurface(ring="QQ", vars=["x", "y"], m=1, d=2, forms={1: "y"})
    assert eq == "x0^2 - x0*y"


def test_homology():
    assert gencliff.homology_rank(2, "QQ", 1, 3) == 1
    table = gencliff.homology_table(2, "QQ", hmax=1, wmax=3)
    assert table[-1] == (1, 3, 1)
    ranks = {(h, w): r for h, w, r in table}
    assert ranks[(0, 0)] == 1
    assert ranks[(0, 2)] == 0


def test_errors_surface_as_exceptions():
    with pytest.raises(Exception, match="NotPrime"):
        gencliff.kl_presentation(ring="GF(4)", vars=["x"], m=1, d=1, forms={})
    with pytest.raises(Exception, match="NotHomogeneous"):
        gencliff.kl_presentation(ring="QQ", vars=["x", "y"], m=1, d=2, forms={2: "x"})


def test_canonical_form_roundtrip():
    s = gencliff.canonical_form(
        "a*(b + 1)^2", gens=["a", "b"], vars=[], ring="QQ", mode="ordered"
    )
    assert s == "a*b^2 + 2*a*b + a"
