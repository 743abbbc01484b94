import math

import numpy as np
import pytest

import quadric


def test_tube_curvatures_and_commuting():
    t = quadric.tube(3, "1")
    assert t["alpha"] == pytest.approx(-math.sqrt(2))
    spectrum = quadric.principal_curvatures(t["normal"], t["shape"])
    values = [v for v, _ in spectrum]
    assert values == pytest.approx([-math.sqrt(2), 0.0, math.sqrt(2)], abs=1e-12)
    assert [k for _, k in spectrum] == [1, 2, 2]
    rn = quadric.normal_jacobi(t["normal"], t["shape"])
    rxi = quadric.structure_jacobi(t["normal"], t["shape"])
    assert quadric.commutator_norm(rn, rxi) < 1e-12


def test_curvature_is_antisymmetric():
    rng = np.random.default_rng(0)
    x, y, z = rng.normal(size=(3, 8))
    lhs = quadric.ambient_curvature(x, y, z, theta=0.3)
    rhs = quadric.ambient_curvature(y, x, z, theta=0.3)
    assert np.allclose(lhs, -rhs, atol=1e-12)


def test_classification():
    n = np.zeros(6)
    n[0] = n[4] = 1 / math.sqrt(2)  # (e1 + Je2)/sqrt2
    assert quadric.classify_normal(n)["kind"] == "isotropic"
    with pytest.raises(ValueError):
        quadric.classify_normal(np.array([1.0, 0, 0, 0, 0, 1.0]))


def test_run_suite_report():
    report = quadric.run_suite(m=[3], mode="exact", u=["1/2"], suite=["tube.*"])
    assert report["summary"]["failed"] == 0
    assert report["summary"]["total"] == len(report["reports"]) > 0
    assert all(r["residual"] == "0 + 0*sqrt2" for r in report["reports"])
    bad = quadric.run_suite(m=[3], mode="exact", u=["1"], suite=["tube.commuting_rx"], perturb_lambda="1/1000")
    assert bad["summary"]["failing"] == ["tube.commuting_rx[exact m=3 u=1]"]
    assert "tube.commuting_rx" in quadric.check_names()
