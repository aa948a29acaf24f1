import math

import pytest

import harmonia


def test_special_functions():
    assert harmonia.gamma(5.0) == pytest.approx(24.0, rel=1e-14)
    assert harmonia.hyp2f1(0.5 + 1j, 0.5 - 1j, 1.5, 0.3) == pytest.approx(1.3117606354930265, rel=1e-13)


def test_eigenfunctions():
    assert harmonia.phi(2, 1.3 + 0.4j, 0.5) == pytest.approx(0.81404827289974906 + 0.056466063559052221j, rel=1e-13)
    assert harmonia.c(0, -1.0) == pytest.approx(1.0, rel=1e-14)
    assert harmonia.psi(4, 3, 1.0) == pytest.approx(0.17637844761413467, rel=1e-13)
    assert harmonia.gamma_set(4) == [1, 3]
    assert harmonia.b_set(4) == [3, 1]
    assert harmonia.connection_residual(3, 0.4 + 1.1j, 1.1) < 1e-10


def test_b_kernel_and_transforms():
    assert harmonia.b(0, 2.0, 1.0) == pytest.approx(0.019687179768021891, rel=1e-12)
    assert harmonia.l1_norm_b(0, 5.0) == pytest.approx(1.0 / 24.0, rel=1e-10)
    got = harmonia.principal_transform("b", 2, 2j, mu=3.5)
    assert got == pytest.approx(1.0 / (3.5**2 + 4.0), rel=1e-7)
    assert harmonia.discrete_transform("b", 4, 3, mu=5.0) == pytest.approx(1.0 / 16.0, rel=1e-7)


def test_errors_carry_kind():
    with pytest.raises(harmonia.HarmoniaError) as info:
        harmonia.b(4, 3.0, 1.0)
    assert info.value.kind == "SpectralParamInB"
    assert isinstance(info.value, ValueError)
    with pytest.raises(harmonia.HarmoniaError) as info:
        harmonia.psi(4, 2, 1.0)
    assert info.value.kind == "IndexNotInGamma"


def test_reconstruction_and_suites():
    rows = harmonia.reconstruct(0, [0.5, 1.0, 1.3], nodes=256)
    assert len(rows) == 3
    assert max(r[3] for r in rows) < 1e-3
    assert rows[1][1] == pytest.approx(1.0)
    assert "wronskian" in harmonia.suite_names()
    report = harmonia.verify("wronskian")
    assert report["passed"]
    assert all(c["passed"] for c in report["checks"])
    assert float(harmonia.format_double17(0.1)) == 0.1
    assert math.isfinite(harmonia.delta_density(1.0))
