import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from roegen import (DomainError, VdWModel, critical_point, maxwell_construction,
                    vdw_isotherm_path, vdw_pressure, verify_critical, volume_roots)
from roegen.vdw import (dP_dQ, pressure_array, pressure_total, reduced, reduced_pressure,
                        spinodals, surface_grid)

# Frozen from tests/oracles/maxwell_oracle.py (sign scan + brentq roots,
# adaptive quadrature areas, bisection on the reduced isotherm).
ORACLE = {
    0.85: (0.5044916497874874, 0.5533604584398423, 3.1276392924411858),
    0.90: (0.6469983518722511, 0.6034019031780036, 2.3488423762022275),
    0.95: (0.8118792433644799, 0.6841221136561401, 1.7270711922558946),
    0.99: (0.960479060894029, 0.8309140614716031, 1.2429533101249124),
}

models = st.builds(VdWModel, a=st.floats(0.1, 100), b=st.floats(0.01, 10), R=st.floats(0.1, 10))


def test_pressure_examples(vdw_model):
    assert vdw_pressure(vdw_model, 3.0, 1.0) == 1.0
    with pytest.raises(DomainError):
        vdw_pressure(vdw_model, 1.0, 1.0)
    with pytest.raises(DomainError):
        vdw_pressure(vdw_model, 0.5, 1.0)


def test_ideal_limit():
    m = VdWModel(a=1e-300, b=1e-300, R=1.0)
    assert vdw_pressure(m, 2.0, 1.0) == 0.5
    for Q in np.geomspace(1e-3, 1e3, 25):
        assert vdw_pressure(m, Q, 1.7) == pytest.approx(1.7 / Q, rel=4e-16)


def test_pressure_can_be_negative(vdw_model):
    assert vdw_pressure(vdw_model, 1.5, 0.3) < 0


def test_n_mole_form():
    m = VdWModel(a=2.0, b=0.5, R=1.3, n=4.0)
    Q, I = 9.0, 1.1
    P = pressure_total(m, Q, I)
    n = m.n
    assert (P + m.a * n * n / Q**2) * (Q - n * m.b) == pytest.approx(n * m.R * I, rel=1e-14)


def test_critical_point_examples():
    c = critical_point(VdWModel(27.0, 1.0, 8.0))
    assert (c.P_c, c.Q_c, c.I_c) == (1.0, 3.0, 1.0)
    c = critical_point(VdWModel(1.0, 1.0, 1.0))
    assert c.P_c == pytest.approx(1 / 27, rel=1e-15)
    assert c.Q_c == 3.0
    assert c.I_c == pytest.approx(8 / 27, rel=1e-15)


def test_critical_point_homogeneity():
    base = critical_point(VdWModel(2.0, 0.7, 1.3))
    scaled = critical_point(VdWModel(10.0, 0.7, 1.3))
    assert scaled.Q_c == base.Q_c
    assert scaled.P_c == pytest.approx(5 * base.P_c, rel=1e-15)
    assert scaled.I_c == pytest.approx(5 * base.I_c, rel=1e-15)


def test_verify_critical(vdw_model):
    d = verify_critical(vdw_model)
    assert d.passed and d.slope_scaled <= 1e-10 and d.curvature_scaled <= 1e-10


def test_supercritical_isotherm_is_monotone(vdw_model):
    c = critical_point(vdw_model)
    q = np.geomspace(1.0001 * vdw_model.b, 100.0, 20001)
    assert np.all(dP_dQ(vdw_model, q, 1.1 * c.I_c) < 0)
    assert dP_dQ(vdw_model, c.Q_c, 0.9 * c.I_c) > 0


def test_triple_root(vdw_model):
    c = critical_point(vdw_model)
    assert volume_roots(vdw_model, c.P_c, c.I_c) == [3.0, 3.0, 3.0]


def _sign_changes(model, P, I):
    q = np.geomspace(model.b * (1 + 1e-9), model.b * 1e4, 400001)
    g = pressure_array(model, q, I) - P
    return int(np.count_nonzero(np.sign(g[:-1]) != np.sign(g[1:])))


def test_supercritical_single_root(vdw_model):
    c = critical_point(vdw_model)
    roots = volume_roots(vdw_model, c.P_c, 2 * c.I_c)
    assert len(roots) == 1 and roots[0] > vdw_model.b
    assert _sign_changes(vdw_model, c.P_c, 2 * c.I_c) == 1


def test_subcritical_roots_match_coexistence(vdw_model):
    c = critical_point(vdw_model)
    co = maxwell_construction(vdw_model, 0.9 * c.I_c)
    roots = volume_roots(vdw_model, co.P_sat, 0.9 * c.I_c)
    assert len(roots) == 3
    assert roots[0] == pytest.approx(co.Q_lo, rel=1e-12)
    assert roots[2] == pytest.approx(co.Q_hi, rel=1e-12)
    assert _sign_changes(vdw_model, co.P_sat, 0.9 * c.I_c) == 3


@settings(max_examples=60, deadline=None)
@given(models, st.floats(0.3, 3.0), st.floats(0.05, 5.0))
def test_root_pressure_duality(model, t, pr):
    c = critical_point(model)
    P, I = pr * c.P_c, t * c.I_c
    roots = volume_roots(model, P, I)
    assert len(roots) in (1, 3)
    for q in roots:
        assert abs(vdw_pressure(model, q, I) - P) <= 1e-9 * P


@pytest.mark.parametrize("t", sorted(ORACLE))
def test_maxwell_against_oracle(vdw_model, t):
    # vdw_model is already in reduced units
    co = maxwell_construction(vdw_model, t)
    p, lo, hi = ORACLE[t]
    assert co.P_sat == pytest.approx(p, rel=1e-6)
    assert co.Q_lo / 3.0 == pytest.approx(lo, rel=1e-6)
    assert co.Q_hi / 3.0 == pytest.approx(hi, rel=1e-6)
    assert co.area_residual <= 1e-10 * co.P_sat * (co.Q_hi - co.Q_lo)


def test_maxwell_quadrature_crosscheck(vdw_model):
    co = maxwell_construction(vdw_model, 0.9)
    q = np.linspace(co.Q_lo, co.Q_hi, 10_000)
    p = pressure_array(vdw_model, q, 0.9)
    trap = float(np.sum(0.5 * (p[1:] + p[:-1]) * np.diff(q)))
    analytic = (8 * 0.9 * (math.log(co.Q_hi - 1) - math.log(co.Q_lo - 1))
                + 27 / co.Q_hi - 27 / co.Q_lo)
    assert trap == pytest.approx(analytic, rel=1e-6)
    assert abs(trap - co.P_sat * (co.Q_hi - co.Q_lo)) <= 1e-6 * co.P_sat * (co.Q_hi - co.Q_lo)


def test_maxwell_approaches_critical_point(vdw_model):
    ts = [0.9, 0.99, 0.999, 0.9999, 0.99999]
    cos = [maxwell_construction(vdw_model, t) for t in ts]
    gaps = [c.Q_hi - c.Q_lo for c in cos]
    ps = [c.P_sat for c in cos]
    assert all(b > a for a, b in zip(ps, ps[1:]))
    assert all(b < a for a, b in zip(gaps, gaps[1:]))
    assert ps[-1] == pytest.approx(1.0, abs=1e-4)
    assert gaps[-1] < 0.05


@pytest.mark.parametrize("t", [1.0, 1.1, 1.0 - 1e-12])
def test_maxwell_rejects_supercritical(vdw_model, t):
    with pytest.raises(DomainError):
        maxwell_construction(vdw_model, t)


def test_spinodals_bracket_critical_volume(vdw_model):
    lo, hi = spinodals(vdw_model, 0.9)
    assert 1.0 < lo < 3.0 < hi
    assert dP_dQ(vdw_model, lo, 0.9) == pytest.approx(0.0, abs=1e-12)
    assert dP_dQ(vdw_model, hi, 0.9) == pytest.approx(0.0, abs=1e-12)


def test_isotherm_path_supercritical_unaffected(vdw_model):
    raw = vdw_isotherm_path(vdw_model, 1.2, 1.2, 20.0, 300)
    fixed = vdw_isotherm_path(vdw_model, 1.2, 1.2, 20.0, 300, corrected=True)
    assert raw == fixed


def test_isotherm_path_subcritical(vdw_model):
    raw = vdw_isotherm_path(vdw_model, 0.9, 1.3, 20.0, 2000)
    fixed = vdw_isotherm_path(vdw_model, 0.9, 1.3, 20.0, 2000, corrected=True)
    assert np.any(np.diff(raw.P) > 0)
    assert np.all(np.diff(fixed.P) <= 0)
    co = maxwell_construction(vdw_model, 0.9)
    inside = (fixed.Q >= co.Q_lo) & (fixed.Q <= co.Q_hi)
    assert inside.sum() > 10
    assert np.all(fixed.P[inside] == co.P_sat)


def test_isotherm_path_bounds(vdw_model):
    with pytest.raises(DomainError):
        vdw_isotherm_path(vdw_model, 1.0, 0.5, 3.0, 10)
    with pytest.raises(DomainError):
        vdw_isotherm_path(vdw_model, 1.0, 4.0, 3.0, 10)
    with pytest.raises(DomainError):
        vdw_isotherm_path(vdw_model, 1.0, 2.0, 3.0, 1)


def test_corresponding_states():
    m1 = VdWModel(27.0, 1.0, 8.0)
    m2 = VdWModel(3.7, 0.21, 0.55)
    v = np.geomspace(0.4, 8.0, 101)
    for t in (0.8, 1.0, 1.3):
        curves = []
        for m in (m1, m2):
            c = critical_point(m)
            q = v * c.Q_c
            p = pressure_array(m, q, t * c.I_c)
            pr, vr, tr = reduced(m, p, q, t * c.I_c)
            curves.append(pr)
        np.testing.assert_allclose(curves[0], curves[1], rtol=1e-12, atol=1e-12)
        np.testing.assert_allclose(curves[0], reduced_pressure(t, v), rtol=1e-12, atol=1e-12)


def test_surface_grid_rows(vdw_model):
    rows = surface_grid(vdw_model, [2.0, 3.0], [0.9, 1.0])
    assert rows[0] == (2.0, vdw_pressure(vdw_model, 2.0, 0.9), 0.9)
    assert len(rows) == 4
