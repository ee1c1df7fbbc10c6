"""Economic Van der Waals equation ``(P + a/Q^2)(Q - b) = RI``.

All operations use the molar volume ``Q_m``; ``pressure_total`` is the
n-mole form. Raw pressures may be negative deep below the critical
stability; Maxwell brackets are clamped above zero.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import cubic
from .errors import DomainError, SolverError
from .state import PathKind, ProcessPath, VdWModel, _positive

CRITICAL_TOL = 1e-10
SUBCRITICAL_TOL = 1e-9
AREA_TOL = 1e-10
MAX_BISECT = 200


@dataclass(frozen=True)
class CriticalPoint:
    P_c: float
    Q_c: float
    I_c: float

    def to_dict(self) -> dict:
        return {"P_c": self.P_c, "Q_c": self.Q_c, "I_c": self.I_c}


@dataclass(frozen=True)
class CoexistenceResult:
    """Saturation price level and the two coexisting molar volumes."""

    P_sat: float
    Q_lo: float
    Q_hi: float
    area_residual: float

    def to_dict(self) -> dict:
        return {"P_sat": self.P_sat, "Q_lo": self.Q_lo, "Q_hi": self.Q_hi,
                "area_residual": self.area_residual}


def _check_volume(model, Q_m):
    Q_m = float(Q_m)
    if not math.isfinite(Q_m) or Q_m <= model.b:
        raise DomainError(f"molar volume must exceed b={model.b!r}, got {Q_m!r}")
    return Q_m


def vdw_pressure(model: VdWModel, Q_m: float, I: float) -> float:
    """``RI/(Q_m - b) - a/Q_m^2``; can be negative."""
    Q_m = _check_volume(model, Q_m)
    I = _positive("I", I)
    return model.R * I / (Q_m - model.b) - model.a / Q_m**2


def pressure_total(model: VdWModel, Q: float, I: float) -> float:
    """n-mole form ``(P + a n^2/Q^2)(Q - nb) = nRI`` via ``Q_m = Q/n``."""
    return vdw_pressure(model, _positive("Q", Q) / model.n, I)


def pressure_array(model: VdWModel, Q_m: np.ndarray, I) -> np.ndarray:
    Q_m = np.asarray(Q_m, dtype=float)
    if np.any(Q_m <= model.b):
        raise DomainError(f"molar volumes must exceed b={model.b!r}")
    return model.R * np.asarray(I, dtype=float) / (Q_m - model.b) - model.a / Q_m**2


def dP_dQ(model: VdWModel, Q_m, I):
    """Isothermal slope ``-RI/(Q-b)^2 + 2a/Q^3``."""
    Q_m = np.asarray(Q_m, dtype=float)
    return -model.R * I / (Q_m - model.b) ** 2 + 2.0 * model.a / Q_m**3


def d2P_dQ2(model: VdWModel, Q_m, I):
    Q_m = np.asarray(Q_m, dtype=float)
    return 2.0 * model.R * I / (Q_m - model.b) ** 3 - 6.0 * model.a / Q_m**4


def critical_point(model: VdWModel) -> CriticalPoint:
    a, b, R = model.a, model.b, model.R
    return CriticalPoint(a / (27.0 * b * b), 3.0 * b, 8.0 * a / (27.0 * b * R))


@dataclass(frozen=True)
class CriticalDiagnostics:
    slope: float
    curvature: float
    slope_scaled: float
    curvature_scaled: float
    passed: bool

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def verify_critical(model: VdWModel) -> CriticalDiagnostics:
    """Evaluate both isothermal derivatives at the closed-form critical point.

    Scaled values are relative to ``P_c/Q_c`` and ``P_c/Q_c^2``; both must be
    below ``1e-10`` to pass.
    """
    c = critical_point(model)
    s = float(dP_dQ(model, c.Q_c, c.I_c))
    k = float(d2P_dQ2(model, c.Q_c, c.I_c))
    s_sc = abs(s) / (c.P_c / c.Q_c)
    k_sc = abs(k) / (c.P_c / c.Q_c**2)
    return CriticalDiagnostics(s, k, s_sc, k_sc, s_sc <= CRITICAL_TOL and k_sc <= CRITICAL_TOL)


def cubic_coefficients(model: VdWModel, P: float, I: float) -> tuple[float, float, float]:
    """Monic coefficients of ``Q^3 - (b + RI/P) Q^2 + (a/P) Q - ab/P``."""
    a, b = model.a, model.b
    return -(b + model.R * I / P), a / P, -a * b / P


def volume_roots(model: VdWModel, P: float, I: float) -> list[float]:
    """Molar volumes on the isotherm at price level ``P``, ascending.

    One root above the critical stability (or outside the spinodal band),
    three below it; coinciding roots are repeated.
    """
    P = _positive("P", P)
    I = _positive("I", I)
    roots = cubic.real_roots(*cubic_coefficients(model, P, I))
    # every real root lies above b when P > 0; guard against rounding anyway
    return [r for r in roots if r > model.b]


def spinodals(model: VdWModel, I: float) -> tuple[float, float]:
    """Molar volumes of the local pressure minimum and maximum on a subcritical isotherm.

    They solve ``RI Q^3 = 2a (Q - b)^2``.
    """
    I = _positive("I", I)
    a, b = model.a, model.b
    ri = model.R * I
    roots = sorted(set(r for r in cubic.real_roots(-2.0 * a / ri, 4.0 * a * b / ri, -2.0 * a * b * b / ri)
                       if r > b))
    if len(roots) != 2:
        raise DomainError(f"isotherm at I={I!r} has no spinodal pair (not subcritical)")
    return roots[0], roots[1]


def _antiderivative(model, Q, I):
    return model.R * I * math.log(Q - model.b) + model.a / Q


def _equal_area(model, P, I):
    roots = volume_roots(model, P, I)
    lo, hi = roots[0], roots[-1]
    area = _antiderivative(model, hi, I) - _antiderivative(model, lo, I) - P * (hi - lo)
    return area, lo, hi, len(roots)


def maxwell_construction(model: VdWModel, I: float) -> CoexistenceResult:
    """Equal-area tie line on a subcritical isotherm, found by bisection on P_sat."""
    I = _positive("I", I)
    crit = critical_point(model)
    if I >= crit.I_c * (1.0 - SUBCRITICAL_TOL):
        raise DomainError(f"I={I!r} is not subcritical (I_c={crit.I_c!r}); no coexistence")
    q_min, q_max = spinodals(model, I)
    lo = max(vdw_pressure(model, q_min, I), 0.0)
    hi = vdw_pressure(model, q_max, I)
    if not hi > lo:
        raise SolverError("spinodal bracket is empty")

    best = None
    for _ in range(MAX_BISECT):
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break
        area, q_lo, q_hi, n = _equal_area(model, mid, I)
        if n != 3:
            raise SolverError(f"bracket interior has {n} roots at P={mid!r}")
        best = (mid, q_lo, q_hi, area)
        if area == 0.0:
            break
        if area > 0.0:
            lo = mid
        else:
            hi = mid
    if best is None:
        raise SolverError("bracket collapsed before bisection started")
    P_sat, q_lo, q_hi, area = best
    if abs(area) > AREA_TOL * P_sat * (q_hi - q_lo):
        raise SolverError(f"equal-area residual {area!r} above tolerance")
    return CoexistenceResult(P_sat, q_lo, q_hi, abs(area))


def vdw_isotherm_path(model: VdWModel, I: float, Q_min: float, Q_max: float, m: int,
                      corrected: bool = False) -> ProcessPath:
    """Sampled isotherm over ``[Q_min, Q_max]`` (log-spaced molar volumes).

    With ``corrected`` and a subcritical ``I``, samples inside the
    coexistence interval sit on the flat ``P_sat`` tie line.
    """
    I = _positive("I", I)
    Q_min = _check_volume(model, Q_min)
    Q_max = _check_volume(model, Q_max)
    if not Q_max > Q_min:
        raise DomainError("need Q_max > Q_min")
    if isinstance(m, bool) or not isinstance(m, (int, np.integer)) or m < 2:
        raise DomainError(f"sample count must be an integer >= 2, got {m!r}")
    Q = np.geomspace(Q_min, Q_max, int(m))
    Q[0], Q[-1] = Q_min, Q_max
    P = pressure_array(model, Q, I)
    if corrected and I < critical_point(model).I_c * (1.0 - SUBCRITICAL_TOL):
        co = maxwell_construction(model, I)
        P = np.where((Q >= co.Q_lo) & (Q <= co.Q_hi), co.P_sat, P)
    nan = np.full_like(Q, np.nan)
    return ProcessPath(PathKind.VDW_ISOTHERM, Q, P, np.full_like(Q, I), nan, nan, model)


def surface_grid(model: VdWModel, Q_values, I_values) -> list[tuple[float, float, float]]:
    """``(Q, P, I)`` triples over a molar-volume by stability grid, I-major."""
    rows = []
    Q_values = np.asarray(Q_values, dtype=float)
    for I in I_values:
        P = pressure_array(model, Q_values, _positive("I", I))
        rows.extend(zip(Q_values.tolist(), P.tolist(), [float(I)] * len(P)))
    return rows


def reduced(model: VdWModel, P, Q_m, I):
    """Reduced coordinates ``(P/P_c, Q_m/Q_c, I/I_c)``."""
    c = critical_point(model)
    return np.asarray(P) / c.P_c, np.asarray(Q_m) / c.Q_c, np.asarray(I) / c.I_c


def reduced_pressure(t, v):
    """Model-free reduced isotherm ``8t/(3v-1) - 3/v^2``."""
    v = np.asarray(v, dtype=float)
    return 8.0 * np.asarray(t) / (3.0 * v - 1.0) - 3.0 / v**2
