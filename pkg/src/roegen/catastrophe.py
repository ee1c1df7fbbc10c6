"""Map from (P, Q, I) onto cusp catastrophe coordinates (x, alpha, beta).

With ``y = 1/Q`` the Van der Waals cubic becomes
``y^3 - y^2/b + (P/a + RI/(ab)) y - P/(ab) = 0``; shifting ``x = y - 1/(3b)``
removes the quadratic term and leaves ``x^3 + alpha x + beta = 0`` with

    alpha = P/a + RI/(ab) - 1/(3b^2)
    beta  = -2P/(3ab) + RI/(3ab^2) - 2/(27b^3)

so every state on the Van der Waals surface lands on the cusp manifold and
the critical point lands on the origin.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import cubic
from .errors import DomainError
from .state import StatePoint, VdWModel
from .vdw import critical_point, vdw_pressure


@dataclass(frozen=True)
class CuspCoords:
    x: float
    alpha: float
    beta: float

    def to_dict(self) -> dict:
        return {"x": self.x, "alpha": self.alpha, "beta": self.beta}

    @classmethod
    def from_dict(cls, d: dict) -> "CuspCoords":
        return cls(d["x"], d["alpha"], d["beta"])


def control(model: VdWModel, P, I):
    """``(alpha, beta)``; they do not depend on Q. Works on arrays."""
    a, b, R = model.a, model.b, model.R
    alpha = P / a + R * I / (a * b) - 1.0 / (3.0 * b * b)
    beta = -2.0 * P / (3.0 * a * b) + R * I / (3.0 * a * b * b) - 2.0 / (27.0 * b**3)
    return alpha, beta


def phi(model: VdWModel, s: StatePoint) -> CuspCoords:
    if not isinstance(s, StatePoint):
        raise DomainError("phi expects a StatePoint in the positive octant")
    alpha, beta = control(model, s.P, s.I)
    return CuspCoords(1.0 / s.Q - 1.0 / (3.0 * model.b), alpha, beta)


def phi_inverse(model: VdWModel, c: CuspCoords) -> StatePoint:
    """Closed-form inverse; DomainError when ``c`` is outside the image."""
    a, b, R = model.a, model.b, model.R
    y = c.x + 1.0 / (3.0 * b)
    if not y > 0.0:
        raise DomainError(f"x={c.x!r} maps to a non-positive volume")
    A = c.alpha + 1.0 / (3.0 * b * b)  # P/a + RI/(ab)
    B = c.beta + 2.0 / (27.0 * b**3)  # -2P/(3ab) + RI/(3ab^2)
    P = a * (A / 3.0 - b * B)
    I = b * (a * A - P) / R
    if not (P > 0.0 and I > 0.0):
        raise DomainError(f"{c} is outside the image of the positive octant (P={P!r}, I={I!r})")
    return StatePoint(P, 1.0 / y, I)


def surface_residual(c: CuspCoords) -> float:
    return c.x**3 + c.alpha * c.x + c.beta


def residual_scale(c: CuspCoords) -> float:
    return max(abs(c.x) ** 3, abs(c.alpha * c.x), abs(c.beta), 1.0)


def cusp_potential(c: CuspCoords) -> float:
    """``x^4/4 + alpha x^2/2 + beta x``."""
    x = c.x
    return 0.25 * x**4 + 0.5 * c.alpha * x * x + c.beta * x


def cusp_stationary_points(alpha: float, beta: float) -> list[float]:
    """Real roots of ``x^3 + alpha x + beta``, ascending, with multiplicity."""
    return cubic.real_roots(0.0, alpha, beta)


def cusp_discriminant(alpha, beta):
    """``-4 alpha^3 - 27 beta^2``: positive means three distinct stationary points."""
    alpha = np.asarray(alpha, dtype=float)
    beta = np.asarray(beta, dtype=float)
    out = -4.0 * alpha**3 - 27.0 * beta**2
    return float(out) if out.ndim == 0 else out


def bifurcation_grid(alpha_values, beta_values) -> list[tuple[float, float, int]]:
    """``(alpha, beta, distinct stationary point count)`` rows, alpha-major."""
    al, be = np.meshgrid(np.asarray(alpha_values, dtype=float),
                         np.asarray(beta_values, dtype=float), indexing="ij")
    counts = cubic.count_distinct_real(al, be)
    return list(zip(al.ravel().tolist(), be.ravel().tolist(), counts.ravel().tolist()))


ROUND_TRIP_TOL = 1e-10


def sample_surface_states(model: VdWModel, count: int, rng: np.random.Generator) -> list[StatePoint]:
    """Random states on the Van der Waals surface with positive price level.

    Stability is log-uniform in ``[0.5, 2] I_c`` and ``Q_m - b`` log-uniform
    in ``[0.2 b, 20 b]``.
    """
    I_c = critical_point(model).I_c
    out: list[StatePoint] = []
    while len(out) < count:
        I = I_c * math.exp(rng.uniform(math.log(0.5), math.log(2.0)))
        Q = model.b * (1.0 + math.exp(rng.uniform(math.log(0.2), math.log(20.0))))
        P = vdw_pressure(model, Q, I)
        if P > 0.0:
            out.append(StatePoint(P, Q, I))
    return out


def check_surface(model: VdWModel, count: int, rng: np.random.Generator) -> tuple[float, float]:
    """Worst scaled cusp residual and worst relative round-trip error over sampled states."""
    worst = worst_rt = 0.0
    for s in sample_surface_states(model, count, rng):
        c = phi(model, s)
        worst = max(worst, abs(surface_residual(c)) / residual_scale(c))
        back = phi_inverse(model, c)
        worst_rt = max(worst_rt, abs(back.P - s.P) / s.P, abs(back.Q - s.Q) / s.Q, abs(back.I - s.I) / s.I)
    return worst, worst_rt
