"""Four-leg economic Carnot cycle on the ideal income surface.

Vertex numbering: 1 -> 2 hot iso-ips expansion, 2 -> 3 isentropic
expansion, 3 -> 4 cold iso-ips compression, 4 -> 1 isentropic compression.
The free inputs are the reservoir stabilities and the hot-leg volumes;
``Q_3`` and ``Q_4`` follow from the adiabat relation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .errors import DomainError, ModelError, PathError
from .ideal import (adiabat_path, goods_production_along, growth_change_along,
                    isotherm_path, state_at, trapezoid, work_along)
from .state import CycleReport, IdealIncomeModel, _positive

CLOSURE_TOL = 1e-9
DG_TOL = 1e-8
LOOP_TOL = 1e-6
W_TOL = 1e-9

LEG_NAMES = ("1-2", "2-3", "3-4", "4-1")
REVERSED_LEG_NAMES = ("1-4", "4-3", "3-2", "2-1")


@dataclass(frozen=True)
class CarnotSpec:
    model: IdealIncomeModel
    I_H: float
    I_C: float
    Q_1: float
    Q_2: float
    samples_per_leg: int = 1000

    def __post_init__(self):
        if not isinstance(self.model, IdealIncomeModel):
            raise DomainError("model must be an IdealIncomeModel")
        for name in ("I_H", "I_C", "Q_1", "Q_2"):
            object.__setattr__(self, name, _positive(name, getattr(self, name)))
        if not self.I_H > self.I_C:
            raise DomainError(f"need I_H > I_C, got I_H={self.I_H!r}, I_C={self.I_C!r}")
        if not self.Q_2 > self.Q_1:
            raise DomainError(f"need Q_2 > Q_1, got Q_1={self.Q_1!r}, Q_2={self.Q_2!r}")
        m = self.samples_per_leg
        if isinstance(m, bool) or not isinstance(m, int) or m < 2:
            raise DomainError(f"samples_per_leg must be an integer >= 2, got {m!r}")


def _close(a, b):
    return all(abs(x - y) <= CLOSURE_TOL * max(abs(x), abs(y)) for x, y in zip(a, b))


def build_cycle(spec: CarnotSpec) -> CycleReport:
    """Build the clockwise cycle and its energy balance."""
    model, m = spec.model, spec.samples_per_leg
    stretch = (spec.I_H / spec.I_C) ** (0.5 * model.f)
    Q_3 = spec.Q_2 * stretch
    Q_4 = spec.Q_1 * stretch

    v1 = state_at(model, spec.Q_1, spec.I_H)
    v2 = state_at(model, spec.Q_2, spec.I_H)
    v3 = state_at(model, Q_3, spec.I_C)
    v4 = state_at(model, Q_4, spec.I_C)

    legs = (
        isotherm_path(model, spec.I_H, spec.Q_1, spec.Q_2, m),
        adiabat_path(model, v2.point, Q_3, m),
        isotherm_path(model, spec.I_C, Q_3, Q_4, m),
        adiabat_path(model, v4.point, spec.Q_1, m),
    )
    for leg, target in ((legs[1], v3), (legs[3], v1)):
        end = (leg.P[-1], leg.Q[-1], leg.I[-1])
        if not _close(end, (target.point.P, target.point.Q, target.point.I)):
            raise ModelError(f"isentropic leg misses its vertex: {end} vs {target.point}")

    W = math.fsum(work_along(leg) for leg in legs)
    q_H = goods_production_along(legs[0])
    q_C = -goods_production_along(legs[2])
    return CycleReport(
        vertices=(v1, v2, v3, v4),
        W=W, q_H=q_H, q_C=q_C, eta=W / q_H,
        E_A=v1.E, E_B=v2.E,
        residual_dG=abs(math.fsum(growth_change_along(leg) for leg in legs)),
        residual_W=abs(W - (q_H - q_C)),
        legs=legs,
    )


def _gap(lo, hi, what):
    if hi < lo:
        raise DomainError(f"need {what}")
    return hi - lo


def wealth_rectangle(I_H: float, I_C: float, E_A: float, E_B: float) -> float:
    """Area ``(I_H - I_C)(E_B - E_A)`` of the cycle in the E-I plane.

    Zero-width gaps are allowed and give zero wealth.
    """
    _positive("I_H", I_H)
    _positive("I_C", I_C)
    return _gap(I_C, I_H, "I_H >= I_C") * _gap(E_A, E_B, "E_B >= E_A")


def goods_hot(I_H: float, E_A: float, E_B: float) -> float:
    return _positive("I_H", I_H) * _gap(E_A, E_B, "E_B >= E_A")


def goods_cold(I_C: float, E_A: float, E_B: float) -> float:
    return _positive("I_C", I_C) * _gap(E_A, E_B, "E_B >= E_A")


def efficiency(I_H: float, I_C: float) -> float:
    """``1 - I_C/I_H``; a zero stability gap is an error, not zero."""
    I_H = _positive("I_H", I_H)
    I_C = _positive("I_C", I_C)
    if not I_H > I_C:
        raise DomainError(f"need I_H > I_C for an engine, got {I_H!r} <= {I_C!r}")
    return 1.0 - I_C / I_H


def reverse_cycle(report: CycleReport) -> CycleReport:
    """The consumption cycle: same vertices, traversed counterclockwise."""
    if not isinstance(report, CycleReport):
        raise DomainError("expected a CycleReport")
    legs = tuple(leg.reversed() for leg in reversed(report.legs))
    return replace(report, W=-report.W, q_H=-report.q_H, q_C=-report.q_C,
                   legs=legs, reversed=not report.reversed)


def leg_names(report: CycleReport) -> tuple[str, ...]:
    return REVERSED_LEG_NAMES if report.reversed else LEG_NAMES


@dataclass(frozen=True)
class CycleDiagnostics:
    """Closure residuals of a cycle, recomputed from its sampled legs."""

    loop_PdQ: float
    loop_IdE: float
    residual_dG: float
    residual_loop: float
    residual_W: float
    passed: bool

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def validate_cycle(report: CycleReport) -> CycleDiagnostics:
    """Recompute the loop integrals by quadrature and compare with the report.

    Passing requires ``|∮dG| <= 1e-8|W|``, ``|∮PdQ - ∮IdE| <= 1e-6|W|`` and
    ``|W - (q_H - q_C)| <= 1e-9|q_H|``.
    """
    if not report.legs:
        raise PathError("report has no legs attached")
    pdq = math.fsum(trapezoid(leg.P, leg.Q) for leg in report.legs)
    ide = math.fsum(trapezoid(leg.I, leg.E) for leg in report.legs)
    dg = abs(math.fsum(growth_change_along(leg) for leg in report.legs))
    loop = abs(pdq - ide)
    res_w = abs(report.W - (report.q_H - report.q_C))
    W = abs(report.W)
    passed = dg <= DG_TOL * W and loop <= LOOP_TOL * W and res_w <= W_TOL * abs(report.q_H)
    return CycleDiagnostics(pdq, ide, dg, loop, res_w, bool(passed))
