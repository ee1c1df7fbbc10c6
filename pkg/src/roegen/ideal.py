"""Ideal income equation of state ``PQ = nRI`` and its reversible processes.

Sign convention: work ``∫P dQ`` is positive for expansion, and goods
production ``∫I dE`` is positive when entropy increases.
"""
from __future__ import annotations

import math

import numpy as np

from .errors import DomainError, ModelError, PathError
from .state import (ExtendedState, IdealIncomeModel, PathKind, ProcessPath,
                    StatePoint, _positive)

EOS_TOL = 1e-9


def pressure(model: IdealIncomeModel, Q: float, I: float) -> float:
    """Price level ``nRI/Q`` on the ideal income surface."""
    Q = _positive("Q", Q)
    I = _positive("I", I)
    return model.nR * I / Q


def growth_potential(model: IdealIncomeModel, I: float) -> float:
    """Growth potential ``(f/2) nRI``; depends on I only."""
    I = _positive("I", I)
    return 0.5 * model.f * model.nR * I


def entropy(model: IdealIncomeModel, Q: float, I: float) -> float:
    """Entropy relative to the model's reference state ``(Q_ref, I_ref)``."""
    Q = _positive("Q", Q)
    I = _positive("I", I)
    return model.nR * (math.log(Q / model.Q_ref) + 0.5 * model.f * math.log(I / model.I_ref))


def delta_entropy_isothermal(model: IdealIncomeModel, Q_from: float, Q_to: float) -> float:
    Q_from = _positive("Q_from", Q_from)
    Q_to = _positive("Q_to", Q_to)
    return model.nR * math.log(Q_to / Q_from)


def extend(model: IdealIncomeModel, point: StatePoint) -> ExtendedState:
    """Attach entropy and growth potential to a point on the surface."""
    return ExtendedState(point, entropy(model, point.Q, point.I), growth_potential(model, point.I))


def state_at(model: IdealIncomeModel, Q: float, I: float) -> ExtendedState:
    return extend(model, StatePoint(pressure(model, Q, I), Q, I))


def check_on_surface(model: IdealIncomeModel, s: StatePoint) -> None:
    nri = model.nR * s.I
    if abs(s.P * s.Q - nri) > EOS_TOL * nri:
        raise ModelError(f"state {s} is off the ideal income surface (PQ != nRI)")


def adiabat_endpoint(model: IdealIncomeModel, start: StatePoint, Q_to: float) -> StatePoint:
    """Move isentropically from ``start`` to volume ``Q_to``.

    ``I`` scales as ``(Q_from/Q_to)**(2/f)``, so ``P Q**((f+2)/f)`` is held fixed.
    """
    if not isinstance(start, StatePoint):
        raise DomainError("start must be a StatePoint")
    Q_to = _positive("Q_to", Q_to)
    check_on_surface(model, start)
    if Q_to == start.Q:
        return start
    I_to = start.I * (start.Q / Q_to) ** (2.0 / model.f)
    return StatePoint(pressure(model, Q_to, I_to), Q_to, I_to)


def _count(m) -> int:
    if isinstance(m, bool) or not isinstance(m, (int, np.integer)) or m < 2:
        raise DomainError(f"sample count must be an integer >= 2, got {m!r}")
    return int(m)


def _sample_q(Q_from, Q_to, m):
    q = np.geomspace(Q_from, Q_to, _count(m))
    # pin the endpoints exactly
    q[0], q[-1] = Q_from, Q_to
    return q


def _columns(model, Q, I):
    nR = model.nR
    P = nR * I / Q
    E = nR * (np.log(Q / model.Q_ref) + 0.5 * model.f * np.log(I / model.I_ref))
    G = 0.5 * model.f * nR * I
    return P, E, G


def isotherm_path(model: IdealIncomeModel, I: float, Q_from: float, Q_to: float, m: int) -> ProcessPath:
    """Iso-ips process at stability ``I``, log-spaced in Q."""
    I = _positive("I", I)
    Q_from = _positive("Q_from", Q_from)
    Q_to = _positive("Q_to", Q_to)
    if Q_from == Q_to:
        raise DomainError("iso-ips path needs Q_from != Q_to")
    Q = _sample_q(Q_from, Q_to, m)
    Iv = np.full_like(Q, I)
    P, E, G = _columns(model, Q, Iv)
    return ProcessPath(PathKind.ISO_IPS, Q, P, Iv, E, G, model)


def adiabat_path(model: IdealIncomeModel, start: StatePoint, Q_to: float, m: int) -> ProcessPath:
    """Isentropic process from ``start`` to ``Q_to``, log-spaced in Q.

    ``Q_to == start.Q`` gives ``m`` copies of the start state.
    """
    end = adiabat_endpoint(model, start, Q_to)
    if end.Q == start.Q:
        Q = np.full(_count(m), start.Q)
        Iv = np.full_like(Q, start.I)
        P = np.full_like(Q, start.P)
    else:
        Q = _sample_q(start.Q, end.Q, m)
        Iv = start.I * (start.Q / Q) ** (2.0 / model.f)
        Iv[0] = start.I
        P = model.nR * Iv / Q
        P[0] = start.P
    _, E, G = _columns(model, Q, Iv)
    return ProcessPath(PathKind.ISENTROPIC, Q, P, Iv, E, G, model)


def trapezoid(y: np.ndarray, x: np.ndarray) -> float:
    """Composite trapezoid of ``y dx`` over the stored samples."""
    y = np.asarray(y, dtype=float)
    x = np.asarray(x, dtype=float)
    return float(np.sum(0.5 * (y[1:] + y[:-1]) * np.diff(x)))


def _check_path(path):
    if not isinstance(path, ProcessPath):
        raise PathError("expected a ProcessPath")
    if len(path) < 2:
        raise PathError("a path needs at least 2 samples")


def work_along(path: ProcessPath, method: str = "auto") -> float:
    """``∫P dQ`` along ``path``.

    ``method="auto"`` uses the closed form for iso-ips and isentropic
    ideal-income paths and the trapezoid rule otherwise;
    ``method="trapezoid"`` always integrates the samples.
    """
    _check_path(path)
    if method not in ("auto", "trapezoid"):
        raise ValueError(f"unknown method {method!r}")
    if method == "auto" and isinstance(path.model, IdealIncomeModel):
        model = path.model
        if path.kind is PathKind.ISO_IPS:
            return model.nR * float(path.I[0]) * (math.log(path.Q[-1]) - math.log(path.Q[0]))
        if path.kind is PathKind.ISENTROPIC:
            return 0.5 * model.f * model.nR * (float(path.I[0]) - float(path.I[-1]))
    return trapezoid(path.P, path.Q)


def goods_production_along(path: ProcessPath, method: str = "auto") -> float:
    """``∫I dE`` along ``path``; zero on isentropic paths."""
    _check_path(path)
    if method not in ("auto", "trapezoid"):
        raise ValueError(f"unknown method {method!r}")
    if path.kind is PathKind.VDW_ISOTHERM:
        raise PathError("entropy is not defined on Van der Waals isotherms")
    if method == "auto":
        if path.kind is PathKind.ISO_IPS:
            return float(path.I[0]) * float(path.E[-1] - path.E[0])
        if path.kind is PathKind.ISENTROPIC:
            return 0.0
    return trapezoid(path.I, path.E)


def growth_change_along(path: ProcessPath) -> float:
    """``∫dG`` along the path, i.e. G(end) - G(start)."""
    _check_path(path)
    return float(path.G[-1] - path.G[0])
