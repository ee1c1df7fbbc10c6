"""State points, model parameters, process paths and cycle reports.

Every type here is a frozen dataclass; sample arrays on :class:`ProcessPath`
are read-only numpy arrays. ``to_dict``/``from_dict`` give the JSON form,
with field names kept identical to the attribute names.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Any, Union

import numpy as np

from .errors import DomainError, PathError

ALLOWED_DOF = (3, 5, 6)


def _positive(name: str, value: float) -> float:
    try:
        v = float(value)
    except (TypeError, ValueError):
        raise DomainError(f"{name} must be a number, got {value!r}") from None
    if not math.isfinite(v) or v <= 0.0:
        raise DomainError(f"{name} must be finite and > 0, got {value!r}")
    return v


@dataclass(frozen=True)
class StatePoint:
    """A point (P, Q, I) of the open positive octant."""

    P: float
    Q: float
    I: float

    def __post_init__(self):
        for name in ("P", "Q", "I"):
            object.__setattr__(self, name, _positive(name, getattr(self, name)))

    def to_dict(self) -> dict:
        return {"P": self.P, "Q": self.Q, "I": self.I}

    @classmethod
    def from_dict(cls, d: dict) -> "StatePoint":
        return cls(d["P"], d["Q"], d["I"])


def make_state(P: float, Q: float, I: float) -> StatePoint:
    """Validate and return a state point; raises DomainError off the octant."""
    return StatePoint(P, Q, I)


@dataclass(frozen=True)
class IdealIncomeModel:
    """Parameters of the ideal income law ``PQ = nRI``.

    ``Q_ref`` and ``I_ref`` fix the zero of the entropy scale.
    """

    n: float = 1.0
    R: float = 1.0
    f: int = 3
    Q_ref: float = 1.0
    I_ref: float = 1.0

    def __post_init__(self):
        for name in ("n", "R", "Q_ref", "I_ref"):
            object.__setattr__(self, name, _positive(name, getattr(self, name)))
        f = self.f
        if isinstance(f, bool) or not isinstance(f, (int, np.integer, float)) or f not in ALLOWED_DOF:
            raise DomainError(f"f must be one of {ALLOWED_DOF}, got {f!r}")
        object.__setattr__(self, "f", int(f))

    @property
    def nR(self) -> float:
        return self.n * self.R

    def to_dict(self) -> dict:
        return {"type": "ideal", "n": self.n, "R": self.R, "f": self.f,
                "Q_ref": self.Q_ref, "I_ref": self.I_ref}

    @classmethod
    def from_dict(cls, d: dict) -> "IdealIncomeModel":
        return cls(d["n"], d["R"], d["f"], d.get("Q_ref", 1.0), d.get("I_ref", 1.0))


@dataclass(frozen=True)
class VdWModel:
    """Parameters of the economic Van der Waals equation."""

    a: float
    b: float
    R: float = 1.0
    n: float = 1.0

    def __post_init__(self):
        for name in ("a", "b", "R", "n"):
            object.__setattr__(self, name, _positive(name, getattr(self, name)))

    def to_dict(self) -> dict:
        return {"type": "vdw", "a": self.a, "b": self.b, "R": self.R, "n": self.n}

    @classmethod
    def from_dict(cls, d: dict) -> "VdWModel":
        return cls(d["a"], d["b"], d.get("R", 1.0), d.get("n", 1.0))


Model = Union[IdealIncomeModel, VdWModel]


def model_from_dict(d: dict) -> Model:
    kind = d.get("type")
    if kind == "ideal":
        return IdealIncomeModel.from_dict(d)
    if kind == "vdw":
        return VdWModel.from_dict(d)
    raise DomainError(f"unknown model type {kind!r}")


@dataclass(frozen=True)
class ExtendedState:
    """A state point together with its entropy and growth potential.

    E and G are ``None`` for models that do not define them (Van der Waals).
    """

    point: StatePoint
    E: float | None
    G: float | None

    def to_dict(self) -> dict:
        return {"point": self.point.to_dict(), "E": self.E, "G": self.G}

    @classmethod
    def from_dict(cls, d: dict) -> "ExtendedState":
        return cls(StatePoint.from_dict(d["point"]), d["E"], d["G"])


class PathKind(str, enum.Enum):
    ISO_IPS = "IsoIps"
    ISENTROPIC = "Isentropic"
    VDW_ISOTHERM = "VdWIsotherm"


def _frozen(values) -> np.ndarray:
    arr = np.array(values, dtype=float)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class ProcessPath:
    """A sampled reversible process.

    Samples are stored column-wise (``Q``, ``P``, ``I``, ``E``, ``G``) so that
    quadrature and export work on arrays; :attr:`samples` rebuilds the
    per-sample :class:`ExtendedState` view. ``E`` and ``G`` are NaN for
    Van der Waals isotherms.
    """

    kind: PathKind
    Q: np.ndarray
    P: np.ndarray
    I: np.ndarray
    E: np.ndarray
    G: np.ndarray
    model: Model = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "kind", PathKind(self.kind))
        cols = {}
        for name in ("Q", "P", "I", "E", "G"):
            cols[name] = _frozen(getattr(self, name))
            object.__setattr__(self, name, cols[name])
        m = cols["Q"].shape
        if cols["Q"].ndim != 1 or m[0] < 2:
            raise PathError("a path needs at least 2 samples")
        if any(c.shape != m for c in cols.values()):
            raise PathError("sample columns differ in length")
        dq = np.diff(cols["Q"])
        # A path may be a single repeated state (zero-length process).
        if not (np.all(dq > 0) or np.all(dq < 0) or np.all(dq == 0)):
            raise PathError("Q must be strictly monotone along the path")

    def __len__(self) -> int:
        return self.Q.shape[0]

    def __eq__(self, other):
        if not isinstance(other, ProcessPath):
            return NotImplemented
        return (self.kind == other.kind and self.model == other.model
                and all(np.array_equal(getattr(self, c), getattr(other, c), equal_nan=True)
                        for c in ("Q", "P", "I", "E", "G")))

    __hash__ = None

    @property
    def model_id(self) -> dict:
        return self.model.to_dict()

    @property
    def samples(self) -> list[ExtendedState]:
        out = []
        for q, p, i, e, g in zip(self.Q, self.P, self.I, self.E, self.G):
            out.append(ExtendedState(StatePoint(p, q, i),
                                     None if math.isnan(e) else float(e),
                                     None if math.isnan(g) else float(g)))
        return out

    def reversed(self) -> "ProcessPath":
        return ProcessPath(self.kind, self.Q[::-1], self.P[::-1], self.I[::-1],
                           self.E[::-1], self.G[::-1], self.model)

    def with_columns(self, **cols) -> "ProcessPath":
        """Copy of the path with some sample columns replaced."""
        base = {c: getattr(self, c) for c in ("Q", "P", "I", "E", "G")}
        base.update(cols)
        return ProcessPath(self.kind, model=self.model, **base)

    def to_dict(self) -> dict:
        return {"kind": self.kind.value,
                "samples": [s.to_dict() for s in self.samples],
                "model_id": self.model_id}

    @classmethod
    def from_dict(cls, d: dict) -> "ProcessPath":
        samples = [ExtendedState.from_dict(s) for s in d["samples"]]
        nan = float("nan")
        return cls(d["kind"],
                   [s.point.Q for s in samples], [s.point.P for s in samples],
                   [s.point.I for s in samples],
                   [nan if s.E is None else s.E for s in samples],
                   [nan if s.G is None else s.G for s in samples],
                   model_from_dict(d["model_id"]))


@dataclass(frozen=True)
class CycleReport:
    """Vertices, energy balance and closure residuals of a four-leg cycle.

    ``legs`` holds the sampled processes in traversal order. ``reversed``
    marks a consumption (counterclockwise) cycle.
    """

    vertices: tuple[ExtendedState, ExtendedState, ExtendedState, ExtendedState]
    W: float
    q_H: float
    q_C: float
    eta: float
    E_A: float
    E_B: float
    residual_dG: float
    residual_W: float
    legs: tuple[ProcessPath, ...] = ()
    reversed: bool = False

    def to_dict(self, include_legs: bool = False) -> dict:
        d: dict[str, Any] = {
            "vertices": [v.to_dict() for v in self.vertices],
            "W": self.W, "q_H": self.q_H, "q_C": self.q_C, "eta": self.eta,
            "E_A": self.E_A, "E_B": self.E_B,
            "residual_dG": self.residual_dG, "residual_W": self.residual_W,
            "reversed": self.reversed,
        }
        if include_legs:
            d["legs"] = [leg.to_dict() for leg in self.legs]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "CycleReport":
        return cls(
            vertices=tuple(ExtendedState.from_dict(v) for v in d["vertices"]),
            W=d["W"], q_H=d["q_H"], q_C=d["q_C"], eta=d["eta"],
            E_A=d["E_A"], E_B=d["E_B"],
            residual_dG=d["residual_dG"], residual_W=d["residual_W"],
            legs=tuple(ProcessPath.from_dict(p) for p in d.get("legs", ())),
            reversed=d.get("reversed", False),
        )
