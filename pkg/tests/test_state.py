import json
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from roegen import (CarnotSpec, CycleReport, DomainError, ExtendedState, IdealIncomeModel,
                    PathError, ProcessPath, StatePoint, VdWModel, build_cycle, make_state)
from roegen.ideal import extend, isotherm_path

positive = st.floats(min_value=1e-300, max_value=1e300, allow_nan=False, allow_infinity=False)


def test_make_state_identity():
    assert make_state(1, 1, 1) == StatePoint(1.0, 1.0, 1.0)


@pytest.mark.parametrize("args", [(0, 1, 1), (1, -2, 1), (1, 1, 0), (math.nan, 1, 1),
                                  (math.inf, 1, 1), ("x", 1, 1)])
def test_make_state_rejects_outside_octant(args):
    with pytest.raises(DomainError):
        make_state(*args)


@given(positive, positive, positive)
def test_state_json_round_trip_is_bit_exact(P, Q, I):
    s = make_state(P, Q, I)
    back = StatePoint.from_dict(json.loads(json.dumps(s.to_dict())))
    assert back == s


@pytest.mark.parametrize("f", [3, 5, 6])
def test_model_accepts_allowed_dof(f):
    assert IdealIncomeModel(f=f).f == f


@pytest.mark.parametrize("f", [1, 2, 4, 7, 3.5, True])
def test_model_rejects_other_dof(f):
    with pytest.raises(DomainError):
        IdealIncomeModel(f=f)


@pytest.mark.parametrize("kw", [{"n": 0}, {"R": -1}, {"Q_ref": 0}])
def test_model_rejects_nonpositive(kw):
    with pytest.raises(DomainError):
        IdealIncomeModel(**kw)


def test_vdw_model_validation():
    with pytest.raises(DomainError):
        VdWModel(a=1.0, b=0.0)


@given(st.sampled_from([3, 5, 6]), st.floats(0.1, 10), st.floats(0.1, 10), st.floats(0.1, 10))
def test_extended_state_growth_potential_invariant(f, n, Q, I):
    model = IdealIncomeModel(n=n, R=2.0, f=f)
    s = extend(model, StatePoint(n * 2.0 * I / Q, Q, I))
    assert s.G == 0.5 * f * n * 2.0 * I


def test_path_requires_monotone_q(unit_model):
    q = [1.0, 2.0, 1.5]
    with pytest.raises(PathError):
        ProcessPath("IsoIps", q, [1, 1, 1], [1, 1, 1], [0, 0, 0], [1, 1, 1], unit_model)


def test_path_requires_two_samples(unit_model):
    with pytest.raises(PathError):
        ProcessPath("IsoIps", [1.0], [1.0], [1.0], [0.0], [1.0], unit_model)


def test_path_arrays_are_read_only(unit_model):
    p = isotherm_path(unit_model, 1.0, 1.0, 2.0, 5)
    with pytest.raises(ValueError):
        p.Q[0] = 3.0


def test_path_json_round_trip(unit_model):
    p = isotherm_path(unit_model, 1.5, 1.0, 3.0, 7)
    back = ProcessPath.from_dict(json.loads(json.dumps(p.to_dict())))
    assert back == p
    assert [s.point for s in back.samples] == [s.point for s in p.samples]


def test_cycle_report_json_round_trip(unit_model):
    rep = build_cycle(CarnotSpec(unit_model, 2.0, 1.0, 1.0, math.e, 20))
    d = json.loads(json.dumps(rep.to_dict(include_legs=True)))
    back = CycleReport.from_dict(d)
    assert back == rep
    assert isinstance(back.vertices[0], ExtendedState)


def test_types_are_frozen():
    s = make_state(1, 2, 3)
    with pytest.raises(AttributeError):
        s.P = 4.0
