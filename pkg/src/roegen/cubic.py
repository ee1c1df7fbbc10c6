"""Real roots of monic cubics, closed form plus Newton polishing.

``x**3 + c2*x**2 + c1*x + c0 = 0`` is shifted to the depressed form
``t**3 + p*t + q`` and solved with the trigonometric (three real roots) or
hyperbolic (one real root) formulas. ``p``, ``q`` and the discriminant are
compared against their own rounding error, so a root that is double or
triple up to rounding is reported as exactly double or triple instead of
splitting into a cluster of width ~eps**(1/3).
"""
from __future__ import annotations

import math

import numpy as np

from .errors import SolverError

EPS = np.finfo(float).eps
# rounding noise allowance, in units of eps times the size of the cancelling terms
NOISE = 32.0
MAX_POLISH = 100


def _horner(x, c2, c1, c0):
    return ((x + c2) * x + c1) * x + c0


def root_scale(c2, c1, c0):
    """Homogeneous size of the roots implied by the coefficients."""
    return max(abs(c2), math.sqrt(abs(c1)), abs(c0) ** (1.0 / 3.0))


def term_scale(x, c2, c1, c0):
    """Residual scale at ``x``: ``max(|x|, root_scale)**3``."""
    return max(abs(x), root_scale(c2, c1, c0)) ** 3


def depressed(c2, c1, c0):
    """Return ``(shift, p, q, dp, dq)`` with absolute error bounds on p, q."""
    shift = -c2 / 3.0
    p = c1 - c2 * c2 / 3.0
    q = 2.0 * c2**3 / 27.0 - c2 * c1 / 3.0 + c0
    dp = NOISE * EPS * (abs(c1) + c2 * c2 / 3.0)
    dq = NOISE * EPS * (2.0 * abs(c2) ** 3 / 27.0 + abs(c2 * c1) / 3.0 + abs(c0))
    return shift, p, q, dp, dq


def _depressed_roots(p, q, dp, dq):
    """Roots of t^3 + p t + q with multiplicities; returns (roots, mult)."""
    if abs(p) <= dp:
        p = 0.0
    if abs(q) <= dq:
        q = 0.0
    if p == 0.0 and q == 0.0:
        return [0.0], [3]
    if p == 0.0:
        return [-math.copysign(abs(q) ** (1.0 / 3.0), q)], [1]

    disc = -4.0 * p**3 - 27.0 * q * q
    ddisc = 12.0 * p * p * dp + 54.0 * abs(q) * dq + NOISE * EPS * (4.0 * abs(p) ** 3 + 27.0 * q * q)
    if abs(disc) <= ddisc and p < 0.0:
        simple = 3.0 * q / p
        double = -1.5 * q / p
        return [simple, double], [1, 2]
    if disc > 0.0:
        r = 2.0 * math.sqrt(-p / 3.0)
        arg = 1.5 * q / p * math.sqrt(-3.0 / p)
        theta = math.acos(max(-1.0, min(1.0, arg))) / 3.0
        roots = [r * math.cos(theta - 2.0 * math.pi * k / 3.0) for k in range(3)]
        return roots, [1, 1, 1]
    if p < 0.0:
        arg = -1.5 * abs(q) / p * math.sqrt(-3.0 / p)
        t = -math.copysign(1.0, q) * 2.0 * math.sqrt(-p / 3.0) * math.cosh(math.acosh(max(arg, 1.0)) / 3.0)
    else:
        arg = 1.5 * q / p * math.sqrt(3.0 / p)
        t = -2.0 * math.sqrt(p / 3.0) * math.sinh(math.asinh(arg) / 3.0)
    return [t], [1]


def _newton(x, c2, c1, c0, deriv, neighbours):
    """Polish a root of the ``deriv``-th derivative of the cubic.

    Steps that would carry the iterate past half the distance to a
    neighbouring root are rejected so clustered roots cannot swap.
    """
    if deriv == 0:
        f = lambda z: _horner(z, c2, c1, c0)
        fp = lambda z: (3.0 * z + 2.0 * c2) * z + c1
        scale = lambda z: term_scale(z, c2, c1, c0)
    elif deriv == 1:
        f = lambda z: (3.0 * z + 2.0 * c2) * z + c1
        fp = lambda z: 6.0 * z + 2.0 * c2
        scale = lambda z: max(abs(z), root_scale(c2, c1, c0)) ** 2
    else:
        return -c2 / 3.0

    limit = min((abs(x - y) for y in neighbours), default=math.inf) / 2.0
    x0 = x
    best, best_r = x, abs(f(x))
    for _ in range(MAX_POLISH):
        if best_r <= 4.0 * EPS * scale(best):
            break
        d = fp(x)
        if d == 0.0:
            break
        step = f(x) / d
        nxt = x - step
        if abs(nxt - x0) > limit:
            break
        r = abs(f(nxt))
        if r >= best_r:
            break
        best, best_r = nxt, r
        if abs(step) <= EPS * abs(nxt):
            break
        x = nxt
    return best


def real_roots(c2: float, c1: float, c0: float, polish: bool = True) -> list[float]:
    """Ascending real roots of ``x^3 + c2 x^2 + c1 x + c0``, repeated by multiplicity.

    The result has length 1 (one real root) or 3 (three real roots,
    possibly coinciding). Raises SolverError if a polished simple root
    misses the residual target ``1e-12 * term_scale``.
    """
    c2, c1, c0 = float(c2), float(c1), float(c0)
    if not all(math.isfinite(c) for c in (c2, c1, c0)):
        raise SolverError("non-finite cubic coefficient")
    size = root_scale(c2, c1, c0)
    if size == 0.0:
        return [0.0, 0.0, 0.0]
    # solve for z = x/s with s a power of two, so the rescaling is exact and
    # the discriminant can neither underflow nor overflow
    k = math.frexp(size)[1]
    shift, p, q, dp, dq = depressed(math.ldexp(c2, -k), math.ldexp(c1, -2 * k), math.ldexp(c0, -3 * k))
    ts, mult = _depressed_roots(p, q, dp, dq)
    xs = [math.ldexp(t + shift, k) for t in ts]
    if polish:
        polished = []
        for i, (x, m) in enumerate(zip(xs, mult)):
            others = [y for j, y in enumerate(xs) if j != i]
            polished.append(_newton(x, c2, c1, c0, m - 1, others))
        xs = polished
        for x, m in zip(xs, mult):
            if m == 1 and abs(_horner(x, c2, c1, c0)) > 1e-12 * term_scale(x, c2, c1, c0):
                raise SolverError(f"root {x!r} failed to polish")
    out = []
    for x, m in zip(xs, mult):
        out.extend([x] * m)
    out.sort()
    return out


def count_distinct_real(p, q):
    """Vectorised distinct-real-root count of ``t^3 + p t + q`` (no noise handling)."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    disc = -4.0 * p**3 - 27.0 * q**2
    out = np.where(disc > 0, 3, np.where(disc < 0, 1, 2))
    return np.where((p == 0) & (q == 0), 1, out)
