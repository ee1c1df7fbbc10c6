"""Independent equal-area oracle on the reduced isotherm.

Roots come from a dense sign scan refined with brentq, lobe areas from
adaptive quadrature, and P_sat from plain bisection. Nothing here calls
into the package.
"""
import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq


def p_reduced(v, t):
    return 8.0 * t / (3.0 * v - 1.0) - 3.0 / v**2


def crossings(p, t):
    v = np.geomspace(0.34, 50.0, 200001)
    g = p_reduced(v, t) - p
    idx = np.nonzero(np.sign(g[:-1]) != np.sign(g[1:]))[0]
    return [brentq(lambda s: p_reduced(s, t) - p, v[i], v[i + 1], xtol=1e-15, rtol=1e-15)
            for i in idx]


def area(p, t):
    r = crossings(p, t)
    lo, hi = r[0], r[-1]
    val, _ = quad(lambda s: p_reduced(s, t) - p, lo, hi, epsabs=1e-14, epsrel=1e-13, limit=200)
    return val, len(r)


def p_sat(t):
    v = np.geomspace(0.34, 50.0, 200001)
    pv = p_reduced(v, t)
    dp = np.diff(pv)
    i_min = np.nonzero((dp[:-1] < 0) & (dp[1:] > 0))[0][0]
    i_max = np.nonzero((dp[:-1] > 0) & (dp[1:] < 0))[0][0]
    lo = max(pv[i_min + 1], 1e-9) * (1 + 1e-9)
    hi = pv[i_max + 1] * (1 - 1e-9)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        a, n = area(mid, t)
        assert n == 3
        if a > 0:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-15 * mid:
            break
    return 0.5 * (lo + hi)


if __name__ == "__main__":
    for t in (0.85, 0.9, 0.95, 0.99):
        ps = p_sat(t)
        r = crossings(ps, t)
        print(t, repr(ps), repr(r[0]), repr(r[-1]))
