"""Adaptive Gauss-Kronrod quadrature, independent of every closed form here.

A 7-point Gauss / 15-point Kronrod pair is applied per panel; the panel with
the largest error estimate is bisected until the global estimate meets the
tolerance or the evaluation budget runs out.  The estimator is the classic
scaled (200|K15-G7|)^{3/2} rule, floored at 50 ulp of the absolute integral.

integrate_singular_pair handles kernels 1/sqrt((hi^2-q^2)(q^2-lo^2)) through
the exact substitution q^2 = lo^2 + (hi^2-lo^2) sin^2 t, which maps the
integral of g(q)/sqrt(...) over (lo, hi) to the bounded integral of g(q)/q
over (0, pi/2).  lo = 0 is allowed: the substitution degenerates to
q = hi * sin t and removes a plain 1/sqrt(hi^2-q^2) endpoint singularity.
"""

import heapq
import math
import os
from dataclasses import dataclass

from .errors import DomainError, NonConvergenceError, NonFiniteIntegrandError

HALF_PI = math.pi / 2.0

DEFAULT_MAX_EVALS_1D = 1_000_000
DEFAULT_MAX_EVALS_2D = 10_000_000
_ABS_FLOOR = 1e-15  # absolute target is _ABS_FLOOR * (hi - lo)
_EPS = 2.220446049250313e-16

# 15-point Kronrod abscissae on [-1, 1] and weights; the embedded 7-point
# Gauss rule lives on every second node.
_XK = (
    -0.9914553711208126, -0.9491079123427585, -0.8648644233597691,
    -0.7415311855993944, -0.5860872354676911, -0.4058451513773972,
    -0.2077849550078985, 0.0, 0.2077849550078985, 0.4058451513773972,
    0.5860872354676911, 0.7415311855993944, 0.8648644233597691,
    0.9491079123427585, 0.9914553711208126,
)
_WK = (
    0.022935322010529224, 0.06309209262997855, 0.10479001032225018,
    0.14065325971552592, 0.1690047266392679, 0.19035057806478542,
    0.20443294007529889, 0.20948214108472782, 0.20443294007529889,
    0.19035057806478542, 0.1690047266392679, 0.14065325971552592,
    0.10479001032225018, 0.06309209262997855, 0.022935322010529224,
)
_WG = (
    0.12948496616886969, 0.2797053914892767, 0.3818300505051189,
    0.41795918367346935, 0.3818300505051189, 0.2797053914892767,
    0.12948496616886969,
)
_GAUSS_IDX = (1, 3, 5, 7, 9, 11, 13)


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    evaluations: int


def _env_budget(default: int) -> int:
    raw = os.environ.get("ELLINT_MAX_EVALS")
    if raw is None:
        return default
    try:
        val = int(raw)
    except ValueError:
        raise DomainError(f"ELLINT_MAX_EVALS must be an integer, got {raw!r}")
    if val <= 0:
        raise DomainError("ELLINT_MAX_EVALS must be positive")
    return val


def _panel(f, a: float, b: float):
    """One GK15 pass over [a, b]: (kronrod value, error estimate)."""
    center = 0.5 * (a + b)
    h = 0.5 * (b - a)
    fv = [f(center + h * x) for x in _XK]
    resk = 0.0
    resabs = 0.0
    for w, v in zip(_WK, fv):
        resk += w * v
        resabs += w * abs(v)
    resg = 0.0
    for w, i in zip(_WG, _GAUSS_IDX):
        resg += w * fv[i]
    reskh = 0.5 * resk
    resasc = 0.0
    for w, v in zip(_WK, fv):
        resasc += w * abs(v - reskh)
    value = resk * h
    resabs *= abs(h)
    resasc *= abs(h)
    err = abs((resk - resg) * h)
    if resasc != 0.0 and err != 0.0:
        err = resasc * min(1.0, (200.0 * err / resasc) ** 1.5)
    if resabs > 2.2250738585072014e-305:
        err = max(_EPS * 50.0 * resabs, err)
    if not (math.isfinite(value) and math.isfinite(err)):
        raise NonFiniteIntegrandError(
            f"integrand returned a non-finite value on [{a!r}, {b!r}]")
    return value, err


def integrate(f, lo: float, hi: float, tol: float = 1e-10,
              max_evals: int | None = None) -> QuadratureResult:
    """Adaptive integral of f over (lo, hi).

    Runs until the error estimate drops below max(tol * |value|,
    1e-15 * (hi - lo)).  Deterministic: identical inputs always produce
    bit-identical results.  Raises NonConvergenceError once the budget
    (max_evals, default 1e6 or ELLINT_MAX_EVALS) would be exceeded.
    """
    if not (math.isfinite(lo) and math.isfinite(hi)) or not lo < hi:
        raise DomainError(f"need finite lo < hi, got [{lo!r}, {hi!r}]")
    if not (tol > 0.0):
        raise DomainError("tol must be positive")
    budget = _env_budget(DEFAULT_MAX_EVALS_1D) if max_evals is None else max_evals
    abs_target = _ABS_FLOOR * (hi - lo)

    value, err = _panel(f, lo, hi)
    evals = 15
    total_val = value
    total_err = err
    heap = [(-err, 0, lo, hi, value)]
    seq = 1
    while total_err > max(tol * abs(total_val), abs_target):
        if evals + 30 > budget:
            raise NonConvergenceError(
                f"quadrature budget of {budget} evaluations exhausted on "
                f"[{lo!r}, {hi!r}] with error estimate {total_err:.3e}")
        neg_err, _, a, b, v = heapq.heappop(heap)
        mid = 0.5 * (a + b)
        if mid <= a or mid >= b:
            raise NonConvergenceError(
                f"interval [{a!r}, {b!r}] below float resolution with "
                f"tolerance unmet (error estimate {total_err:.3e})")
        v1, e1 = _panel(f, a, mid)
        v2, e2 = _panel(f, mid, b)
        evals += 30
        total_val += (v1 + v2) - v
        total_err += (e1 + e2) - (-neg_err)
        heapq.heappush(heap, (-e1, seq, a, mid, v1))
        heapq.heappush(heap, (-e2, seq + 1, mid, b, v2))
        seq += 2
    value = math.fsum(entry[4] for entry in heap)
    err = math.fsum(-entry[0] for entry in heap)
    return QuadratureResult(value, err, evals)


def integrate_singular_pair(g, lo: float, hi: float, tol: float = 1e-10,
                            max_evals: int | None = None) -> QuadratureResult:
    """Integral of g(q)/sqrt((hi^2 - q^2)(q^2 - lo^2)) over (lo, hi).

    Requires 0 <= lo < hi.  The substitution q^2 = lo^2 + (hi^2 - lo^2)
    sin^2 t turns this into the bounded integral of g(q(t))/q(t) over
    (0, pi/2), which is what actually gets sampled; the endpoints are
    never evaluated.
    """
    if not (0.0 <= lo < hi) or not math.isfinite(hi):
        raise DomainError(f"need 0 <= lo < hi, got lo={lo!r}, hi={hi!r}")
    lo2 = lo * lo
    span = (hi - lo) * (hi + lo)

    def transformed(t: float) -> float:
        q = math.sqrt(lo2 + span * math.sin(t) ** 2)
        return g(q) / q

    return integrate(transformed, 0.0, HALF_PI, tol, max_evals)


def surface_area_quadrature(a: float, b: float, c: float, tol: float = 1e-7,
                            max_evals: int | None = None) -> QuadratureResult:
    """Ellipsoid surface area by direct 2D quadrature over one octant.

    Integrates 8 * sin(theta) * sqrt(b^2 c^2 sin^2 theta cos^2 phi
    + a^2 c^2 sin^2 theta sin^2 phi + a^2 b^2 cos^2 theta) over
    (0, pi/2)^2.  The integrand is symmetric in the axes, so the result is
    invariant under any permutation of (a, b, c) by construction.  tol is
    relative; the default budget is 1e7 integrand evaluations.
    """
    for name, v in (("a", a), ("b", b), ("c", c)):
        if not (v > 0.0) or not math.isfinite(v):
            raise DomainError(f"semi-axis {name}={v!r} must be positive and finite")
    budget = _env_budget(DEFAULT_MAX_EVALS_2D) if max_evals is None else max_evals
    b2c2 = (b * c) ** 2
    a2c2 = (a * c) ** 2
    a2b2 = (a * b) ** 2
    inner_tol = tol / 50.0
    used = [0]

    def inner(phi: float) -> float:
        cp2 = math.cos(phi) ** 2
        sp2 = math.sin(phi) ** 2

        def f(theta: float) -> float:
            st = math.sin(theta)
            ct = math.cos(theta)
            return st * math.sqrt(st * st * (b2c2 * cp2 + a2c2 * sp2) + a2b2 * ct * ct)

        remaining = budget - used[0]
        if remaining < 15:
            raise NonConvergenceError(
                f"2D quadrature budget of {budget} evaluations exhausted")
        res = integrate(f, 0.0, HALF_PI, inner_tol, max_evals=remaining)
        used[0] += res.evaluations
        return res.value

    outer = integrate(inner, 0.0, HALF_PI, tol / 2.0, max_evals=budget)
    value = 8.0 * outer.value
    err = 8.0 * outer.error_estimate + inner_tol * abs(value)
    return QuadratureResult(value, err, used[0])
