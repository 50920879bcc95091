"""Legendre-form elliptic integrals via Carlson symmetric forms.

Incomplete integrals take an amplitude phi in [0, pi/2] and a modulus k in
[0, 1].  Everything reduces to the Carlson functions R_F and R_D, evaluated
by the duplication algorithm: the argument triple is contracted toward its
mean until a fifth-order Taylor tail suffices.  This keeps full double
precision uniformly in k, including the k -> 1 boundary, without the
cancellation that plagues the (F - E)/k^2 route for D at small k.
"""

import math

from .errors import DivergenceError, DomainError

HALF_PI = math.pi / 2.0

# Duplication runs until 4^-m * Q < |A_m|; these prefactors put the Taylor
# tail error below 1 ulp (Q scales the initial spread of the arguments).
_RF_PREF = (3.0 * 1e-16) ** (-1.0 / 6.0)
_RD_PREF = (0.25 * 1e-16) ** (-1.0 / 6.0)


def carlson_rf(x: float, y: float, z: float) -> float:
    """Carlson R_F(x, y, z); at most one argument may be zero."""
    if min(x, y, z) < 0.0 or (x + y) == 0.0 or (y + z) == 0.0 or (x + z) == 0.0:
        raise DomainError("carlson_rf needs nonnegative args, at most one zero")
    a = (x + y + z) / 3.0
    q = _RF_PREF * max(abs(a - x), abs(a - y), abs(a - z))
    x0, y0, a0 = x, y, a
    scale = 1.0
    while scale * q >= abs(a):
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
        lam = sx * (sy + sz) + sy * sz
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        z = 0.25 * (z + lam)
        a = 0.25 * (a + lam)
        scale *= 0.25
    dx = scale * (a0 - x0) / a
    dy = scale * (a0 - y0) / a
    dz = -dx - dy
    e2 = dx * dy - dz * dz
    e3 = dx * dy * dz
    return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) / math.sqrt(a)


def carlson_rd(x: float, y: float, z: float) -> float:
    """Carlson R_D(x, y, z) = R_J(x, y, z, z); z must be positive."""
    if min(x, y) < 0.0 or z <= 0.0 or (x + y) == 0.0:
        raise DomainError("carlson_rd needs x, y >= 0 (not both zero) and z > 0")
    a = (x + y + 3.0 * z) / 5.0
    q = _RD_PREF * max(abs(a - x), abs(a - y), abs(a - z))
    x0, y0, a0 = x, y, a
    scale = 1.0
    tail = 0.0
    while scale * q >= abs(a):
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
        lam = sx * (sy + sz) + sy * sz
        tail += scale / (sz * (z + lam))
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        z = 0.25 * (z + lam)
        a = 0.25 * (a + lam)
        scale *= 0.25
    dx = scale * (a0 - x0) / a
    dy = scale * (a0 - y0) / a
    dz = -(dx + dy) / 3.0
    e2 = dx * dy - 6.0 * dz * dz
    e3 = (3.0 * dx * dy - 8.0 * dz * dz) * dz
    e4 = 3.0 * (dx * dy - dz * dz) * dz * dz
    e5 = dx * dy * dz * dz * dz
    series = (1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0
              - 3.0 * e4 / 22.0 - 9.0 * e2 * e3 / 52.0 + 3.0 * e5 / 26.0)
    return scale * series / (a * math.sqrt(a)) + 3.0 * tail


def _check_amplitude(phi: float) -> None:
    if not (0.0 <= phi <= HALF_PI) or math.isnan(phi):
        raise DomainError(f"amplitude {phi!r} outside [0, pi/2]")


def _check_modulus(k: float) -> None:
    if not (0.0 <= k <= 1.0) or math.isnan(k):
        raise DomainError(f"modulus {k!r} outside [0, 1]")


def incomplete_f(phi: float, k: float) -> float:
    """F(phi, k) = integral of 1/sqrt(1 - k^2 sin^2 t) over (0, phi).

    Diverges at (pi/2, 1); that corner raises DivergenceError.
    """
    _check_amplitude(phi)
    _check_modulus(k)
    if k == 1.0 and phi == HALF_PI:
        raise DivergenceError("F(pi/2, 1) diverges")
    if phi == 0.0:
        return 0.0
    s = math.sin(phi)
    c2 = math.cos(phi) ** 2
    y = max(1.0 - (k * s) ** 2, 0.0)
    return s * carlson_rf(c2, y, 1.0)


def incomplete_e(phi: float, k: float) -> float:
    """E(phi, k) = integral of sqrt(1 - k^2 sin^2 t) over (0, phi)."""
    _check_amplitude(phi)
    _check_modulus(k)
    if phi == 0.0:
        return 0.0
    if k == 1.0 and phi == HALF_PI:
        return 1.0
    s = math.sin(phi)
    c2 = math.cos(phi) ** 2
    y = max(1.0 - (k * s) ** 2, 0.0)
    s3 = s * s * s
    return s * carlson_rf(c2, y, 1.0) - (k * k) * s3 * carlson_rd(c2, y, 1.0) / 3.0


def incomplete_d(phi: float, k: float) -> float:
    """D(phi, k) = (F - E)/k^2 = integral of sin^2 t/sqrt(1 - k^2 sin^2 t).

    Evaluated through R_D, which is uniformly stable: at k = 0 it returns
    the analytic limit (phi - sin phi cos phi)/2 with no cancellation.
    """
    _check_amplitude(phi)
    _check_modulus(k)
    if k == 1.0 and phi == HALF_PI:
        raise DivergenceError("D(pi/2, 1) diverges")
    if phi == 0.0:
        return 0.0
    s = math.sin(phi)
    c2 = math.cos(phi) ** 2
    y = max(1.0 - (k * s) ** 2, 0.0)
    return s * s * s * carlson_rd(c2, y, 1.0) / 3.0


def complete_k(k: float) -> float:
    """K(k), complete integral of the first kind; k = 1 diverges."""
    _check_modulus(k)
    if k == 1.0:
        raise DivergenceError("K(1) diverges")
    return carlson_rf(0.0, 1.0 - k * k, 1.0)


def complete_e(k: float) -> float:
    """E(k), complete integral of the second kind; E(1) = 1 exactly."""
    _check_modulus(k)
    if k == 1.0:
        return 1.0
    y = 1.0 - k * k
    return carlson_rf(0.0, y, 1.0) - (k * k) * carlson_rd(0.0, y, 1.0) / 3.0


def complete_d(k: float) -> float:
    """D(k) = (K - E)/k^2, stable down to k = 0 where it equals pi/4."""
    _check_modulus(k)
    if k == 1.0:
        raise DivergenceError("D(1) diverges")
    return carlson_rd(0.0, 1.0 - k * k, 1.0) / 3.0


def complementary_amplitude(phi1: float, kprime: float, upper_branch: bool = False) -> float:
    """Conjugate amplitude phi2 for modulus kprime.

    Principal branch (default): cos phi2 = sin phi1 * sqrt((1 - kprime^2
    sin^2 phi1)(1 - kprime^2)) / (1 - kprime^2 sin^2 phi1), phi2 in
    [0, pi/2].  On this branch F(phi1) + F(phi2) = K and E(phi1) + E(phi2)
    = E + kprime^2 sin phi1 sin phi2 (all at modulus kprime).  The
    upper branch reflects to pi - phi2.
    """
    _check_amplitude(phi1)
    if not (0.0 < kprime < 1.0):
        raise DomainError("complementary_amplitude needs 0 < kprime < 1")
    s1 = math.sin(phi1)
    denom = 1.0 - (kprime * s1) ** 2
    arg = s1 * math.sqrt(denom * (1.0 - kprime * kprime)) / denom
    phi2 = math.acos(min(1.0, max(-1.0, arg)))
    if upper_branch:
        return math.pi - phi2
    return phi2


def conjugate_delta(theta: float, k: float) -> float:
    """delta with cot(delta) = k' tan(theta), so F(theta,k) + F(delta,k) = K(k)."""
    if not (0.0 < theta < HALF_PI):
        raise DomainError("conjugate_delta needs 0 < theta < pi/2")
    if not (0.0 < k < 1.0):
        raise DomainError("conjugate_delta needs 0 < k < 1")
    kp = math.sqrt(1.0 - k * k)
    return math.atan2(math.cos(theta), kp * math.sin(theta))


def imaginary_modulus_reduce(phi: float, k: float) -> tuple:
    """Real-parameter reduction of the pair (F, E) at imaginary modulus i*k.

    Returns (f, e) with
      f = integral of 1/sqrt(1 + k^2 sin^2 t) over (0, phi)
      e = integral of   sqrt(1 + k^2 sin^2 t) over (0, phi)
    expressed through F and E at modulus k1 = k/sqrt(1 + k^2).
    """
    _check_amplitude(phi)
    if k < 0.0 or math.isnan(k):
        raise DomainError("imaginary_modulus_reduce needs k >= 0")
    if k == 0.0 or phi == 0.0:
        return (phi, phi)
    root = math.sqrt(1.0 + k * k)
    k1 = k / root
    k1p = 1.0 / root
    s = math.sin(phi)
    beta = math.asin(min(1.0, root * s / math.sqrt(1.0 + (k * s) ** 2)))
    sb = math.sin(beta)
    cb = math.cos(beta)
    dn = math.sqrt(1.0 - (k1 * sb) ** 2)
    f = k1p * incomplete_f(beta, k1)
    e = (incomplete_e(beta, k1) - k1 * k1 * sb * cb / dn) / k1p
    return (f, e)


def imaginary_argument_reduce(phi_hyp: float, k: float) -> tuple:
    """Real-parameter reduction of (F, E) along the imaginary argument axis.

    Returns (f, e) with
      f = integral of 1/sqrt(1 + k^2 sinh^2 t) over (0, phi_hyp)
      e = integral of   sqrt(1 + k^2 sinh^2 t) over (0, phi_hyp)
    expressed through F and E at the complementary modulus k' and the
    gudermannian amplitude delta = arctan(sinh phi_hyp).
    """
    if phi_hyp < 0.0 or math.isnan(phi_hyp):
        raise DomainError("imaginary_argument_reduce needs phi_hyp >= 0")
    if not (0.0 < k < 1.0):
        raise DomainError("imaginary_argument_reduce needs 0 < k < 1")
    if phi_hyp == 0.0:
        return (0.0, 0.0)
    kp = math.sqrt(1.0 - k * k)
    delta = math.atan(math.sinh(phi_hyp))
    sd = math.sin(delta)
    f = incomplete_f(delta, kp)
    e = f - incomplete_e(delta, kp) + math.tan(delta) * math.sqrt(1.0 - (kp * sd) ** 2)
    return (f, e)
