"""Series representations of the paired-kernel log integrals.

Two families of odd-index coefficients are generated by three-term
recurrences in (e1, e2) with 0 < e2 < e1 < 1:

  A:     sigma1 = pi * sum A_{2m+1}        (the plain log-kernel integral)
  Omega: sigma2 = pi * (sum Omega_{2m+1} - 1)   (the q^2-weighted one)

Omega additionally splits termwise into Theta + Psi, where Theta collects
the Cauchy product of the two binomial square-root series and Psi is the
remainder; Psi_1 = Psi_3 = 0.  Sums use compensated (Kahan) accumulation
and a two-sided termination test on the next term.
"""

import math
from dataclasses import dataclass

from .errors import DomainError, NonConvergenceError

MAX_TERMS_DEFAULT = 100_000
_ABS_TAIL = 1e-18


@dataclass(frozen=True)
class SeriesCoefficients:
    kind: str  # "A" | "OMEGA" | "THETA" | "PSI"
    e1: float
    e2: float
    terms: tuple  # terms[m] is the coefficient of index 2m+1


@dataclass(frozen=True)
class SeriesSum:
    value: float
    terms_used: int
    truncation_estimate: float


def _check_pair(e1: float, e2: float) -> None:
    if not (0.0 < e2 < e1 < 1.0):
        raise DomainError(f"need 0 < e2 < e1 < 1, got e1={e1!r}, e2={e2!r}")


def _check_m_max(m_max: int) -> None:
    if not isinstance(m_max, int) or m_max < 0:
        raise DomainError(f"m_max must be a nonnegative integer, got {m_max!r}")


def _a_next(s: float, p: float, n: int, a3: float, a1: float) -> float:
    # s = e1^2 + e2^2, p = e1^2 e2^2; returns A_{2n+5} from A_{2n+3}, A_{2n+1}
    return ((s * (2 * n + 3) ** 2 * a3 - 2.0 * p * (n + 1) * (2 * n + 1) * a1)
            / (2.0 * (n + 2) * (2 * n + 5)))


def _omega_next(s: float, p: float, n: int, w3: float, w1: float) -> float:
    # |2n-1| is taken literally: the n = 0 step uses +1, which is what
    # reproduces the closed form of the fifth coefficient
    return ((s * (2 * n + 1) * (2 * n + 3) * w3 - 2.0 * p * (n + 1) * abs(2 * n - 1) * w1)
            / (2.0 * (n + 2) * (2 * n + 3)))


def a_coefficients(e1: float, e2: float, m_max: int) -> SeriesCoefficients:
    """A_1 .. A_{2 m_max + 1}; A_1 = 1, A_3 = (e1^2 + e2^2)/6."""
    _check_pair(e1, e2)
    _check_m_max(m_max)
    s = e1 * e1 + e2 * e2
    p = (e1 * e2) ** 2
    terms = [1.0]
    if m_max >= 1:
        terms.append(s / 6.0)
    for n in range(0, m_max - 1):
        terms.append(_a_next(s, p, n, terms[n + 1], terms[n]))
    return SeriesCoefficients("A", e1, e2, tuple(terms))


def omega_coefficients(e1: float, e2: float, m_max: int) -> SeriesCoefficients:
    """Omega_1 .. Omega_{2 m_max + 1}; Omega_1 = 1, Omega_3 = (e1^2 + e2^2)/2."""
    _check_pair(e1, e2)
    _check_m_max(m_max)
    s = e1 * e1 + e2 * e2
    p = (e1 * e2) ** 2
    terms = [1.0]
    if m_max >= 1:
        terms.append(s / 2.0)
    for n in range(0, m_max - 1):
        terms.append(_omega_next(s, p, n, terms[n + 1], terms[n]))
    return SeriesCoefficients("OMEGA", e1, e2, tuple(terms))


def theta_terms(e1: float, e2: float, m_max: int) -> SeriesCoefficients:
    """Cauchy-product terms of 1 - sqrt(1-e1^2) sqrt(1-e2^2); Theta_1 = 0."""
    _check_pair(e1, e2)
    _check_m_max(m_max)
    # binomial coefficients of sqrt(1-x): b_0 = 1, b_i = b_{i-1} (i - 3/2)/i
    b = [1.0]
    for i in range(1, m_max + 1):
        b.append(b[i - 1] * (i - 1.5) / i)
    e1sq = e1 * e1
    e2sq = e2 * e2
    terms = [0.0]
    for m in range(1, m_max + 1):
        acc = 0.0
        for i in range(m + 1):
            acc += b[i] * b[m - i] * e1sq ** i * e2sq ** (m - i)
        terms.append(-acc)
    return SeriesCoefficients("THETA", e1, e2, tuple(terms))


def psi_terms(e1: float, e2: float, m_max: int) -> SeriesCoefficients:
    """Psi = Omega - Theta termwise; Psi_1 = Psi_3 = 0, first nonzero at m = 2."""
    om = omega_coefficients(e1, e2, m_max)
    th = theta_terms(e1, e2, m_max)
    terms = [0.0]
    terms.extend(om.terms[m] - th.terms[m] for m in range(1, m_max + 1))
    return SeriesCoefficients("PSI", e1, e2, tuple(terms))


def _sum_recurrence(e1: float, e2: float, tol: float, max_terms: int, next_fn,
                    second: float, include_first: bool):
    """Kahan-compensated sum of a three-term recurrence family.

    include_first controls whether the leading coefficient (always exactly
    1) enters the total; the q^2-weighted sum wants the tail only, and
    summing the tail directly keeps it relatively accurate at tiny
    eccentricities.  Stops before adding a term that is below tol relative
    to the partial sum AND below 1e-18 in absolute value; raises
    NonConvergenceError at max_terms.  Returns (sum, terms_used,
    last_added, first_omitted).
    """
    _check_pair(e1, e2)
    if not (tol > 0.0):
        raise DomainError("tol must be positive")
    if max_terms < 2:
        raise DomainError("max_terms must be at least 2")
    s = e1 * e1 + e2 * e2
    p = (e1 * e2) ** 2
    total = 1.0 if include_first else 0.0
    comp = 0.0
    prev, cur = 1.0, second
    n = 0  # cur = X_{2n+3}
    used = 1
    while True:
        if abs(cur) < tol * abs(total) and abs(cur) < _ABS_TAIL:
            return total, used, prev, cur
        if used >= max_terms:
            raise NonConvergenceError(
                f"series did not converge within {max_terms} terms "
                f"(e1={e1!r}, e2={e2!r}, last term {cur:.3e})")
        y = cur - comp
        t = total + y
        comp = (t - total) - y
        total = t
        used += 1
        prev, cur = cur, next_fn(s, p, n, cur, prev)
        n += 1


def _truncation(e1: float, last: float, omitted: float) -> float:
    # geometric tail bound: successive terms approach a ratio of e1^2
    return max(abs(last), abs(omitted) / (1.0 - e1 * e1))


def sigma1_sum(e1: float, e2: float, tol: float = 1e-15,
               max_terms: int = MAX_TERMS_DEFAULT) -> SeriesSum:
    """sigma1 = pi * sum A_{2m+1}; equals (pi/e1) F(arcsin e1, e2/e1)."""
    total, used, last, omitted = _sum_recurrence(
        e1, e2, tol, max_terms, _a_next, (e1 * e1 + e2 * e2) / 6.0, True)
    return SeriesSum(math.pi * total, used, math.pi * _truncation(e1, last, omitted))


def sigma2_sum(e1: float, e2: float, tol: float = 1e-15,
               max_terms: int = MAX_TERMS_DEFAULT) -> SeriesSum:
    """sigma2 = pi * (sum Omega_{2m+1} - 1), summed without the leading 1.

    Equals pi [1 - sqrt((1-e1^2)(1-e2^2))] + pi e1 [F - E](arcsin e1, e2/e1).
    """
    total, used, last, omitted = _sum_recurrence(
        e1, e2, tol, max_terms, _omega_next, (e1 * e1 + e2 * e2) / 2.0, False)
    return SeriesSum(math.pi * total, used,
                     math.pi * _truncation(e1, last, omitted))


def f_maclaurin_derivative(m: int, e1: float, e2: float) -> float:
    """Odd Maclaurin derivative of x -> F(arcsin x, e2/e1) at x = 0.

    Equals (2m+1)! A_{2m+1} / e1^(2m), computed as an interleaved scaled
    product so the factorial never materializes on its own.
    """
    _check_m_max(m)
    coeffs = a_coefficients(e1, e2, m)
    res = coeffs.terms[m]
    divisions = 2 * m
    for i in range(1, 2 * m + 2):
        res *= i
        if divisions > 0:
            res /= e1
            divisions -= 1
    if not math.isfinite(res):
        raise OverflowError(f"derivative order {2 * m + 1} overflows at e1={e1!r}")
    return res
