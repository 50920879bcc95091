"""Verification sweeps: every closed form against an independent oracle.

Four suites, each producing uniform records (id, params, closed, oracle,
abs_err, rel_err, pass):

  geometry    dispatch surface area vs 2D quadrature, permutation and
              scaling invariance, spheroid-limit continuity, and four
              independent single-integral routes to the same area
  integrals   the full identity registry, closed form vs adaptive
              quadrature of the defining integrand on parameter grids
  series      sigma sums vs their elliptic-integral references, the
              low-order coefficient closed forms, the termwise split
              Omega = Theta + Psi, and the Maclaurin derivatives vs
              finite differences
  extensions  cos^2 <-> sin^2 kernel conversions and the imaginary
              modulus / argument reductions vs direct quadrature

The identity sweep honours the caller's tolerance; the invariant suites
carry intrinsic tolerances listed in the module constants below.  All
sampling is seeded, so repeated runs produce identical reports.
"""

import csv
import io
import json
import math
import random
from dataclasses import dataclass
from datetime import datetime, timezone
from itertools import permutations

from ._version import __version__
from .elliptic import (HALF_PI, imaginary_argument_reduce,
                       imaginary_modulus_reduce, incomplete_d, incomplete_f)
from .errors import DomainError
from .geometry import (barred_params, eccentricities, oblate_area,
                       prolate_area, surface_area, triaxial_area)
from .identities import (REGISTRY, AlphaKBar, EpsAB, FBar, IdentityId,
                         PsiKBar, VerificationRecord, XiKBar,
                         alpha_k_from_eccentricities, alpha_kbar_from_barred,
                         atan_e_closed, atan_f_closed, check,
                         gr_e_sin_closed, gr_f_sin_closed, grid_params,
                         i1_barred_closed, i1_closed, i2_barred_closed,
                         i3_barred_closed, log_f_closed, log_q2_closed,
                         make_record)
from .quadrature import integrate, surface_area_quadrature
from .series import (f_maclaurin_derivative, omega_coefficients, psi_terms,
                     sigma1_sum, sigma2_sum, theta_terms)

SUITES = ("geometry", "integrals", "series", "extensions")

# intrinsic tolerances of the invariant suites
AREA_QUAD_TOL = 1e-7        # closed area vs 2D quadrature
AREA_ORACLE_TOL = 1e-9      # relative tolerance handed to the 2D oracle
PERMUTATION_TOL = 1e-12
SCALING_TOL = 1e-12
LIMIT_TOL = 1e-5            # triaxial form at axis gap 1e-6 vs spheroid form
LIMIT_GAP = 1e-6
ROUTE_TOL = 1e-10
SERIES_SUM_TOL = 1e-12
SERIES_COEFF_TOL = 1e-14
MACLAURIN_TOL = 1e-4
KERNEL_TOL = 1e-11
IMAG_TOL = 1e-10

_AXES_SEED = 1009
_ROUTE_SEED = 2003
_KERNEL_SEED = 97
_AXIS_LO, _AXIS_HI = 0.1, 10.0
_MIN_GAP = 1e-2             # relative gap enforced for strict orderings


# ---------------------------------------------------------------------------
# axis sampling


def random_axes(n: int, seed: int = _AXES_SEED) -> list:
    """n reproducible triples, each coordinate uniform on [0.1, 10]."""
    rng = random.Random(seed)
    return [(rng.uniform(_AXIS_LO, _AXIS_HI), rng.uniform(_AXIS_LO, _AXIS_HI),
             rng.uniform(_AXIS_LO, _AXIS_HI)) for _ in range(n)]


def _strict_sorted(rng: random.Random, descending: bool) -> tuple:
    # resample until adjacent axes differ by at least _MIN_GAP relative,
    # keeping every route parameter safely inside its open domain
    while True:
        t = sorted((rng.uniform(_AXIS_LO, _AXIS_HI) for _ in range(3)),
                   reverse=descending)
        hi0 = max(t[0], t[1])
        hi1 = max(t[1], t[2])
        if (abs(t[0] - t[1]) / hi0 >= _MIN_GAP
                and abs(t[1] - t[2]) / hi1 >= _MIN_GAP):
            return tuple(t)


# ---------------------------------------------------------------------------
# four single-integral routes to the surface area


def area_via_weighted_e_integral(a: float, b: float, c: float) -> float:
    """Descending axes: prefactor times the weighted-E(u) kernel integral."""
    e = eccentricities(a, b, c)
    p = alpha_k_from_eccentricities(e.e1, e.e2)
    kp2 = 1.0 - p.k * p.k
    pref = 8.0 * a * b * kp2 * (kp2 + (p.k * p.alpha) ** 2) / p.alpha
    return pref * i1_closed(p)


def area_via_log_kernel(a: float, b: float, c: float) -> float:
    """Descending axes: 2 pi a b plus the difference of two log-kernel
    integrals taken between the eccentricities with unit log argument."""
    e = eccentricities(a, b, c)
    p = EpsAB(1.0, e.e2, e.e1)
    return 2.0 * math.pi * a * b + 2.0 * a * b * (log_f_closed(p) - log_q2_closed(p))


def area_via_barred_weighted_e(a: float, b: float, c: float) -> float:
    """Ascending axes: prefactor times the barred weighted-E(u) integral."""
    f = barred_params(a, b, c)
    p = alpha_kbar_from_barred(f.f1, f.f2)
    pref = 8.0 * a * b * p.alpha * p.kbar * p.kbar / (f.f1 * f.f1)
    return pref * i1_barred_closed(p)


def area_via_arctan_kernel(a: float, b: float, c: float) -> float:
    """Ascending axes: 2 pi a b plus four a b times the two arctan-kernel
    integrals between the barred parameters."""
    f = barred_params(a, b, c)
    p = FBar(f.f1, f.f2)
    return 2.0 * math.pi * a * b + 4.0 * a * b * (atan_f_closed(p) + atan_e_closed(p))


# ---------------------------------------------------------------------------
# geometry suite


def area_quadrature_records(n: int, pass_tol: float = AREA_QUAD_TOL,
                            oracle_tol: float = AREA_ORACLE_TOL,
                            max_evals: int | None = None,
                            seed: int = _AXES_SEED) -> list:
    out = []
    for a, b, c in random_axes(n, seed):
        closed = surface_area(a, b, c)
        oracle = surface_area_quadrature(a, b, c, oracle_tol, max_evals)
        out.append(make_record("AREA_VS_QUADRATURE", {"a": a, "b": b, "c": c},
                               closed, oracle.value, pass_tol))
    return out


def permutation_records(n: int, tol: float = PERMUTATION_TOL,
                        seed: int = _AXES_SEED) -> list:
    out = []
    for axes in random_axes(n, seed):
        ref = surface_area(*sorted(axes, reverse=True))
        for p in permutations(axes):
            out.append(make_record("AREA_PERMUTATION",
                                   {"a": p[0], "b": p[1], "c": p[2]},
                                   surface_area(*p), ref, tol))
    return out


_SCALE_CYCLE = (0.5, 2.0, 10.0, 0.1)


def scaling_records(n: int, tol: float = SCALING_TOL,
                    seed: int = _AXES_SEED) -> list:
    out = []
    for i, (a, b, c) in enumerate(random_axes(n, seed)):
        lam = _SCALE_CYCLE[i % len(_SCALE_CYCLE)]
        scaled = surface_area(lam * a, lam * b, lam * c) / (lam * lam)
        out.append(make_record("AREA_SCALING",
                               {"a": a, "b": b, "c": c, "lam": lam},
                               scaled, surface_area(a, b, c), tol))
    return out


_LIMIT_RATIOS = (0.3, 0.6, 0.9)


def spheroid_limit_records(gap: float = LIMIT_GAP,
                           tol: float = LIMIT_TOL) -> list:
    out = []
    for ratio in _LIMIT_RATIOS:
        a = 1.0 + gap
        closed = triaxial_area(a, 1.0, ratio)
        oracle = oblate_area(0.5 * (a + 1.0), ratio)
        out.append(make_record("LIMIT_OBLATE", {"a": a, "b": 1.0, "c": ratio},
                               closed, oracle, tol))
    for ratio in _LIMIT_RATIOS:
        b = ratio * (1.0 + gap)
        closed = triaxial_area(1.0, b, ratio)
        oracle = prolate_area(1.0, 0.5 * (b + ratio))
        out.append(make_record("LIMIT_PROLATE", {"a": 1.0, "b": b, "c": ratio},
                               closed, oracle, tol))
    return out


_ROUTES = (
    ("ROUTE_WEIGHTED_E", area_via_weighted_e_integral, True),
    ("ROUTE_LOG_KERNEL", area_via_log_kernel, True),
    ("ROUTE_BARRED_WEIGHTED_E", area_via_barred_weighted_e, False),
    ("ROUTE_ARCTAN_KERNEL", area_via_arctan_kernel, False),
)


def route_records(n: int, tol: float = ROUTE_TOL,
                  seed: int = _ROUTE_SEED) -> list:
    """Each single-integral route vs the dispatch area, n triples per route."""
    rng = random.Random(seed)
    out = []
    for ident, fn, descending in _ROUTES:
        for _ in range(n):
            a, b, c = _strict_sorted(rng, descending)
            out.append(make_record(ident, {"a": a, "b": b, "c": c},
                                   fn(a, b, c), surface_area(a, b, c), tol))
    return out


def geometry_records(grid: int, max_evals: int | None = None) -> list:
    out = area_quadrature_records(grid, max_evals=max_evals)
    out += permutation_records(grid)
    out += scaling_records(grid)
    out += spheroid_limit_records()
    out += route_records(grid)
    return out


# ---------------------------------------------------------------------------
# integrals suite


def identity_records(grid: int, tol: float = 1e-8,
                     oracle_tol: float = 1e-10,
                     max_evals: int | None = None,
                     idents=None) -> list:
    """Closed form vs quadrature for every registry identity (or a subset)."""
    out = []
    for ident in (REGISTRY if idents is None else idents):
        for params in grid_params(ident, grid):
            out.append(check(ident, params, tol, oracle_tol, max_evals))
    return out


# ---------------------------------------------------------------------------
# series suite


def _sigma_grid(grid: int) -> list:
    pairs = []
    for i in range(grid):
        e1 = 0.9 * (i + 1) / grid
        for j in range(grid):
            pairs.append((e1, e1 * (j + 0.5) / grid))
    return pairs


def sigma1_reference(e1: float, e2: float) -> float:
    """(pi/e1) F(arcsin e1, e2/e1), the closed value of the first sigma sum."""
    return math.pi / e1 * incomplete_f(math.asin(e1), e2 / e1)


def sigma2_reference(e1: float, e2: float) -> float:
    """pi [1 - sqrt((1-e1^2)(1-e2^2))] + pi e1 [F - E](arcsin e1, e2/e1).

    The bracketed difference of square roots is evaluated as an exact
    quotient and F - E as k^2 D, so the reference keeps full relative
    accuracy down to tiny eccentricities.
    """
    k = e2 / e1
    root = math.sqrt((1.0 - e1 * e1) * (1.0 - e2 * e2))
    head = (e1 * e1 + e2 * e2 - (e1 * e2) ** 2) / (1.0 + root)
    return math.pi * head + math.pi * e1 * k * k * incomplete_d(math.asin(e1), k)


def sigma_records(grid: int, tol: float = SERIES_SUM_TOL) -> list:
    out = []
    for e1, e2 in _sigma_grid(grid):
        out.append(make_record("SIGMA1_SUM", {"e1": e1, "e2": e2},
                               sigma1_sum(e1, e2).value,
                               sigma1_reference(e1, e2), tol))
        out.append(make_record("SIGMA2_SUM", {"e1": e1, "e2": e2},
                               sigma2_sum(e1, e2).value,
                               sigma2_reference(e1, e2), tol))
    return out


def _omega5(e1, e2):
    return (3 * e1 ** 4 + 2 * e1 ** 2 * e2 ** 2 + 3 * e2 ** 4) / 24.0


def _omega7(e1, e2):
    return (5 * e1 ** 6 + 3 * e1 ** 4 * e2 ** 2
            + 3 * e1 ** 2 * e2 ** 4 + 5 * e2 ** 6) / 80.0


def _theta3(e1, e2):
    return (e1 * e1 + e2 * e2) / 2.0


def _theta5(e1, e2):
    return (e1 ** 4 - 2 * e1 ** 2 * e2 ** 2 + e2 ** 4) / 8.0


def _theta7(e1, e2):
    return (e1 ** 6 - e1 ** 4 * e2 ** 2 - e1 ** 2 * e2 ** 4 + e2 ** 6) / 16.0


def _psi5(e1, e2):
    return e1 * e1 * e2 * e2 / 3.0


def _psi7(e1, e2):
    return (e1 ** 4 * e2 ** 2 + e1 ** 2 * e2 ** 4) / 10.0


_COEFF_CHECKS = (
    ("COEFF_OMEGA_5", "omega", 2, _omega5),
    ("COEFF_OMEGA_7", "omega", 3, _omega7),
    ("COEFF_THETA_3", "theta", 1, _theta3),
    ("COEFF_THETA_5", "theta", 2, _theta5),
    ("COEFF_THETA_7", "theta", 3, _theta7),
    ("COEFF_PSI_5", "psi", 2, _psi5),
    ("COEFF_PSI_7", "psi", 3, _psi7),
)


def coefficient_records(grid: int, tol: float = SERIES_COEFF_TOL) -> list:
    """Recurrence / Cauchy-product coefficients vs their closed forms, plus
    the termwise identity Omega = Theta + Psi through m = 5."""
    pairs = _sigma_grid(max(2, min(grid, 4)))  # a handful of pairs suffices
    gens = {"omega": omega_coefficients, "theta": theta_terms, "psi": psi_terms}
    out = []
    for e1, e2 in pairs:
        for ident, kind, m, closed_fn in _COEFF_CHECKS:
            got = gens[kind](e1, e2, m).terms[m]
            out.append(make_record(ident, {"e1": e1, "e2": e2},
                                   got, closed_fn(e1, e2), tol))
        om = omega_coefficients(e1, e2, 5).terms
        th = theta_terms(e1, e2, 5).terms
        ps = psi_terms(e1, e2, 5).terms
        for m in range(1, 6):
            out.append(make_record("OMEGA_SPLIT", {"e1": e1, "e2": e2, "m": m},
                                   om[m], th[m] + ps[m], 1e-15))
    return out


_FD_STEPS = (1e-3, 3e-3, 4e-3)  # per derivative order 1, 3, 5


def _fd_stencil(g, order: int, h: float) -> float:
    # central differences for an odd function sampled at positive abscissae
    if order == 1:
        return g(h) / h
    if order == 3:
        return (g(2 * h) - 2.0 * g(h)) / h ** 3
    if order == 5:
        return (g(3 * h) - 4.0 * g(2 * h) + 5.0 * g(h)) / h ** 5
    raise DomainError(f"unsupported derivative order {order}")


def _fd_odd_derivative(g, order: int, h: float) -> float:
    # one Richardson step removes the O(h^2) truncation term
    return (4.0 * _fd_stencil(g, order, h) - _fd_stencil(g, order, 2.0 * h)) / 3.0


def maclaurin_records(tol: float = MACLAURIN_TOL) -> list:
    """f_maclaurin_derivative vs finite differences of x -> F(arcsin x, k)."""
    out = []
    for e1, e2 in ((0.6, 0.3), (0.8, 0.5), (0.45, 0.4)):
        k = e2 / e1

        def g(x: float) -> float:
            return incomplete_f(math.asin(x), k)

        for m in (0, 1, 2):
            fd = _fd_odd_derivative(g, 2 * m + 1, _FD_STEPS[m])
            out.append(make_record("MACLAURIN_DERIVATIVE",
                                   {"m": m, "e1": e1, "e2": e2},
                                   f_maclaurin_derivative(m, e1, e2), fd, tol))
    return out


def series_records(grid: int) -> list:
    return sigma_records(grid) + coefficient_records(grid) + maclaurin_records()


# ---------------------------------------------------------------------------
# extensions suite


def kernel_relation_records(n: int, tol: float = KERNEL_TOL,
                            seed: int = _KERNEL_SEED) -> list:
    """cos^2-kernel integrals vs their sin^2-kernel counterparts at the
    complementary angle, for both the E and F numerators."""
    rng = random.Random(seed)
    out = []
    for _ in range(n):
        xi = rng.uniform(0.05, HALF_PI - 0.05)
        kbar = rng.uniform(0.05, 0.95)
        psi = PsiKBar(HALF_PI - xi, kbar)
        xik = XiKBar(xi, kbar)
        out.append(make_record("KERNEL_COS_TO_SIN_E", {"xi": xi, "kbar": kbar},
                               i2_barred_closed(psi), gr_e_sin_closed(xik), tol))
        out.append(make_record("KERNEL_COS_TO_SIN_F", {"xi": xi, "kbar": kbar},
                               i3_barred_closed(psi), gr_f_sin_closed(xik), tol))
    return out


def _lin(lo: float, hi: float, n: int) -> list:
    if n == 1:
        return [0.5 * (lo + hi)]
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


def imaginary_reduction_records(grid: int, tol: float = IMAG_TOL,
                                oracle_tol: float = 1e-12,
                                max_evals: int | None = None) -> list:
    """The two imaginary-parameter reductions vs direct real quadrature."""
    out = []
    for phi in _lin(0.1, 1.5, grid):
        for k in _lin(0.3, 2.5, grid):
            f_red, e_red = imaginary_modulus_reduce(phi, k)
            k2 = k * k

            def df(t: float) -> float:
                return 1.0 / math.sqrt(1.0 + k2 * math.sin(t) ** 2)

            def de(t: float) -> float:
                return math.sqrt(1.0 + k2 * math.sin(t) ** 2)

            pr = {"phi": phi, "k": k}
            out.append(make_record("IMAG_MODULUS_F", pr, f_red,
                                   integrate(df, 0.0, phi, oracle_tol,
                                             max_evals).value, tol))
            out.append(make_record("IMAG_MODULUS_E", pr, e_red,
                                   integrate(de, 0.0, phi, oracle_tol,
                                             max_evals).value, tol))
    for phi_h in _lin(0.2, 2.5, grid):
        for k in _lin(0.08, 0.92, grid):
            f_red, e_red = imaginary_argument_reduce(phi_h, k)
            k2 = k * k

            def hf(t: float) -> float:
                return 1.0 / math.sqrt(1.0 + k2 * math.sinh(t) ** 2)

            def he(t: float) -> float:
                return math.sqrt(1.0 + k2 * math.sinh(t) ** 2)

            pr = {"phi_hyp": phi_h, "k": k}
            out.append(make_record("IMAG_ARGUMENT_F", pr, f_red,
                                   integrate(hf, 0.0, phi_h, oracle_tol,
                                             max_evals).value, tol))
            out.append(make_record("IMAG_ARGUMENT_E", pr, e_red,
                                   integrate(he, 0.0, phi_h, oracle_tol,
                                             max_evals).value, tol))
    return out


def extension_records(grid: int, max_evals: int | None = None) -> list:
    return (kernel_relation_records(grid * grid)
            + imaginary_reduction_records(grid, max_evals=max_evals))


# ---------------------------------------------------------------------------
# report assembly and serialization


@dataclass(frozen=True)
class Report:
    version: str
    tolerances: dict
    grid: int
    timestamp: str  # run metadata only; never serialized, so outputs stay
    # byte-identical across runs
    records: tuple

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.records)

    def failures(self) -> list:
        return [r for r in self.records if not r.passed]


def _tolerance_meta(tol: float) -> dict:
    return {
        "identity_rel": tol,
        "near_zero_abs": 1e-12,
        "area_vs_quadrature_rel": AREA_QUAD_TOL,
        "permutation_rel": PERMUTATION_TOL,
        "scaling_rel": SCALING_TOL,
        "spheroid_limit_rel": LIMIT_TOL,
        "route_rel": ROUTE_TOL,
        "series_sum_rel": SERIES_SUM_TOL,
        "series_coeff_rel": SERIES_COEFF_TOL,
        "maclaurin_rel": MACLAURIN_TOL,
        "kernel_relation_rel": KERNEL_TOL,
        "imag_reduction_rel": IMAG_TOL,
    }


def run_suite(suite: str = "all", grid: int = 5, tol: float = 1e-8,
              max_evals: int | None = None) -> Report:
    """Execute one named suite (or all of them) and collect a Report."""
    if suite != "all" and suite not in SUITES:
        raise DomainError(f"unknown suite {suite!r}; choose from "
                          f"{('all',) + SUITES}")
    if not isinstance(grid, int) or grid < 1:
        raise DomainError(f"grid must be a positive integer, got {grid!r}")
    if not (tol > 0.0):
        raise DomainError("tol must be positive")
    records = []
    if suite in ("all", "geometry"):
        records += geometry_records(grid, max_evals)
    if suite in ("all", "integrals"):
        records += identity_records(grid, tol, max_evals=max_evals)
    if suite in ("all", "series"):
        records += series_records(grid)
    if suite in ("all", "extensions"):
        records += extension_records(grid, max_evals)
    return Report(__version__, _tolerance_meta(tol), grid,
                  datetime.now(timezone.utc).isoformat(), tuple(records))


def _record_dict(r: VerificationRecord) -> dict:
    return {"id": r.ident, "params": r.params, "closed": r.closed,
            "oracle": r.oracle, "abs_err": r.abs_err, "rel_err": r.rel_err,
            "pass": r.passed}


def report_json(report: Report) -> str:
    payload = {
        "meta": {"version": report.version, "tolerances": report.tolerances,
                 "grid": report.grid},
        "records": [_record_dict(r) for r in report.records],
    }
    return json.dumps(payload, indent=2) + "\n"


def report_csv(report: Report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)  # default \r\n line endings per RFC 4180
    w.writerow(["id", "params", "closed", "oracle", "abs_err", "rel_err", "pass"])
    for r in report.records:
        w.writerow([r.ident, json.dumps(r.params, sort_keys=True),
                    repr(r.closed), repr(r.oracle), repr(r.abs_err),
                    repr(r.rel_err), "true" if r.passed else "false"])
    return buf.getvalue()


def write_report(report: Report, path: str, fmt: str = "json") -> None:
    if fmt == "json":
        text = report_json(report)
    elif fmt == "csv":
        text = report_csv(report)
    else:
        raise DomainError(f"unknown report format {fmt!r}")
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
