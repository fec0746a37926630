"""Numerical verification suites for the theta inequalities.

Each check samples a grid, computes the claimed inequality's margin at
every point, and passes only when each margin exceeds the propagated
evaluation error. Results never round in the claim's favour: a margin at
or below its error bound fails the check.

Two conditioning devices keep the margins honest at small s, where direct
floating-point evaluation would drown genuine but tiny margins in noise:

* the log-ratio reflection  g3(s) = -1/2 - g3(1/s)  turns comparisons at
  s < 1 into comparisons of well-scaled quantities at 1/s > 1;
* the chain margin  m1(s) = theta3''theta3 - theta3'^2 + theta3'theta3/s
  satisfies  m1(s) = (1/s)^5 m1(1/s),  so below 1 it is computed at the
  reflected argument and rescaled.

Both identities follow from differentiating the theta3 reflection formula;
their own correctness is covered by the identity-residual checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError
from .grids import GridSpec
from .theta import (THETA3, THETA4, THETA_ODD, DerivativeOrder, ThetaFamily,
                    eval_theta, log_deriv_ratio_bounds)

_EPS = math.ulp(1.0)
_TINY = 5e-324

EQUALITY_TOL = 1e-13
SYMMETRY_TOL = 1e-12


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one verification suite.

    worst_residual is the smallest margin-minus-error over every assertion
    the suite makes; the suite passes iff it is positive. worst_location
    is the grid point (or point pair) achieving it. low_margin flags a
    pass whose margin sits unusually close to zero; informational suites
    never gate an aggregate verdict.
    """

    name: str
    passed: bool
    worst_residual: float
    worst_location: float | tuple[float, float] | None
    points_tested: int
    low_margin: bool = False
    informational: bool = False


class _Tracker:
    """Collects (margin - error) slacks and remembers the worst one."""

    def __init__(self):
        self.worst = math.inf
        self.location = None
        self.low = False

    def add(self, margin, err, location, scale=None):
        slack = margin - err
        if slack < self.worst:
            self.worst = slack
            self.location = location
        if scale is not None and scale > 0.0 and margin / scale < 1e-6:
            self.low = True
        elif scale is None and err > 0.0 and margin < 1e3 * err:
            self.low = True

    def result(self, name, points, informational=False):
        worst = self.worst if self.worst != math.inf else math.inf
        return CheckResult(name, worst > 0.0, worst, self.location,
                           points, self.low, informational)


def _g(family, s, tol, cache):
    r = cache.get(s)
    if r is None:
        r = log_deriv_ratio_bounds(family, s, tol)
        cache[s] = r
    return r


def check_monotone_log_ratio(family: ThetaFamily, grid: GridSpec,
                             tol: float = 1e-12) -> CheckResult:
    """Strict monotonicity and range of g(s) = s theta'/theta.

    theta3: g increasing with values in (-1/2, 0); comparisons at s < 1 go
    through the reflection so their tiny margins stay resolvable.
    theta4: g decreasing and positive. low_margin flags margins below 1e-6
    relative to the compared values.
    """
    if family.kind not in ("theta3", "theta4"):
        raise DomainError("monotone log-ratio check needs theta3 or theta4")
    pts = grid.points()
    name = f"{family.kind}-log-ratio-monotone"
    track = _Tracker()
    cache: dict[float, tuple[float, float]] = {}

    if family.kind == "theta3":
        for i in range(len(pts) - 1):
            a, b = pts[i], pts[i + 1]
            if b <= 1.0:
                ga, ea = _g(family, 1.0 / a, tol, cache)
                gb, eb = _g(family, 1.0 / b, tol, cache)
                margin = ga - gb
            elif a >= 1.0:
                ga, ea = _g(family, a, tol, cache)
                gb, eb = _g(family, b, tol, cache)
                margin = gb - ga
            else:
                gb, eb = _g(family, b, tol, cache)
                ga, ea = _g(family, 1.0 / a, tol, cache)
                margin = gb + 0.5 + ga
            track.add(margin, ea + eb + _EPS * abs(margin), (a, b),
                      scale=abs(ga) + abs(gb) + 1e-300)
        for s in pts:
            if s >= 1.0:
                g, e = _g(family, s, tol, cache)
                track.add(-g, e, s)
                track.add(g + 0.5, e + 0.5 * _EPS, s)
            else:
                gr, er = _g(family, 1.0 / s, tol, cache)
                track.add(0.5 + gr, er + 0.5 * _EPS, s)
                track.add(-gr, er, s)
    else:
        for i in range(len(pts) - 1):
            a, b = pts[i], pts[i + 1]
            ga, ea = _g(family, a, tol, cache)
            gb, eb = _g(family, b, tol, cache)
            margin = ga - gb
            track.add(margin, ea + eb + _EPS * abs(margin), (a, b),
                      scale=abs(ga) + abs(gb) + 1e-300)
        for s in pts:
            g, e = _g(family, s, tol, cache)
            track.add(g, e, s)
    return track.result(name, len(pts))


def _chain_core(family, s, tol):
    """theta''theta - theta'^2 + theta'theta/s with propagated error."""
    v = eval_theta(family, s, DerivativeOrder.VALUE, tol)
    d = eval_theta(family, s, DerivativeOrder.FIRST, tol)
    w = eval_theta(family, s, DerivativeOrder.SECOND, tol)
    t1 = w.value * v.value
    t2 = -(d.value * d.value)
    t3 = d.value * v.value / s
    m = math.fsum((t1, t2, t3))
    e = (abs(w.value) * v.error_bound + abs(v.value) * w.error_bound
         + w.error_bound * v.error_bound
         + 2.0 * abs(d.value) * d.error_bound + d.error_bound ** 2
         + (abs(d.value) * v.error_bound + abs(v.value) * d.error_bound
            + d.error_bound * v.error_bound) / s
         + _EPS * (abs(t1) + abs(t2) + abs(t3)) + _EPS * abs(m))
    return m, e


def _neg_dlog_product(family, s, tol):
    """-theta' theta / s with propagated error (positive for theta3)."""
    v = eval_theta(family, s, DerivativeOrder.VALUE, tol)
    d = eval_theta(family, s, DerivativeOrder.FIRST, tol)
    p = -(d.value * v.value) / s
    e = ((abs(d.value) * v.error_bound + abs(v.value) * d.error_bound
          + d.error_bound * v.error_bound) / s + 2.0 * _EPS * abs(p))
    return p, e


def check_refined_inequalities(grid: GridSpec,
                               tol: float = 1e-12) -> CheckResult:
    """Refined log-convexity/concavity chains.

    theta3:  theta3''theta3 - theta3'^2 > -theta3'theta3/s > 0
    theta4:  theta4''theta4 - theta4'^2 < -theta4'theta4/s < 0

    Each chain splits into the two margins m1 (gap between the sides) and
    m2 (the inner quantity's sign). The theta3 m1 below s = 1 uses the
    (1/s)^5 reflection scaling; everything else evaluates in place.
    """
    pts = grid.points()
    track = _Tracker()
    for s in pts:
        # theta3 chain
        m2, e2 = _neg_dlog_product(THETA3, s, tol)
        if s >= 1.0:
            m1, e1 = _chain_core(THETA3, s, tol)
        else:
            u = 1.0 / s
            m1u, e1u = _chain_core(THETA3, u, tol)
            u5 = u ** 5
            m1 = u5 * m1u
            e1 = u5 * e1u + 5.0 * _EPS * abs(m1)
        track.add(m1, e1, s)
        track.add(m2, e2, s)
        # theta4 chain (signs flipped; second derivative is direct even at
        # small s, where theta4 itself is tiny and scales the slack down)
        c4, ec4 = _chain_core(THETA4, s, tol)
        p4, ep4 = _neg_dlog_product(THETA4, s, tol)
        track.add(-c4, ec4, s)     # m1 - m2 gap: -(C4 + theta4'theta4/s)
        track.add(-p4, ep4, s)     # -theta4'theta4/s < 0
    return track.result("refined-log-convexity-concavity", len(pts))


def _center_index(pts):
    return min(range(len(pts)), key=lambda i: abs(math.log(pts[i])))


def _pair_values(family, r, pts, tol):
    vals = []
    errs = []
    for s in pts:
        va = eval_theta(family, r * s, DerivativeOrder.VALUE, tol)
        vb = eval_theta(family, r / s, DerivativeOrder.VALUE, tol)
        f = va.value * vb.value
        e = (abs(va.value) * vb.error_bound + abs(vb.value) * va.error_bound
             + va.error_bound * vb.error_bound + _EPS * abs(f))
        vals.append(f)
        errs.append(e)
    return vals, errs


def check_product_inequality(family: ThetaFamily, r_values, s_grid: GridSpec,
                             tol: float = 1e-12) -> CheckResult:
    """f(rs) f(r/s) versus f(r)^2 on a grid symmetric about s = 1.

    theta3 products dip to their minimum exactly at s = 1; theta4 products
    peak there. Asserts strict margins off-center, two-sided equality at
    the center to 1e-13, the grid extremum landing on the center, and the
    s <-> 1/s symmetry of the product to 1e-12.
    """
    if family.kind not in ("theta3", "theta4"):
        raise DomainError("product inequality check needs theta3 or theta4")
    minimum = family.kind == "theta3"
    name = ("theta3-product-minimum" if minimum else "theta4-product-maximum")
    pts = s_grid.points()
    center = _center_index(pts)
    track = _Tracker()
    for r in r_values:
        f = eval_theta(family, r, DerivativeOrder.VALUE, tol)
        rhs = f.value * f.value
        rhs_e = (2.0 * abs(f.value) * f.error_bound + f.error_bound ** 2
                 + _EPS * abs(rhs))
        vals, errs = _pair_values(family, r, pts, tol)
        track.add(EQUALITY_TOL - abs(vals[center] - rhs), 0.0,
                  (r, pts[center]))
        for i, s in enumerate(pts):
            if i == center:
                continue
            margin = (vals[i] - rhs) if minimum else (rhs - vals[i])
            track.add(margin, errs[i] + rhs_e, (r, s))
        pick = min if minimum else max
        idx = pick(range(len(pts)), key=vals.__getitem__)
        if idx != center:
            track.add(-abs(vals[center] - vals[idx]), 0.0, (r, pts[idx]))
        for i in range(len(pts) // 2):
            j = len(pts) - 1 - i
            track.add(SYMMETRY_TOL - abs(vals[i] - vals[j]), 0.0,
                      (r, pts[i]))
    return track.result(name, len(r_values) * len(pts))


def _extremum_at_center(track, vals, errs, pts, center, r, maximum):
    """Assert the grid extremum sits at the center, with real gaps."""
    pick = max if maximum else min
    idx = pick(range(len(pts)), key=vals.__getitem__)
    if idx != center:
        track.add(-abs(vals[center] - vals[idx]), 0.0, (r, pts[idx]))
        return
    for i in range(len(pts)):
        if i == center:
            continue
        gap = (vals[center] - vals[i]) if maximum else (vals[i] - vals[center])
        track.add(gap, errs[i] + errs[center], (r, pts[i]))


def check_odd_upper(r_values, s_grid: GridSpec,
                    tol: float = 1e-12) -> CheckResult:
    """theta3(rs)theta3(r/s) - 2 theta_odd(rs)theta_odd(r/s) minimum at s=1.

    Also asserts the theta_odd product alone peaks at s = 1 (the component
    fact used when combining the bounds).
    """
    pts = s_grid.points()
    center = _center_index(pts)
    track = _Tracker()
    for r in r_values:
        v3, e3 = _pair_values(THETA3, r, pts, tol)
        vo, eo = _pair_values(THETA_ODD, r, pts, tol)
        comb = [a - 2.0 * b for a, b in zip(v3, vo)]
        errs = [ea + 2.0 * eb + _EPS * (abs(a) + 2.0 * abs(b))
                for a, b, ea, eb in zip(v3, vo, e3, eo)]
        _extremum_at_center(track, comb, errs, pts, center, r, maximum=False)
        _extremum_at_center(track, vo, eo, pts, center, r, maximum=True)
    return track.result("odd-combination-minimum", len(r_values) * len(pts))


def check_odd_lower(r_values, s_grid: GridSpec,
                    tol: float = 1e-12) -> CheckResult:
    """theta4(rs)theta4(r/s) - 2 theta_odd(rs)theta_odd(r/s) maximum at s=1.

    Only valid for r >= 1; smaller r is rejected.
    """
    for r in r_values:
        if r < 1.0:
            raise DomainError(f"r={r!r} must be >= 1 for the lower-bound "
                              "combination")
    pts = s_grid.points()
    center = _center_index(pts)
    track = _Tracker()
    for r in r_values:
        v4, e4 = _pair_values(THETA4, r, pts, tol)
        vo, eo = _pair_values(THETA_ODD, r, pts, tol)
        comb = [a - 2.0 * b for a, b in zip(v4, vo)]
        errs = [ea + 2.0 * eb + _EPS * (abs(a) + 2.0 * abs(b))
                for a, b, ea, eb in zip(v4, vo, e4, eo)]
        _extremum_at_center(track, comb, errs, pts, center, r, maximum=True)
    return track.result("odd-combination-maximum", len(r_values) * len(pts))


def check_lemma_odd_ratio(s_grid: GridSpec,
                          tol: float = 1e-12) -> CheckResult:
    """Behaviour of g_o(s) = s theta_odd'/theta_odd.

    Strictly decreasing on [1/4, 10]; bounded below by g_o(1) on
    (0, 1/4]; and within 0.05 of its small-s limit -1/2 at s = 1e-3.
    The grid must span [1e-3, 10].
    """
    if s_grid.min > 1e-3 or s_grid.max < 10.0:
        raise DomainError("grid must span [1e-3, 10]")
    pts = s_grid.points()
    track = _Tracker()
    cache: dict[float, tuple[float, float]] = {}
    g1, e1 = _g(THETA_ODD, 1.0, tol, cache)
    upper = [s for s in pts if s >= 0.25]
    for a, b in zip(upper, upper[1:]):
        ga, ea = _g(THETA_ODD, a, tol, cache)
        gb, eb = _g(THETA_ODD, b, tol, cache)
        margin = ga - gb
        track.add(margin, ea + eb + _EPS * abs(margin), (a, b))
    for s in pts:
        if s <= 0.25:
            g, e = _g(THETA_ODD, s, tol, cache)
            track.add(g - g1, e + e1, s)
    glim, elim = _g(THETA_ODD, 1e-3, tol, cache)
    track.add(0.05 - abs(glim + 0.5), elim, 1e-3)
    return track.result("odd-log-ratio", len(pts))


def check_logconvexity_general(coefficients, s_grid: GridSpec,
                               tol: float = 1e-12) -> CheckResult:
    """Log-convexity of a finite sum f(s) = sum a_k e^{-b_k s}.

    Checks f''(s) f(s) - f'(s)^2 >= -eps_prop at every grid point, where
    eps_prop is the propagated rounding bound (the quantity vanishes
    identically for a single term, so exact zero must not fail).
    """
    coeffs = [(float(a), float(b)) for a, b in coefficients]
    if not coeffs:
        raise DomainError("need at least one coefficient pair")
    for a, b in coeffs:
        if a < 0.0 or b < 0.0:
            raise DomainError(f"coefficients must be non-negative, "
                              f"got ({a!r}, {b!r})")
    if not any(a > 0.0 for a, _ in coeffs):
        raise DomainError("at least one amplitude must be positive")
    pts = s_grid.points()
    track = _Tracker()
    for s in pts:
        f_terms, d_terms, w_terms = [], [], []
        ef = ed = ew = 0.0
        for a, b in coeffs:
            e = math.exp(-b * s)
            f_terms.append(a * e)
            d_terms.append(-a * b * e)
            w_terms.append(a * b * b * e)
            pen = (2.0 * b * s + 8.0) * _EPS
            ef += a * e * pen
            ed += a * b * e * pen
            ew += a * b * b * e * pen
        f = math.fsum(f_terms)
        d = math.fsum(d_terms)
        w = math.fsum(w_terms)
        ef += _EPS * abs(f)
        ed += _EPS * abs(d)
        ew += _EPS * abs(w)
        resid = math.fsum((w * f, -(d * d)))
        # _EPS*f*f floors the band at one ulp of the natural scale so the
        # identically-zero single-term residual passes; _TINY keeps the
        # boundary case resid == -eps_prop on the passing side.
        eps_prop = (abs(w) * ef + abs(f) * ew + ew * ef
                    + 2.0 * abs(d) * ed + ed * ed
                    + _EPS * (abs(w * f) + d * d) + _EPS * abs(resid)
                    + _EPS * f * f + _TINY)
        track.add(resid + eps_prop, 0.0, s)
    return track.result("exp-sum-log-convexity", len(pts))


def check_theta4_ratio_conjecture(grid: GridSpec,
                                  tol: float = 1e-12) -> CheckResult:
    """Exploratory: s^2 theta4'/theta4 looks decreasing and convex.

    Reported for information only; never gates an aggregate verdict. The
    convexity part uses second differences, so the grid must be linear.
    """
    if grid.scale != "linear":
        raise DomainError("conjecture check expects a linear grid")
    pts = grid.points()
    hs = []
    es = []
    cache: dict[float, tuple[float, float]] = {}
    for s in pts:
        g, e = _g(THETA4, s, tol, cache)
        hs.append(s * g)
        es.append(s * e + _EPS * abs(s * g))
    track = _Tracker()
    for i in range(len(pts) - 1):
        margin = hs[i] - hs[i + 1]
        track.add(margin, es[i] + es[i + 1] + _EPS * abs(margin),
                  (pts[i], pts[i + 1]))
    for i in range(1, len(pts) - 1):
        second = hs[i + 1] - 2.0 * hs[i] + hs[i - 1]
        err = es[i - 1] + 2.0 * es[i] + es[i + 1]
        track.add(second + err, 0.0, pts[i])
    return track.result("theta4-ratio-conjecture", len(pts),
                        informational=True)


_THETA3_COEFFS = ((1.0, 0.0),) + tuple(
    (2.0, math.pi * k * k) for k in range(1, 11))


@dataclass(frozen=True)
class VerifyConfig:
    """Grids, families and suite selection for run_all.

    suites=None runs everything; a suite runs only when every theta family
    it touches is listed in families.
    """

    suites: tuple[str, ...] | None = None
    families: frozenset[str] = frozenset(("theta3", "theta4", "theta_odd"))
    tol: float = 1e-12
    monotone_grid: GridSpec = GridSpec(0.05, 20.0, 1000, "log")
    refined_grid: GridSpec = GridSpec(0.05, 10.0, 500, "log")
    product_grid: GridSpec = GridSpec(1.0 / 3.0, 3.0, 301, "log")
    product_r: tuple[float, ...] = (0.5, 1.0, 2.0, 5.0)
    odd_lower_r: tuple[float, ...] = (1.0, 2.0, 5.0)
    odd_ratio_grid: GridSpec = GridSpec(1e-3, 10.0, 1250, "log")
    logconv_grid: GridSpec = GridSpec(0.1, 10.0, 200, "log")
    conjecture_grid: GridSpec = GridSpec(0.5, 5.0, 200, "linear")

    def __post_init__(self):
        object.__setattr__(self, "families", frozenset(self.families))
        if self.suites is not None:
            object.__setattr__(self, "suites", tuple(self.suites))
            unknown = set(self.suites) - set(SUITE_NAMES)
            if unknown:
                raise DomainError(
                    f"unknown suites {sorted(unknown)!r}; "
                    f"valid names: {list(SUITE_NAMES)!r}")


_REGISTRY: tuple[tuple[str, frozenset, object], ...] = (
    ("theta3-log-ratio-monotone", frozenset({"theta3"}),
     lambda c: check_monotone_log_ratio(THETA3, c.monotone_grid, c.tol)),
    ("theta4-log-ratio-monotone", frozenset({"theta4"}),
     lambda c: check_monotone_log_ratio(THETA4, c.monotone_grid, c.tol)),
    ("refined-log-convexity-concavity", frozenset({"theta3", "theta4"}),
     lambda c: check_refined_inequalities(c.refined_grid, c.tol)),
    ("theta3-product-minimum", frozenset({"theta3"}),
     lambda c: check_product_inequality(THETA3, c.product_r, c.product_grid,
                                        c.tol)),
    ("theta4-product-maximum", frozenset({"theta4"}),
     lambda c: check_product_inequality(THETA4, c.product_r, c.product_grid,
                                        c.tol)),
    ("odd-combination-minimum", frozenset({"theta3", "theta_odd"}),
     lambda c: check_odd_upper(c.product_r, c.product_grid, c.tol)),
    ("odd-combination-maximum", frozenset({"theta4", "theta_odd"}),
     lambda c: check_odd_lower(c.odd_lower_r, c.product_grid, c.tol)),
    ("odd-log-ratio", frozenset({"theta_odd"}),
     lambda c: check_lemma_odd_ratio(c.odd_ratio_grid, c.tol)),
    ("exp-sum-log-convexity", frozenset({"theta3"}),
     lambda c: check_logconvexity_general(_THETA3_COEFFS, c.logconv_grid,
                                          c.tol)),
    ("theta4-ratio-conjecture", frozenset({"theta4"}),
     lambda c: check_theta4_ratio_conjecture(c.conjecture_grid, c.tol)),
)

SUITE_NAMES = tuple(name for name, _, _ in _REGISTRY)


def run_all(config: VerifyConfig | None = None) -> list[CheckResult]:
    """Run the selected suites in registry order (deterministic)."""
    config = config if config is not None else VerifyConfig()
    results = []
    for name, needs, runner in _REGISTRY:
        if config.suites is not None and name not in config.suites:
            continue
        if not needs <= config.families:
            continue
        results.append(runner(config))
    return results


def all_passed(results) -> bool:
    """Aggregate verdict, ignoring informational suites."""
    return all(r.passed for r in results if not r.informational)
