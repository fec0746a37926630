"""Jacobi theta functions with certified error bounds.

Evaluates

    theta3(s)    = sum_k exp(-pi k^2 s)                 (k over all integers)
    theta4(s)    = sum_k (-1)^k exp(-pi k^2 s)
    theta_odd(s) = sum_k exp(-pi (2k+1)^2 s)            (sum over odd indices)
    Theta(z, is) = 1 + 2 sum_{k>=1} exp(-pi k^2 s) cos(2 pi k z)

together with first and second derivatives in s (term factors -pi k^2 and
pi^2 k^4; theta_odd uses (2k+1)^2 in place of k^2). Every result carries an
absolute error bound covering both series truncation and floating-point
rounding, so downstream inequality checks can demand margins that beat the
bound honestly.

Small arguments are accelerated through the modular relations

    theta3(s)    = s^{-1/2} theta3(1/s)
    theta4(s)    = s^{-1/2} theta_odd(1/(4s))
    theta_odd(s) = (1/2) s^{-1/2} theta4(1/(4s))

for order 0 and 1; second derivatives always run the direct series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum, IntEnum

from .errors import ConvergenceError, DomainError

S_MIN = 1e-6
S_MAX = 1e6
SMALL_S_CUTOFF = 0.25
TERM_CAP = 10 ** 6
DEFAULT_TOL = 1e-12

_EPS = math.ulp(1.0)
_TINY = 5e-324  # smallest positive subnormal, floor for underflowed tails


class DerivativeOrder(IntEnum):
    """Derivative order in s; anything outside {0, 1, 2} is rejected."""

    VALUE = 0
    FIRST = 1
    SECOND = 2


class EvalMethod(str, Enum):
    DIRECT = "direct-series"
    TRANSFORM = "modular-transform"
    PRODUCT = "triple-product"


@dataclass(frozen=True)
class ThetaFamily:
    """Selects a theta variant.

    kind is one of "theta3", "theta4", "theta_odd", "theta_general";
    the general family carries the fixed first argument z (mod 1).
    """

    kind: str
    z: float | None = None


THETA3 = ThetaFamily("theta3")
THETA4 = ThetaFamily("theta4")
THETA_ODD = ThetaFamily("theta_odd")

FAMILY_KINDS = ("theta3", "theta4", "theta_odd", "theta_general")


def general_family(z: float) -> ThetaFamily:
    """Family for the two-variable series Theta(z, is); z is reduced mod 1."""
    z = float(z)
    if not math.isfinite(z):
        raise DomainError(f"z={z!r} must be finite")
    return ThetaFamily("theta_general", z - math.floor(z))


@dataclass(frozen=True)
class ThetaValue:
    """A computed value with an absolute error bound.

    The true mathematical value lies in [value - error_bound,
    value + error_bound]; terms_used counts series terms (or product
    factors) actually evaluated.
    """

    value: float
    error_bound: float
    terms_used: int
    method: EvalMethod


def _coerce_order(order) -> DerivativeOrder:
    try:
        return DerivativeOrder(order)
    except ValueError as exc:
        raise DomainError(
            f"derivative order must be 0, 1 or 2, got {order!r}") from exc


def _check_domain(s: float, tol: float) -> None:
    if not (S_MIN <= s <= S_MAX):
        raise DomainError(
            f"s={s!r} outside supported domain [{S_MIN}, {S_MAX}]")
    if not (0.0 < tol < 1.0):
        raise DomainError(f"tol={tol!r} outside (0, 1)")


def _series_square(s: float, order: DerivativeOrder, target: float,
                   alternating: bool, z: float | None = None):
    """Direct series over integer indices k, truncated with a certified tail.

    Sums w_m(k) e^{-pi k^2 s} folded onto k >= 0 (factor 2 for k >= 1),
    where w_m is 1, -pi k^2 or pi^2 k^4. For theta4 the k-th term carries
    (-1)^k; for the general family it carries cos(2 pi k z) instead.

    Returns (value, error_bound, terms_used). The loop stops at the first
    K >= 1 whose geometric tail bound drops below the absolute target.
    """
    m = int(order)
    two_pi_z = None if z is None else 2.0 * math.pi * z
    terms = [1.0 if m == 0 else 0.0]  # k = 0 contributes only at order 0
    slack = 0.0
    k = 0
    while True:
        k += 1
        if k > TERM_CAP:
            raise ConvergenceError(
                f"series at s={s} not certified within {TERM_CAP} terms")
        p = math.pi * (k * k)
        x = p * s
        e = math.exp(-x)
        w = (1.0, -p, p * p)[m]
        t = 2.0 * w * e
        if alternating and (k & 1):
            t = -t
        cos_pen = 0.0
        if two_pi_z is not None:
            t *= math.cos(two_pi_z * k)
            cos_pen = 30.0 * k
        terms.append(t)
        slack += 2.0 * abs(w) * e * (2.0 * x + 10.0 + cos_pen) * _EPS
        # tail after K = k: next term times 1/(1-q), q bounding every
        # later term ratio (exponent gaps grow, weight ratios shrink)
        k1 = k + 1
        q = ((k + 2) / k1) ** (2 * m) * math.exp(-math.pi * (2 * k + 3) * s)
        if q < 1.0:
            w1 = (math.pi * (k1 * k1)) ** m
            e1 = math.exp(-math.pi * (k1 * k1) * s)
            tail = 2.0 * w1 * (e1 if e1 > 0.0 else _TINY) / (1.0 - q)
            if tail <= target:
                break
    value = math.fsum(terms)
    bound = tail + slack + _EPS * abs(value)
    return value, bound, k + 1


def _series_odd(s: float, order: DerivativeOrder, target: float):
    """Direct series over odd indices 2j+1, same certification scheme."""
    m = int(order)
    terms = []
    slack = 0.0
    j = -1
    while True:
        j += 1
        if j > TERM_CAP:
            raise ConvergenceError(
                f"odd series at s={s} not certified within {TERM_CAP} terms")
        idx = 2 * j + 1
        p = math.pi * (idx * idx)
        x = p * s
        e = math.exp(-x)
        w = (1.0, -p, p * p)[m]
        terms.append(2.0 * w * e)
        slack += 2.0 * abs(w) * e * (2.0 * x + 10.0) * _EPS
        n1 = 2 * j + 3
        q = ((2 * j + 5) / n1) ** (2 * m) * math.exp(
            -math.pi * (8 * j + 16) * s)
        if q < 1.0:
            w1 = (math.pi * (n1 * n1)) ** m
            e1 = math.exp(-math.pi * (n1 * n1) * s)
            tail = 2.0 * w1 * (e1 if e1 > 0.0 else _TINY) / (1.0 - q)
            if tail <= target:
                break
    value = math.fsum(terms)
    bound = tail + slack + _EPS * abs(value)
    return value, bound, j + 1


def _direct(kind: str, s: float, order: DerivativeOrder, target: float,
            z: float | None = None):
    if kind == "theta3":
        return _series_square(s, order, target, alternating=False)
    if kind == "theta4":
        return _series_square(s, order, target, alternating=True)
    if kind == "theta_odd":
        return _series_odd(s, order, target)
    return _series_square(s, order, target, alternating=False, z=z)


def _transform(kind: str, s: float, order: DerivativeOrder, tol: float):
    """Small-s evaluation through the modular relations.

    Order 0 uses the relation verbatim; order 1 uses its s-derivative,
    e.g. theta3'(s) = -(1/2) s^{-3/2} theta3(u) - s^{-5/2} theta3'(u)
    with u = 1/s (the theta4/theta_odd analogues replace u by 1/(4s) and
    pick up factors 1/4 and 1/8 on the inner derivative).
    """
    rs = math.sqrt(s)
    if kind == "theta3":
        arg = 1.0 / s
        inner_kind = "theta3"
    else:
        arg = 1.0 / (4.0 * s)
        inner_kind = "theta_odd" if kind == "theta4" else "theta4"
    if order == DerivativeOrder.VALUE:
        c = 1.0 / rs
        if kind == "theta_odd":
            c *= 0.5
        plan = [(c, DerivativeOrder.VALUE)]
        share = 0.5
    else:
        c0 = -0.5 / (s * rs)        # -(1/2) s^{-3/2}
        c1 = -1.0 / (s * s * rs)    # -s^{-5/2}
        if kind == "theta3":
            plan = [(c0, DerivativeOrder.VALUE), (c1, DerivativeOrder.FIRST)]
        elif kind == "theta4":
            plan = [(c0, DerivativeOrder.VALUE),
                    (0.25 * c1, DerivativeOrder.FIRST)]
        else:
            plan = [(0.5 * c0, DerivativeOrder.VALUE),
                    (0.125 * c1, DerivativeOrder.FIRST)]
        share = 0.25
    parts = []
    bound = 0.0
    terms = 0
    for c, inner_order in plan:
        inner_target = share * tol / abs(c)
        v, b, n = _direct(inner_kind, arg, inner_order, inner_target)
        parts.append(c * v)
        bound += abs(c) * b + 4.0 * _EPS * abs(c * v)
        terms += n
    value = math.fsum(parts)
    bound += _EPS * abs(value)
    return ThetaValue(value, bound, terms, EvalMethod.TRANSFORM)


def eval_theta(family: ThetaFamily, s: float,
               order: DerivativeOrder | int = DerivativeOrder.VALUE,
               tol: float = DEFAULT_TOL, *,
               force_direct: bool = False) -> ThetaValue:
    """Evaluate a theta family member or its s-derivative.

    Parameters
    ----------
    family : ThetaFamily
        Which series to evaluate; theta_general must carry z.
    s : float
        Argument, restricted to [1e-6, 1e6].
    order : int
        Derivative order in s, one of 0, 1, 2.
    tol : float
        Absolute truncation target in (0, 1); the reported error bound
        additionally accounts for rounding.
    force_direct : bool
        Skip the small-s modular transform (used by identity residuals,
        where the transform is the statement under test).

    Returns
    -------
    ThetaValue

    Raises
    ------
    DomainError
        s or tol outside the supported domain, bad order or family.
    ConvergenceError
        certification failed within the term cap.
    """
    order = _coerce_order(order)
    if not isinstance(family, ThetaFamily) or family.kind not in FAMILY_KINDS:
        raise DomainError(f"unknown theta family {family!r}")
    s = float(s)
    tol = float(tol)
    _check_domain(s, tol)
    if family.kind == "theta_general":
        if family.z is None or not math.isfinite(family.z):
            raise DomainError("theta_general requires a finite z")
        z = family.z - math.floor(family.z)
        v, b, n = _series_square(s, order, tol, alternating=False, z=z)
        return ThetaValue(v, b, n, EvalMethod.DIRECT)
    if (not force_direct and s < SMALL_S_CUTOFF
            and order <= DerivativeOrder.FIRST):
        return _transform(family.kind, s, order, tol)
    v, b, n = _direct(family.kind, s, order, tol)
    return ThetaValue(v, b, n, EvalMethod.DIRECT)


def eval_theta_general(z: float, s: float,
                       tol: float = DEFAULT_TOL) -> ThetaValue:
    """Theta(z, is) = 1 + 2 sum_{k>=1} e^{-pi k^2 s} cos(2 pi k z)."""
    return eval_theta(general_family(z), s, DerivativeOrder.VALUE, tol)


def theta4_triple_product(s: float, tol: float = DEFAULT_TOL) -> ThetaValue:
    """theta4 via its infinite product.

    theta4(s) = prod_{k>=1} (1 - e^{-2 k pi s}) (1 - e^{-(2k-1) pi s})^2.
    Factors use expm1 to stay accurate near 1; the neglected factors are
    bounded through |log(1-x)| <= x/(1-x) summed geometrically.
    """
    s = float(s)
    tol = float(tol)
    _check_domain(s, tol)
    q = math.exp(-math.pi * s)
    prod = 1.0
    k = 0
    while True:
        k += 1
        if k > TERM_CAP:
            raise ConvergenceError(
                f"product at s={s} not certified within {TERM_CAP} factors")
        a = -math.expm1(-2.0 * k * math.pi * s)
        b = -math.expm1(-(2.0 * k - 1.0) * math.pi * s)
        prod *= a * b * b
        qq = q ** (2 * k + 1)
        delta = 3.0 * qq / ((1.0 - q) * (1.0 - qq))
        if delta <= 0.25 * tol:
            break
    bound = prod * (delta + 15.0 * k * _EPS + _EPS)
    return ThetaValue(prod, bound, k, EvalMethod.PRODUCT)


def log_deriv_ratio(family: ThetaFamily, s: float,
                    tol: float = DEFAULT_TOL) -> float:
    """g(s) = s f'(s) / f(s) for f in {theta3, theta4, theta_odd}."""
    return log_deriv_ratio_bounds(family, s, tol)[0]


def log_deriv_ratio_bounds(family: ThetaFamily, s: float,
                           tol: float = DEFAULT_TOL, *,
                           force_direct: bool = False) -> tuple[float, float]:
    """Like log_deriv_ratio but returns (value, propagated error bound)."""
    if family.kind not in ("theta3", "theta4", "theta_odd"):
        raise DomainError(
            "log_deriv_ratio needs theta3, theta4 or theta_odd")
    s = float(s)
    f = eval_theta(family, s, DerivativeOrder.VALUE, tol,
                   force_direct=force_direct)
    d = eval_theta(family, s, DerivativeOrder.FIRST, tol,
                   force_direct=force_direct)
    g = s * d.value / f.value
    err = ((s * d.error_bound + abs(g) * f.error_bound) / abs(f.value)
           + 3.0 * _EPS * abs(g))
    return g, err


def jacobi_identity_residual(s: float, tol: float = DEFAULT_TOL) -> float:
    """|theta3(1/s) - sqrt(s) theta3(s)|, both sides by direct series.

    The small-s transform is this very identity, so it is disabled here.
    """
    s = float(s)
    lhs = eval_theta(THETA3, 1.0 / s, DerivativeOrder.VALUE, tol,
                     force_direct=True).value
    rhs = math.sqrt(s) * eval_theta(THETA3, s, DerivativeOrder.VALUE, tol,
                                    force_direct=True).value
    return abs(lhs - rhs)


def fact2_residual(s: float, tol: float = DEFAULT_TOL) -> float:
    """|g3(s) + g3(1/s) + 1/2| with g3 = s theta3'/theta3, direct series.

    The differentiated reflection identity forces the two log-ratios to
    sum to -1/2 for every s > 0.
    """
    s = float(s)
    ga = log_deriv_ratio_bounds(THETA3, s, tol, force_direct=True)[0]
    gb = log_deriv_ratio_bounds(THETA3, 1.0 / s, tol, force_direct=True)[0]
    return abs(ga + gb + 0.5)


def theta_odd_poisson_residual(r: float, s: float,
                               tol: float = DEFAULT_TOL) -> float:
    """|theta_odd(rs) - theta4(1/(4rs)) / (2 sqrt(rs))|, direct series."""
    r = float(r)
    s = float(s)
    if not (r > 0.0 and s > 0.0):
        raise DomainError("r and s must be positive")
    rs = r * s
    lhs = eval_theta(THETA_ODD, rs, DerivativeOrder.VALUE, tol,
                     force_direct=True).value
    rhs = eval_theta(THETA4, 1.0 / (4.0 * rs), DerivativeOrder.VALUE, tol,
                     force_direct=True).value / (2.0 * math.sqrt(rs))
    return abs(lhs - rhs)
