"""Sharp Gabor frame bounds for the Gaussian window on separable lattices.

For a lattice alpha Z x beta Z with integer density n = 1/(alpha beta) the
optimal frame bounds have closed forms in theta values at

    a = n^2 beta^2 / 2,    b = 1 / (2 beta^2).

Even n:  A = n theta4(a) theta4(b),             B = n theta3(a) theta3(b).
Odd  n:  A = n (theta4(a) theta4(b) - 2 theta_odd(a) theta_odd(b)),
         B = n (theta3(a) theta3(b) - 2 theta_odd(a) theta_odd(b)).

Error bounds on the theta factors are propagated through the products and
differences so callers can trust inequalities between bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .theta import (DEFAULT_TOL, S_MAX, S_MIN, THETA3, THETA4, THETA_ODD,
                    DerivativeOrder, eval_theta)

_EPS = math.ulp(1.0)


@dataclass(frozen=True)
class LatticeParams:
    """A separable lattice alpha Z x beta Z of integer density n.

    parity records n mod 2 as "even"/"odd" and must match n.
    """

    alpha: float
    beta: float
    n: int
    parity: str

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise DomainError(f"n={self.n!r} must be a positive integer")
        if not (math.isfinite(self.alpha) and self.alpha > 0.0):
            raise DomainError(f"alpha={self.alpha!r} must be positive")
        if not (math.isfinite(self.beta) and self.beta > 0.0):
            raise DomainError(f"beta={self.beta!r} must be positive")
        expected = "even" if self.n % 2 == 0 else "odd"
        if self.parity != expected:
            raise DomainError(
                f"parity {self.parity!r} does not match n={self.n}")
        if abs(self.alpha * self.beta * self.n - 1.0) > 1e-12:
            raise DomainError(
                f"alpha*beta*n = {self.alpha * self.beta * self.n!r} "
                "must equal 1 to within 1e-12")


def lattice_params(n: int, beta: float, alpha: float | None = None
                   ) -> LatticeParams:
    """Build LatticeParams, deriving alpha = 1/(n beta) when omitted."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"n={n!r} must be a positive integer")
    beta = float(beta)
    if not (math.isfinite(beta) and beta > 0.0):
        raise DomainError(f"beta={beta!r} must be positive")
    if alpha is None:
        alpha = 1.0 / (n * beta)
    return LatticeParams(float(alpha), beta, n,
                         "even" if n % 2 == 0 else "odd")


@dataclass(frozen=True)
class FrameBounds:
    """Lower/upper frame bounds with a shared absolute error bound.

    ratio is upper/lower (math.inf when lower is not usable). valid is
    False when lower <= error_bound: the lower bound is then numerically
    indistinguishable from a degenerate (non-frame) configuration.
    """

    lower: float
    upper: float
    ratio: float
    error_bound: float
    valid: bool


def _theta_args(n: int, beta: float) -> tuple[float, float]:
    a = 0.5 * (n * beta) * (n * beta)
    b = 0.5 / (beta * beta)
    for arg in (a, b):
        if not (S_MIN <= arg <= S_MAX):
            raise DomainError(
                f"beta={beta!r} puts theta argument {arg!r} outside "
                f"[{S_MIN}, {S_MAX}]")
    return a, b


def _product(x, ex, y, ey):
    """(value, error) of x*y given absolute errors ex, ey."""
    v = x * y
    return v, abs(x) * ey + abs(y) * ex + ex * ey + _EPS * abs(v)


def frame_bounds_even(n: int, beta: float,
                      tol: float = DEFAULT_TOL) -> FrameBounds:
    """Closed-form bounds for even density n."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 2 or n % 2:
        raise DomainError(f"n={n!r} must be a positive even integer")
    beta = float(beta)
    if not (math.isfinite(beta) and beta > 0.0):
        raise DomainError(f"beta={beta!r} must be positive")
    a, b = _theta_args(n, beta)
    t4a = eval_theta(THETA4, a, DerivativeOrder.VALUE, tol)
    t4b = eval_theta(THETA4, b, DerivativeOrder.VALUE, tol)
    t3a = eval_theta(THETA3, a, DerivativeOrder.VALUE, tol)
    t3b = eval_theta(THETA3, b, DerivativeOrder.VALUE, tol)
    lo, elo = _product(t4a.value, t4a.error_bound, t4b.value, t4b.error_bound)
    hi, ehi = _product(t3a.value, t3a.error_bound, t3b.value, t3b.error_bound)
    return _assemble(n, lo, elo, hi, ehi)


def frame_bounds_odd(n: int, beta: float,
                     tol: float = DEFAULT_TOL) -> FrameBounds:
    """Closed-form bounds for odd density n."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1 or n % 2 == 0:
        raise DomainError(f"n={n!r} must be a positive odd integer")
    beta = float(beta)
    if not (math.isfinite(beta) and beta > 0.0):
        raise DomainError(f"beta={beta!r} must be positive")
    a, b = _theta_args(n, beta)
    t4a = eval_theta(THETA4, a, DerivativeOrder.VALUE, tol)
    t4b = eval_theta(THETA4, b, DerivativeOrder.VALUE, tol)
    t3a = eval_theta(THETA3, a, DerivativeOrder.VALUE, tol)
    t3b = eval_theta(THETA3, b, DerivativeOrder.VALUE, tol)
    toa = eval_theta(THETA_ODD, a, DerivativeOrder.VALUE, tol)
    tob = eval_theta(THETA_ODD, b, DerivativeOrder.VALUE, tol)
    p4, e4 = _product(t4a.value, t4a.error_bound, t4b.value, t4b.error_bound)
    p3, e3 = _product(t3a.value, t3a.error_bound, t3b.value, t3b.error_bound)
    po, eo = _product(toa.value, toa.error_bound, tob.value, tob.error_bound)
    lo = p4 - 2.0 * po
    elo = e4 + 2.0 * eo + _EPS * (abs(p4) + 2.0 * abs(po))
    hi = p3 - 2.0 * po
    ehi = e3 + 2.0 * eo + _EPS * (abs(p3) + 2.0 * abs(po))
    return _assemble(n, lo, elo, hi, ehi)


def _assemble(n: int, lo: float, elo: float, hi: float, ehi: float
              ) -> FrameBounds:
    lower = n * lo
    upper = n * hi
    error_bound = n * max(elo, ehi) + _EPS * max(abs(lower), abs(upper))
    valid = lower > error_bound
    ratio = upper / lower if lower > 0.0 else math.inf
    return FrameBounds(lower, upper, ratio, error_bound, valid)


def frame_bounds(params: LatticeParams,
                 tol: float = DEFAULT_TOL) -> FrameBounds:
    """Dispatch on lattice parity."""
    if not isinstance(params, LatticeParams):
        raise DomainError(f"expected LatticeParams, got {params!r}")
    if params.parity == "even":
        return frame_bounds_even(params.n, params.beta, tol)
    return frame_bounds_odd(params.n, params.beta, tol)
