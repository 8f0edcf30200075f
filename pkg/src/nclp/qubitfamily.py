"""The 2x2 counterexample engine.

For c in (0, 1) the family pairs the state diag(1-c, c) with the unital
completely positive map

    T(E_11) = (1-c) I,  T(E_22) = c I,
    T(E_12) = T(E_21) = sqrt(c(1-c)) (E_12 + E_21),

which preserves the state.  On anti-diagonal witnesses the embedded action
has a closed form, and maximizing it over the family parameter certifies
induced norms strictly above 1 for p < 2 and theta outside the interval
[theta0, theta1] = [(1 - sqrt(p-1))/2, (1 + sqrt(p-1))/2].

Scale convention: ``family_value`` and ``m_closed`` return norm-scale values
(the p-th root of the closed-form p-th power); the quadratic-coefficient
checks against ``alpha`` apply the p-th power first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cpmap import State, SuperOperator

# Golden-section step 1/phi.
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
# The t-scan stays this far away from the degenerate endpoints c in {0, 1}.
T_MARGIN = 1e-3
DEFAULT_GRID_POINTS = 1000
DEFAULT_REFINE_TOL = 1e-12


def _check_c(c: float):
    if not (0.0 < c < 1.0):
        raise ValueError(f"family parameter must lie in (0, 1), got {c}")


def qubit_state(c: float) -> State:
    """diag(1-c, c) as a faithful state on M_2."""
    _check_c(c)
    return State.from_matrix(np.diag([1.0 - c, c]).astype(complex))


def qubit_map(c: float) -> SuperOperator:
    """The unital, state-preserving, completely positive family member."""
    _check_c(c)
    s = math.sqrt(c * (1.0 - c))
    flip = np.array([[0.0, s], [s, 0.0]], dtype=complex)
    eye2 = np.eye(2, dtype=complex)

    def act(e):
        return e[0, 0] * (1.0 - c) * eye2 + e[1, 1] * c * eye2 + (e[0, 1] + e[1, 0]) * flip

    return SuperOperator.from_map(act, 2)


def delta(c: float, p: float, theta: float) -> float:
    """Anti-diagonal weight ((1-c)/c)^((2 theta - 1)/p)."""
    _check_c(c)
    if not (p >= 1.0 and 0.0 <= theta <= 1.0):
        raise ValueError(f"need p >= 1 and theta in [0, 1], got ({p}, {theta})")
    return float(math.exp((2.0 * theta - 1.0) / p * math.log((1.0 - c) / c)))


def optimal_ab(delta_value: float, p: float) -> tuple[float, float]:
    """Maximizing pair a = (d^q/(1+d^q))^(1/p), b = (1/(1+d^q))^(1/p), q conjugate.

    Only defined for p > 1; at p = 1 callers use the endpoint pair (1, 0).
    """
    if not p > 1.0:
        raise ValueError(f"optimal pair requires p > 1, got {p}")
    if not delta_value > 0.0:
        raise ValueError(f"delta must be positive, got {delta_value}")
    q = p / (p - 1.0)
    # log(1 + d^q) computed stably for extreme q * log(d).
    log_denom = np.logaddexp(q * math.log(delta_value), 0.0)
    a = math.exp((q * math.log(delta_value) - log_denom) / p)
    b = math.exp(-log_denom / p)
    return a, b


def family_value(c: float, p: float, theta: float, a: float, b: float) -> float:
    """Norm of the embedded action on the witness a E_12 + b E_21.

    Returns ((c(1-c))^(p/2) ((a + b/d)^p + (a d + b)^p))^(1/p) with
    d = delta(c, p, theta); a certified lower bound for the induced norm
    when a^p + b^p = 1.
    """
    if a < 0 or b < 0:
        raise ValueError("witness coefficients must be non-negative")
    d = delta(c, p, theta)
    base = (c * (1.0 - c)) ** (p / 2.0) * ((a + b / d) ** p + (a * d + b) ** p)
    return float(base ** (1.0 / p))


def _log_m_pow_p(c, p: float, theta: float):
    """log of the p-th power of the family maximum over anti-diagonal
    witnesses at the module's (a, b) selection; broadcasts over ``c``."""
    c = np.asarray(c, dtype=float)
    log_ratio = np.log((1.0 - c) / c)
    log_d = (2.0 * theta - 1.0) / p * log_ratio
    if p == 1.0:
        return 0.5 * np.log(c * (1.0 - c)) + np.log1p(np.exp(log_d))
    q = p / (p - 1.0)
    return (
        (p / 2.0) * np.log(c * (1.0 - c))
        + np.logaddexp(-p * log_d, 0.0)
        + (p - 1.0) * np.logaddexp(q * log_d, 0.0)
    )


def m_closed(c: float, p: float, theta: float) -> float:
    """Closed-form family value at the optimal witness (norm scale).

    For p > 1 this is (gamma (1 + d^-p)(d^q + 1)^(p-1))^(1/p) with
    gamma = (c(1-c))^(p/2); for p = 1 it is sqrt(c(1-c))(1 + d), the value at
    the endpoint pair (a, b) = (1, 0).
    """
    _check_c(c)
    if not (p >= 1.0 and 0.0 <= theta <= 1.0):
        raise ValueError(f"need p >= 1 and theta in [0, 1], got ({p}, {theta})")
    return float(np.exp(_log_m_pow_p(c, p, theta) / p))


def alpha(p: float, theta: float) -> float:
    """Quadratic coefficient 2((2 theta - 1)^2 q - p) of t -> m^p at c = 1/2 + t."""
    if not p > 1.0:
        raise ValueError(
            f"quadratic coefficient requires p > 1, got {p}; "
            "use alpha1 for the first-order p = 1 coefficient"
        )
    q = p / (p - 1.0)
    lam = 2.0 * theta - 1.0
    return 2.0 * (lam * lam * q - p)


def alpha1(theta: float) -> float:
    """First-order coefficient -2(2 theta - 1) of t -> m at p = 1."""
    return -2.0 * (2.0 * theta - 1.0)


@dataclass(frozen=True)
class Thresholds:
    """theta0 = (1 - sqrt(p-1))/2 and its mirror theta1 = 1 - theta0."""

    theta0: float
    theta1: float


def theta_thresholds(p: float) -> Thresholds:
    if not (1.0 <= p <= 2.0):
        raise ValueError(f"thresholds are defined for p in [1, 2], got {p}")
    half_width = 0.5 * math.sqrt(p - 1.0)
    return Thresholds(theta0=0.5 - half_width, theta1=0.5 + half_width)


@dataclass(frozen=True)
class QubitWitness:
    """Family member and witness certifying m_value as a norm lower bound."""

    c: float
    t: float
    a: float
    b: float
    m_value: float
    p: float
    theta: float

    def witness_matrix(self) -> np.ndarray:
        return np.array([[0.0, self.a], [self.b, 0.0]], dtype=complex)


def _witness_at(c: float, p: float, theta: float) -> QubitWitness:
    d = delta(c, p, theta)
    a, b = optimal_ab(d, p) if p > 1.0 else (1.0, 0.0)
    return QubitWitness(
        c=c,
        t=c - 0.5,
        a=a,
        b=b,
        m_value=family_value(c, p, theta, a, b),
        p=p,
        theta=theta,
    )


def family_max(
    p: float,
    theta: float,
    *,
    grid_points: int = DEFAULT_GRID_POINTS,
    refine_tol: float = DEFAULT_REFINE_TOL,
) -> QubitWitness:
    """Maximize m_closed over the family parameter.

    Coarse scan of t = c - 1/2 over ``grid_points`` values in
    (-1/2 + margin, 1/2 - margin), then golden-section refinement around the
    best grid cell down to ``refine_tol`` in t.
    """
    if not (1.0 <= p < 2.0):
        raise ValueError(f"the family certifies norms for p in [1, 2), got {p}")
    if not (0.0 <= theta <= 1.0):
        raise ValueError(f"theta must lie in [0, 1], got {theta}")
    ts = np.linspace(-0.5 + T_MARGIN, 0.5 - T_MARGIN, grid_points)
    values = _log_m_pow_p(0.5 + ts, p, theta)
    i = int(np.argmax(values))
    lo = ts[max(i - 1, 0)]
    hi = ts[min(i + 1, grid_points - 1)]

    def objective(t: float) -> float:
        return float(_log_m_pow_p(0.5 + t, p, theta))

    # Golden-section maximization on [lo, hi].
    x1 = hi - _INV_PHI * (hi - lo)
    x2 = lo + _INV_PHI * (hi - lo)
    f1, f2 = objective(x1), objective(x2)
    while hi - lo > refine_tol:
        if f1 >= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INV_PHI * (hi - lo)
            f1 = objective(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INV_PHI * (hi - lo)
            f2 = objective(x2)
    t_best = x1 if f1 >= f2 else x2
    if objective(float(ts[i])) > objective(t_best):
        t_best = float(ts[i])
    return _witness_at(0.5 + t_best, p, theta)


def find_counterexample(
    p: float,
    theta: float,
    tol: float,
    *,
    grid_points: int = DEFAULT_GRID_POINTS,
    refine_tol: float = DEFAULT_REFINE_TOL,
) -> QubitWitness | None:
    """Witness with m_value > 1 + tol if the family certifies one, else None.

    A None return means the family maximum over the scan stayed at or below
    1 + tol; it is not evidence that the induced norms are bounded.
    """
    if not tol > 0:
        raise ValueError("tolerance must be positive")
    best = family_max(p, theta, grid_points=grid_points, refine_tol=refine_tol)
    return best if best.m_value > 1.0 + tol else None
