"""Density-weighted embedding of a superoperator into the Schatten class.

For a map T, a faithful state with density Gamma, p in [1, inf) and theta in
[0, 1], the embedded action is

    U(Y) = Gamma^((1-theta)/p) T(Gamma^(-(1-theta)/p) Y Gamma^(-theta/p)) Gamma^(theta/p)

and its S^p -> S^p induced norm is the quantity the rest of the package
estimates and bounds.  This module also classifies (p, theta) pairs into the
known bounded / unbounded / unknown regions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .cpmap import State, SuperOperator, compatibility


class Status(Enum):
    BOUNDED = "bounded"
    UNBOUNDED = "unbounded"
    UNKNOWN = "unknown"


class Source(Enum):
    """Which result justifies a region classification."""

    THM41 = "Thm41"  # p >= 2, 2-positive
    THM43 = "Thm43"  # p < 2, theta in [1 - p/2, p/2]
    HJX_HALF = "HJXHalf"  # theta = 1/2, any p
    THM61 = "Thm61"  # p < 2, theta strictly outside [theta0, theta1]
    NONE = "None"


_BOUNDED_SOURCES = {Source.THM41, Source.THM43, Source.HJX_HALF}


@dataclass(frozen=True)
class RegionStatus:
    status: Status
    source: Source

    def __post_init__(self):
        if self.status is Status.BOUNDED and self.source not in _BOUNDED_SOURCES:
            raise ValueError(f"bounded status cannot come from {self.source}")
        if self.status is Status.UNBOUNDED and self.source is not Source.THM61:
            raise ValueError(f"unbounded status cannot come from {self.source}")
        if self.status is Status.UNKNOWN and self.source is not Source.NONE:
            raise ValueError("unknown status carries no source")


@dataclass(frozen=True)
class EmbeddedMap:
    """A map together with the state and exponents defining its embedding."""

    base: SuperOperator
    state: State
    p: float
    theta: float
    u_action: SuperOperator


def build_embedded(
    base: SuperOperator, state: State, p: float, theta: float
) -> EmbeddedMap:
    """Construct the embedded action U for (T, Gamma, p, theta).

    The action matrix is composed from the two weight sandwiches and the base
    map: vec(A Z B) = (B^T kron A) vec(Z) under column stacking.
    """
    if not (1.0 <= p < math.inf):
        raise ValueError(f"p must lie in [1, inf), got {p}")
    if not (0.0 <= theta <= 1.0):
        raise ValueError(f"theta must lie in [0, 1], got {theta}")
    if base.dim != state.dim:
        raise ValueError(f"dimension mismatch: map {base.dim}, state {state.dim}")
    a = state.power((1.0 - theta) / p)
    b = state.power(theta / p)
    ai = state.power(-(1.0 - theta) / p)
    bi = state.power(-theta / p)
    action = np.kron(b.T, a) @ base.action_matrix @ np.kron(bi.T, ai)
    return EmbeddedMap(
        base=base, state=state, p=p, theta=theta, u_action=SuperOperator(action)
    )


def exact_norm_p2(emap: EmbeddedMap) -> float:
    """Induced norm at p = 2: S^2 is a Hilbert space, so this is the largest
    singular value of the n^2 x n^2 action matrix."""
    if emap.p != 2.0:
        raise ValueError(f"exact norm only available at p = 2, got p = {emap.p}")
    return float(np.linalg.svd(emap.u_action.action_matrix, compute_uv=False)[0])


def hjx_upper_bound(base: SuperOperator, state: State, p: float) -> float:
    """Upper bound C_inf^(1 - 1/p) * C_1^(1/p) from the compatibility report.

    Valid for 2-positive maps when p >= 2 (any theta) and for positive maps
    at theta = 1/2 (any p >= 1); callers are responsible for checking that
    one of those hypotheses holds.
    """
    if not (1.0 <= p < math.inf):
        raise ValueError(f"p must lie in [1, inf), got {p}")
    rep = compatibility(base, state)
    return float(rep.c_inf ** (1.0 - 1.0 / p) * rep.c1 ** (1.0 / p))


def classify_region(p: float, theta: float) -> RegionStatus:
    """Classify (p, theta) as bounded / unbounded / unknown.

    Boundary conventions: the interval [1 - p/2, p/2] is closed (bounded on
    its endpoints); the curves theta = (1 -+ sqrt(p-1))/2 are excluded from
    the unbounded region (points exactly on them are unknown).
    """
    if not (1.0 <= p < math.inf):
        raise ValueError(f"p must lie in [1, inf), got {p}")
    if not (0.0 <= theta <= 1.0):
        raise ValueError(f"theta must lie in [0, 1], got {theta}")
    if p >= 2.0:
        return RegionStatus(Status.BOUNDED, Source.THM41)
    if theta == 0.5:
        return RegionStatus(Status.BOUNDED, Source.HJX_HALF)
    if 1.0 - p / 2.0 <= theta <= p / 2.0:
        return RegionStatus(Status.BOUNDED, Source.THM43)
    half_width = 0.5 * math.sqrt(p - 1.0)
    if theta < 0.5 - half_width or theta > 0.5 + half_width:
        return RegionStatus(Status.UNBOUNDED, Source.THM61)
    return RegionStatus(Status.UNKNOWN, Source.NONE)
