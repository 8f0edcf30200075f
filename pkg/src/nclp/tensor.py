"""Kronecker products of superoperators and tensor-power divergence tables.

Index convention: the composite algebra M_(n1*n2) uses lexicographic row
indices i = i1 * n2 + i2 (the standard Kronecker layout), matching
``numpy.kron`` for both matrices and states.  Induced norms multiply across
factors on product witnesses, so certified lower bounds for the factors
multiply into a certified lower bound for the product; powers of a factor
bound exceeding 1 therefore diverge.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cpmap import State, SuperOperator, vec

# Building an n^2 x n^2 action matrix grows as dim^4; default guard.
MAX_KRON_DIM = 16


def kron_superop(
    s1: SuperOperator, s2: SuperOperator, *, max_dim: int = MAX_KRON_DIM
) -> SuperOperator:
    """The map with (S1 kron S2)(X kron Y) = S1(X) kron S2(Y), extended linearly."""
    n1, n2 = s1.dim, s2.dim
    n = n1 * n2
    if n > max_dim:
        raise ValueError(
            f"composite dimension {n} exceeds max_dim={max_dim}; "
            "pass a larger max_dim to override"
        )
    action = np.zeros((n * n, n * n), dtype=complex)
    for j1 in range(n1):
        for i1 in range(n1):
            e1 = np.zeros((n1, n1), dtype=complex)
            e1[i1, j1] = 1.0
            out1 = s1(e1)
            for j2 in range(n2):
                for i2 in range(n2):
                    e2 = np.zeros((n2, n2), dtype=complex)
                    e2[i2, j2] = 1.0
                    col = (i1 * n2 + i2) + n * (j1 * n2 + j2)
                    action[:, col] = vec(np.kron(out1, s2(e2)))
    return SuperOperator(action)


def kron_state(s1: State, s2: State) -> State:
    """Product state with density gamma1 kron gamma2."""
    return State.from_matrix(np.kron(s1.gamma.matrix, s2.gamma.matrix))


def choi_shuffle_permutation(n1: int, n2: int) -> np.ndarray:
    """Index permutation relating the Choi matrix of a Kronecker product to
    the Kronecker product of the factor Choi matrices.

    Returns ``perm`` such that for T = T1 kron T2 on M_(n1*n2),
    ``choi(T)[np.ix_(perm, perm)] == np.kron(choi(T1), choi(T2))``.
    """
    n = n1 * n2
    perm = np.empty(n * n, dtype=np.intp)
    for i1 in range(n1):
        for k1 in range(n1):
            for i2 in range(n2):
                for k2 in range(n2):
                    src = (i1 * n1 + k1) * n2 * n2 + (i2 * n2 + k2)
                    perm[src] = (i1 * n2 + i2) * n + (k1 * n2 + k2)
    return perm


def tensor_norm_lower_bound(values) -> float:
    """Product of per-factor certified lower bounds."""
    result = 1.0
    for v in values:
        if v < 0:
            raise ValueError(f"lower bounds must be non-negative, got {v}")
        result *= float(v)
    return result


@dataclass(frozen=True)
class DivergenceTable:
    """Rows (n, bound^n): lower bounds along the tensor-power sequence."""

    rows: tuple[tuple[int, float], ...]

    def first_exceeding(self, threshold: float) -> int | None:
        """Smallest n with bound > threshold, or None within this table."""
        for n, bound in self.rows:
            if bound > threshold:
                return n
        return None


def _power(base: float, n: int) -> float:
    try:
        return float(base) ** n
    except OverflowError:
        return math.inf


def divergence_table(per_factor: float, n_max: int) -> DivergenceTable:
    """Tabulate per_factor^n for n = 1..n_max (inf once the float range is left)."""
    if per_factor < 0:
        raise ValueError(f"per-factor bound must be non-negative, got {per_factor}")
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    rows = tuple((n, _power(per_factor, n)) for n in range(1, n_max + 1))
    return DivergenceTable(rows=rows)


def steps_to_exceed(
    per_factor: float, threshold: float, max_steps: int = 10_000
) -> int | None:
    """Smallest n with per_factor^n > threshold, or None within max_steps."""
    if per_factor < 0:
        raise ValueError(f"per-factor bound must be non-negative, got {per_factor}")
    for n in range(1, max_steps + 1):
        if _power(per_factor, n) > threshold:
            return n
    return None
