"""Superoperators on M_n: Choi matrices, positivity tests, state compatibility.

Vectorization convention (used everywhere in the package): column stacking,
``vec(X)[i + n*j] = X[i, j]``, so ``vec(A X B) = (B^T kron A) vec(X)``.
The Choi matrix is the block matrix whose (i, j) block is T(E_ij).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .matcore import PositiveMatrix, _as_matrix, schatten_norm

CP_TOL = 1e-10
UNITAL_TOL = 1e-10
# lambda_min / lambda_max above this ratio counts as faithful (invertible).
FAITHFUL_RTOL = 1e-12
TRACE_TOL = 1e-12


def vec(x: np.ndarray) -> np.ndarray:
    """Column-stacking vectorization."""
    return x.reshape(-1, order="F")


def unvec(v: np.ndarray, n: int) -> np.ndarray:
    """Inverse of :func:`vec`."""
    return v.reshape((n, n), order="F")


@dataclass(frozen=True)
class State:
    """Faithful state on M_n, represented by its density matrix."""

    gamma: PositiveMatrix

    @classmethod
    def from_matrix(cls, g) -> "State":
        gamma = g if isinstance(g, PositiveMatrix) else PositiveMatrix.from_matrix(g)
        tr = float(np.trace(gamma.matrix).real)
        if abs(tr - 1.0) > TRACE_TOL:
            raise ValueError(f"density matrix must have unit trace, got {tr!r}")
        w = gamma.eigenvalues
        if w[-1] <= FAITHFUL_RTOL * w[0]:
            raise ValueError(
                "state is not faithful: smallest eigenvalue "
                f"{w[-1]:.3e} <= {FAITHFUL_RTOL:g} * {w[0]:.3e}"
            )
        return cls(gamma=gamma)

    @property
    def dim(self) -> int:
        return self.gamma.dim

    def power(self, s: float) -> np.ndarray:
        """Matrix of gamma**s."""
        return self.gamma.power(s).matrix


class SuperOperator:
    """Linear map M_n -> M_n stored as its n^2 x n^2 action on vec(X)."""

    __slots__ = ("dim", "action_matrix", "_choi")

    def __init__(self, action_matrix):
        m = _as_matrix(action_matrix)
        n2 = m.shape[0]
        n = math.isqrt(n2)
        if m.shape != (n2, n2) or n * n != n2:
            raise ValueError(f"action matrix must be n^2 x n^2, got {m.shape}")
        m = m.copy()
        m.setflags(write=False)
        self.dim = n
        self.action_matrix = m
        self._choi = None

    @classmethod
    def identity(cls, dim: int) -> "SuperOperator":
        return cls(np.eye(dim * dim, dtype=complex))

    @classmethod
    def from_map(cls, fn, dim: int) -> "SuperOperator":
        """Build the action matrix by evaluating ``fn`` on all matrix units."""
        k = np.zeros((dim * dim, dim * dim), dtype=complex)
        for j in range(dim):
            for i in range(dim):
                e = np.zeros((dim, dim), dtype=complex)
                e[i, j] = 1.0
                k[:, i + dim * j] = vec(_as_matrix(fn(e)))
        return cls(k)

    @classmethod
    def from_kraus(cls, ops) -> "SuperOperator":
        """Map X -> sum_i A_i X A_i^*."""
        mats = [_as_matrix(a) for a in ops]
        n = mats[0].shape[0]
        k = np.zeros((n * n, n * n), dtype=complex)
        for a in mats:
            k += np.kron(a.conj(), a)
        return cls(k)

    @classmethod
    def from_choi(cls, choi) -> "SuperOperator":
        c = _as_matrix(choi)
        n2 = c.shape[0]
        n = math.isqrt(n2)
        if c.shape != (n2, n2) or n * n != n2:
            raise ValueError(f"Choi matrix must be n^2 x n^2, got {c.shape}")
        return cls(_reshuffle(c, n))

    @property
    def choi(self) -> np.ndarray:
        """Block matrix with (i, j) block equal to T(E_ij)."""
        if self._choi is None:
            c = _reshuffle(self.action_matrix, self.dim)
            c.setflags(write=False)
            self._choi = c
        return self._choi

    def __call__(self, x) -> np.ndarray:
        m = _as_matrix(x)
        if m.shape != (self.dim, self.dim):
            raise ValueError(
                f"dimension mismatch: map acts on {self.dim}x{self.dim}, "
                f"got {m.shape}"
            )
        return unvec(self.action_matrix @ vec(m), self.dim)

    def adjoint(self) -> "SuperOperator":
        """Adjoint under the trace pairing <Y, T(X)> = tr(Y^* T(X))."""
        return SuperOperator(self.action_matrix.conj().T)

    def __mul__(self, scalar) -> "SuperOperator":
        return SuperOperator(self.action_matrix * complex(scalar))

    __rmul__ = __mul__

    def __repr__(self) -> str:  # pragma: no cover
        return f"SuperOperator(dim={self.dim})"


def _reshuffle(m: np.ndarray, n: int) -> np.ndarray:
    """Involutive action <-> Choi index shuffle.

    With column stacking, K[k + n*l, i + n*j] = T(E_ij)[k, l] while
    C[i*n + k, j*n + l] = T(E_ij)[k, l]; the two are related by swapping
    the first and last axes of the (n, n, n, n) reshape.
    """
    return np.transpose(m.reshape(n, n, n, n), (3, 1, 2, 0)).reshape(n * n, n * n)


def apply(t: SuperOperator, x) -> np.ndarray:
    """Evaluate T(X)."""
    return t(x)


def choi_matrix(t: SuperOperator) -> np.ndarray:
    """Choi block matrix [T(E_ij)]."""
    return t.choi.copy()


def adjoint(t: SuperOperator) -> SuperOperator:
    return t.adjoint()


def is_completely_positive(t: SuperOperator, tol: float = CP_TOL) -> bool:
    """Choi positivity test: Hermitian Choi with lambda_min >= -tol * scale."""
    if not tol > 0:
        raise ValueError("tolerance must be positive")
    c = t.choi
    scale = max(1.0, np.abs(c).max())
    if np.abs(c - c.conj().T).max() > tol * scale:
        return False
    w = np.linalg.eigvalsh((c + c.conj().T) / 2.0)
    return bool(w[0] >= -tol * max(1.0, w[-1]))


@dataclass(frozen=True)
class CompatibilityReport:
    """Constants relating a map to a state.

    ``c1`` is the least C with tr(Gamma T(X)) <= C tr(Gamma X) on positive X;
    ``c_inf`` is the operator norm, computed as ||T(I)|| for maps certified
    completely positive and otherwise estimated from the action matrix.
    """

    c1: float
    c_inf: float
    unital: bool
    completely_positive: bool


def compatibility(t: SuperOperator, state: State) -> CompatibilityReport:
    """Compute C1, C_inf, unitality, and the Choi positivity flag."""
    if t.dim != state.dim:
        raise ValueError(f"dimension mismatch: map {t.dim}, state {state.dim}")
    gamma = state.gamma.matrix
    inv_sqrt = state.power(-0.5)
    tgam = t.adjoint()(gamma)
    w = inv_sqrt @ tgam @ inv_sqrt
    c1 = float(np.linalg.eigvalsh((w + w.conj().T) / 2.0)[-1])

    eye = np.eye(t.dim, dtype=complex)
    t_of_i = t(eye)
    cp = is_completely_positive(t)
    if cp:
        c_inf = schatten_norm(t_of_i, math.inf)
    else:
        # No positivity certificate: fall back to the S^2 -> S^2 norm as a
        # numerical proxy for the operator norm.
        c_inf = float(np.linalg.svd(t.action_matrix, compute_uv=False)[0])
    unital = bool(schatten_norm(t_of_i - eye, math.inf) <= UNITAL_TOL)
    return CompatibilityReport(
        c1=c1, c_inf=c_inf, unital=unital, completely_positive=cp
    )
