"""Dense complex-matrix kernel: Schatten norms, dual elements, fractional powers.

Everything here is a pure function of immutable inputs; matrices are plain
complex numpy arrays, positive matrices carry a cached eigendecomposition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Relative tolerance for accepting / silently repairing Hermitian asymmetry.
HERMITICITY_RTOL = 1e-12
# Eigenvalues in [-EIG_CLIP_RTOL * lambda_max, 0) are clipped to 0.
EIG_CLIP_RTOL = 1e-12
# Singular values <= SUPPORT_RTOL * sigma_max count as numerically zero.
SUPPORT_RTOL = 1e-12


def _as_matrix(x) -> np.ndarray:
    """Coerce to a finite 2-D complex array."""
    m = np.asarray(x, dtype=complex)
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise ValueError(f"expected a 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def singular_values(x) -> np.ndarray:
    """Singular values of ``x`` in descending order."""
    return np.linalg.svd(_as_matrix(x), compute_uv=False)


def schatten_norm(x, p: float) -> float:
    """p-Schatten norm (sum sigma_i^p)^(1/p); p = inf gives the spectral norm.

    Parameters
    ----------
    x : array_like
        Complex matrix with finite entries.
    p : float
        Exponent in [1, inf].
    """
    if not (p >= 1.0):
        raise ValueError(f"Schatten exponent must satisfy p >= 1, got {p}")
    s = singular_values(x)
    top = s[0]
    if math.isinf(p):
        return float(top)
    if top == 0.0:
        return 0.0
    # Scale by sigma_max so sigma^p cannot overflow for large p.
    return float(top * np.sum((s / top) ** p) ** (1.0 / p))


def dual_element(x, p: float) -> np.ndarray:
    """Norming element Z with ||Z||_q = 1 and <Z, X> = ||X||_p (1/p + 1/q = 1).

    Built from the SVD of ``x`` as U diag(sigma^(p-1)) V^* / ||x||_p^(p-1).
    At the nonsmooth endpoints a fixed subgradient is selected: for p = 1 the
    polar factor restricted to the numerical support, for p = inf the first
    (descending order) singular dyad.
    """
    if not (p >= 1.0):
        raise ValueError(f"dual element requires p >= 1, got {p}")
    m = _as_matrix(x)
    u, s, vh = np.linalg.svd(m)
    top = s[0]
    if top == 0.0:
        raise ValueError("dual element of the zero matrix is undefined")
    if p == 1.0:
        support = s > SUPPORT_RTOL * top
        return u[:, support] @ vh[support, :]
    if math.isinf(p):
        return np.outer(u[:, 0], vh[0, :])
    # (sigma/sigma_max)^(p-1) * (sigma_max/||x||_p)^(p-1): both ratios <= 1.
    weights = (s / top) ** (p - 1.0)
    scale = (top / schatten_norm(m, p)) ** (p - 1.0)
    return (u * (weights * scale)) @ vh


def kron(x, y) -> np.ndarray:
    """Kronecker product with lexicographic row/column index convention."""
    return np.kron(_as_matrix(x), _as_matrix(y))


@dataclass(frozen=True)
class PositiveMatrix:
    """Hermitian positive-semidefinite matrix with cached eigendecomposition.

    ``eigenvalues`` are real, clipped at zero and sorted descending;
    ``eigenvectors`` holds the matching orthonormal columns.
    """

    matrix: np.ndarray
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @classmethod
    def from_matrix(cls, h) -> "PositiveMatrix":
        m = _as_matrix(h)
        n, nc = m.shape
        if n != nc:
            raise ValueError(f"positive matrix must be square, got {m.shape}")
        scale = np.abs(m).max()
        asym = np.abs(m - m.conj().T).max()
        if scale > 0 and asym > HERMITICITY_RTOL * scale:
            raise ValueError(
                f"matrix is not Hermitian: asymmetry {asym:.3e} exceeds "
                f"{HERMITICITY_RTOL:g} * max|entry| = {HERMITICITY_RTOL * scale:.3e}"
            )
        herm = (m + m.conj().T) / 2.0
        w, v = np.linalg.eigh(herm)
        w, v = w[::-1].copy(), v[:, ::-1].copy()  # descending
        lam_max = max(w[0], 0.0)
        if w[-1] < -EIG_CLIP_RTOL * lam_max:
            raise ValueError(
                f"matrix is not positive semidefinite: min eigenvalue {w[-1]:.3e}"
            )
        np.clip(w, 0.0, None, out=w)
        w.setflags(write=False)
        v.setflags(write=False)
        herm.setflags(write=False)
        return cls(matrix=herm, eigenvalues=w, eigenvectors=v)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def power(self, s: float) -> "PositiveMatrix":
        """Fractional power via the cached spectral decomposition."""
        w = self.eigenvalues
        if s < 0 and w[-1] <= SUPPORT_RTOL * w[0]:
            raise np.linalg.LinAlgError(
                f"negative power {s} of a numerically singular matrix "
                f"(min/max eigenvalue ratio {w[-1] / w[0] if w[0] else 0.0:.3e})"
            )
        ws = w**s
        v = self.eigenvectors
        if s < 0:  # powers of a descending spectrum come out ascending
            ws, v = ws[::-1].copy(), v[:, ::-1].copy()
        mat = (v * ws) @ v.conj().T
        mat = (mat + mat.conj().T) / 2.0
        ws.setflags(write=False)
        v = v.copy()
        v.setflags(write=False)
        mat.setflags(write=False)
        return PositiveMatrix(matrix=mat, eigenvalues=ws, eigenvectors=v)


def frac_power(p: PositiveMatrix | np.ndarray, s: float) -> PositiveMatrix:
    """``p**s`` for a positive matrix; negative powers require invertibility."""
    if not isinstance(p, PositiveMatrix):
        p = PositiveMatrix.from_matrix(p)
    return p.power(s)
