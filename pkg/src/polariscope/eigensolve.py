"""Dense real-symmetric eigensolver and parity-block utilities.

The solver is a cyclic Jacobi method (row-sweep order): each sweep visits
every strict upper-triangle pair (p, q) and applies a two-sided rotation
annihilating that entry.  Rotations preserve symmetry exactly as stored, and
because rotations are skipped when the target entry is already zero, matrices
with an exact block structure (such as the parity blocks of the model
Hamiltonians) never mix their blocks, so eigenvectors stay block-pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BasisMismatch, BlockLeak, NonConvergence, ValidationError
from .model import FockBasis, Parity

#: Default convergence tolerance, relative to the Frobenius norm.
DEFAULT_TOL = 1e-12

#: Default sweep budget before NonConvergence is raised.
DEFAULT_MAX_SWEEPS = 64

#: Summed squared amplitude on opposite-parity basis states above which an
#: eigenvector is tagged MIXED instead of EVEN/ODD.
PARITY_TOL = 1e-10

_PARITY_RANK = {Parity.EVEN: 0, Parity.ODD: 1, Parity.MIXED: 2}


@dataclass(frozen=True)
class EigenSystem:
    """Sorted orthonormal eigenpairs of a real symmetric matrix.

    ``eigenvalues`` is ascending and ``eigenvectors[:, k]`` is the unit
    eigenvector of ``eigenvalues[k]``.  ``parities[k]`` labels eigenvector k
    as EVEN/ODD when its weight on the opposite-parity basis states is at
    most ``PARITY_TOL`` (MIXED otherwise); it is None when no basis was
    supplied.  ``sweeps`` and ``residual`` record how many full Jacobi sweeps
    ran and the final off-diagonal Frobenius norm.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    parities: tuple[Parity, ...] | None
    sweeps: int
    residual: float

    @property
    def dim(self) -> int:
        return int(self.eigenvalues.size)


def _off_norm(a: np.ndarray) -> float:
    """Frobenius norm of the strict off-diagonal part."""
    return float(math.sqrt(2.0 * np.sum(np.triu(a, 1) ** 2)))


def _jacobi(a: np.ndarray, tol: float, max_sweeps: int):
    """Run cyclic Jacobi sweeps in place; return (diag, vectors, sweeps, off)."""
    n = a.shape[0]
    v = np.eye(n)
    threshold = tol * float(np.linalg.norm(a))
    off = _off_norm(a)
    for sweep in range(max_sweeps):
        if off <= threshold:
            return np.diagonal(a).copy(), v, sweep, off
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                theta = 0.5 * (aqq - app) / apq
                # Smaller-angle root of t^2 + 2t*theta - 1 = 0; hypot keeps
                # the expression finite for extreme theta.
                t = (1.0 if theta >= 0.0 else -1.0) / (
                    abs(theta) + math.hypot(theta, 1.0)
                )
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                ap = a[p, :].copy()
                aq = a[q, :].copy()
                a[p, :] = c * ap - s * aq
                a[q, :] = s * ap + c * aq
                # Mirror the rotated rows into the columns so symmetry holds
                # exactly, then set the 2x2 block from its closed form.
                a[:, p] = a[p, :]
                a[:, q] = a[q, :]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
        off = _off_norm(a)
    if off <= threshold:
        return np.diagonal(a).copy(), v, max_sweeps, off
    raise NonConvergence(
        f"off-diagonal residual {off:.3e} above threshold {threshold:.3e} "
        f"after {max_sweeps} sweeps",
        residual=off,
    )


def _fix_signs(v: np.ndarray) -> np.ndarray:
    """Make the largest-magnitude component of each column positive.

    Ties in magnitude are broken by the lowest index (np.argmax convention).
    """
    idx = np.argmax(np.abs(v), axis=0)
    flip = v[idx, np.arange(v.shape[1])] < 0.0
    v[:, flip] *= -1.0
    return v


def _tag_parities(v: np.ndarray, basis: FockBasis) -> tuple[Parity, ...]:
    amp2 = v**2
    even_mask = basis.parity_signs > 0
    odd_mass = amp2[~even_mask, :].sum(axis=0)
    even_mass = amp2[even_mask, :].sum(axis=0)
    tags = []
    for k in range(v.shape[1]):
        if odd_mass[k] <= PARITY_TOL:
            tags.append(Parity.EVEN)
        elif even_mass[k] <= PARITY_TOL:
            tags.append(Parity.ODD)
        else:
            tags.append(Parity.MIXED)
    return tuple(tags)


def _validate_symmetric(matrix) -> np.ndarray:
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ValidationError(f"expected a square matrix, got shape {a.shape}")
    if not np.isfinite(a).all():
        raise ValidationError("matrix entries must all be finite")
    if not np.array_equal(a, a.T):
        raise ValidationError("matrix must be exactly symmetric as stored")
    return a


def diagonalize(
    matrix,
    basis: FockBasis | None = None,
    *,
    tol: float = DEFAULT_TOL,
    max_sweeps: int = DEFAULT_MAX_SWEEPS,
) -> EigenSystem:
    """Diagonalize a dense real symmetric matrix with cyclic Jacobi sweeps.

    ``tol`` is relative to the Frobenius norm: iteration stops once the
    off-diagonal norm is at most ``tol * ||A||_F``.  Eigenvalues come back
    ascending; exact degeneracies are ordered by parity tag (EVEN < ODD <
    MIXED) and then by the row index of each eigenvector's largest-magnitude
    component, which together with the positive-leading-component sign
    convention makes the output deterministic.  Passing the ``basis`` the
    matrix was built over enables the parity tags.

    Raises NonConvergence if the sweep budget is exhausted, ValidationError
    for non-square, non-finite, or asymmetric input, and BasisMismatch if the
    matrix dimension disagrees with the supplied basis.
    """
    a = _validate_symmetric(matrix)
    if basis is not None and len(basis) != a.shape[0]:
        raise BasisMismatch(
            f"matrix dimension {a.shape[0]} does not match basis dimension {len(basis)}"
        )
    if not tol > 0:
        raise ValidationError(f"tol must be > 0, got {tol!r}")
    if max_sweeps < 0:
        raise ValidationError(f"max_sweeps must be >= 0, got {max_sweeps!r}")

    diag, v, sweeps, off = _jacobi(a.copy(), tol, max_sweeps)
    v = _fix_signs(v)
    parities = None if basis is None else _tag_parities(v, basis)

    argmax_idx = np.argmax(np.abs(v), axis=0)
    rank = (
        np.zeros(a.shape[0], dtype=int)
        if parities is None
        else np.array([_PARITY_RANK[p] for p in parities])
    )
    order = np.lexsort((argmax_idx, rank, diag))

    eigenvalues = diag[order]
    eigenvectors = v[:, order]
    eigenvalues.setflags(write=False)
    eigenvectors.setflags(write=False)
    return EigenSystem(
        eigenvalues=eigenvalues,
        eigenvectors=eigenvectors,
        parities=None if parities is None else tuple(parities[i] for i in order),
        sweeps=sweeps,
        residual=off,
    )


def parity_blocks(matrix, basis: FockBasis):
    """Split a matrix into its even- and odd-parity principal submatrices.

    Returns ``(even_block, odd_block, permutation)`` where ``permutation``
    lists the even-parity basis indices followed by the odd-parity ones, so
    ``matrix[np.ix_(permutation, permutation)]`` is block diagonal with the
    two returned blocks.  Raises BlockLeak if any cross-parity entry is
    nonzero, which signals a builder bug.
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValidationError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] != len(basis):
        raise BasisMismatch(
            f"matrix dimension {a.shape[0]} does not match basis dimension {len(basis)}"
        )
    even_idx = np.flatnonzero(basis.parity_signs > 0)
    odd_idx = np.flatnonzero(basis.parity_signs < 0)
    cross = a[np.ix_(even_idx, odd_idx)]
    cross_t = a[np.ix_(odd_idx, even_idx)]
    leaks = int(np.count_nonzero(cross)) + int(np.count_nonzero(cross_t))
    if leaks:
        worst = max(float(np.abs(cross).max()), float(np.abs(cross_t).max()))
        raise BlockLeak(
            f"{leaks} nonzero cross-parity entries (largest magnitude {worst:.3e})"
        )
    permutation = np.concatenate([even_idx, odd_idx])
    return (
        a[np.ix_(even_idx, even_idx)],
        a[np.ix_(odd_idx, odd_idx)],
        permutation,
    )
