"""Independent reference routes used by the tests.

Everything here deliberately avoids the library's own Jacobi solver so that
numerical assertions compare two unrelated computations: eigenvalue counts
come from LDL^T inertia (scipy), bracketing from Gershgorin discs, and the
extremal eigenvalue from plain bisection on the count function.
"""

from __future__ import annotations

import numpy as np
import scipy.linalg


def gershgorin_bounds(matrix: np.ndarray) -> tuple[float, float]:
    """Return an interval guaranteed to contain every eigenvalue."""
    diag = np.diag(matrix)
    radii = np.sum(np.abs(matrix), axis=1) - np.abs(diag)
    return float(np.min(diag - radii)), float(np.max(diag + radii))


def count_eigenvalues_below(matrix: np.ndarray, shift: float) -> int:
    """Number of eigenvalues of ``matrix`` strictly below ``shift``.

    Uses the inertia of the LDL^T factorization of ``matrix - shift*I``.
    ``scipy.linalg.ldl`` may emit 2x2 blocks on ``D``'s diagonal; each such
    block contributes one positive and one negative eigenvalue (it only
    appears when a stable 1x1 pivot is unavailable, i.e. the block is
    indefinite).
    """
    shifted = matrix - shift * np.eye(matrix.shape[0])
    _, d, _ = scipy.linalg.ldl(shifted)
    count = 0
    i = 0
    n = d.shape[0]
    while i < n:
        if i + 1 < n and d[i, i + 1] != 0.0:
            count += 1  # indefinite 2x2 block: exactly one negative eigenvalue
            i += 2
        else:
            if d[i, i] < 0.0:
                count += 1
            i += 1
    return count


def smallest_eigenvalue(matrix: np.ndarray, *, steps: int = 200) -> float:
    """Smallest eigenvalue via bisection on the inertia count."""
    lo, hi = gershgorin_bounds(matrix)
    lo -= 1.0
    hi += 1.0
    for _ in range(steps):
        mid = 0.5 * (lo + hi)
        if count_eigenvalues_below(matrix, mid) >= 1:
            hi = mid
        else:
            lo = mid
        if hi - lo <= 1e-15 * max(1.0, abs(lo), abs(hi)):
            break
    return 0.5 * (lo + hi)


def reference_spectrum(matrix: np.ndarray) -> np.ndarray:
    """Sorted eigenvalues from LAPACK, for cross-checking multisets."""
    return np.linalg.eigvalsh(matrix)
