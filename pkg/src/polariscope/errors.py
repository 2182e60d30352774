"""Exception types shared across the package."""


class ValidationError(ValueError):
    """A physical parameter or configuration value violates its invariant."""


class UsageError(Exception):
    """Malformed command line or configuration input."""


class NonConvergence(RuntimeError):
    """Eigensolver failed to reach the requested tolerance.

    Carries the final off-diagonal residual and, when raised from a sweep,
    the coupling value at which it happened.
    """

    def __init__(self, message, residual=None, lam=None):
        super().__init__(message)
        self.residual = residual
        self.lam = lam


class BlockLeak(ValueError):
    """Nonzero matrix entry between opposite-parity basis states.

    Signals a Hamiltonian-builder bug: parity superselection requires such
    entries to be exactly zero.
    """


class BasisMismatch(ValueError):
    """Two state vectors do not live on the same truncated basis."""


class AmbiguousTracking(RuntimeError):
    """Best eigenvector overlap across a sweep step fell below 1/sqrt(2)."""

    def __init__(self, message, overlap=None):
        super().__init__(message)
        self.overlap = overlap


class SchemaMismatch(ValueError):
    """A dataset row does not match the declared column schema."""
