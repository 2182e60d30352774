"""Cavity QED toolkit for a two-level emitter in a single-mode cavity.

Builds the full light-matter coupling Hamiltonian and its rotating-wave
approximation over a truncated Fock product basis, diagonalizes them with an
in-house Jacobi eigensolver, and derives polariton spectra, photon-number
and atomic-energy observables, vacuum Rabi splittings, stick absorption
spectra, coupling-regime labels, and figure-ready sweep datasets.
"""

from .errors import (
    AmbiguousTracking,
    BasisMismatch,
    BlockLeak,
    NonConvergence,
    SchemaMismatch,
    UsageError,
    ValidationError,
)
from .model import (
    Atom,
    BasisState,
    FockBasis,
    ModelParams,
    Parity,
    build_basis,
    build_rabi_hamiltonian,
    build_rwa_hamiltonian,
    excitation_count,
    parity,
)
from .eigensolve import EigenSystem, diagonalize, parity_blocks
from .observables import (
    EnergyPartition,
    atomic_energy,
    dipole_element,
    energy_partition,
    photon_number,
)
from .spectra import (
    Branch,
    Regime,
    RwaLevel,
    SpectralLine,
    absorption_lines,
    classify_regime,
    regime_from_label,
    rwa_analytic_levels,
    rwa_ground_energy,
    rwa_splitting,
    transition_frequencies,
)
from .experiments import (
    ConvergenceRow,
    Dataset,
    SweepGrid,
    SweepRow,
    absorption_dataset,
    convergence_study,
    figure_datasets,
    run_sweep,
    sweep_datasets,
    track_states,
)
from .io import emit_dataset, emit_plot_script, parse_config_file

__version__ = "0.1.0"

__all__ = [
    "AmbiguousTracking",
    "Atom",
    "BasisMismatch",
    "BasisState",
    "BlockLeak",
    "Branch",
    "ConvergenceRow",
    "Dataset",
    "EigenSystem",
    "EnergyPartition",
    "FockBasis",
    "ModelParams",
    "NonConvergence",
    "Parity",
    "Regime",
    "RwaLevel",
    "SchemaMismatch",
    "SpectralLine",
    "SweepGrid",
    "SweepRow",
    "UsageError",
    "ValidationError",
    "absorption_dataset",
    "absorption_lines",
    "atomic_energy",
    "build_basis",
    "build_rabi_hamiltonian",
    "build_rwa_hamiltonian",
    "classify_regime",
    "convergence_study",
    "diagonalize",
    "dipole_element",
    "emit_dataset",
    "emit_plot_script",
    "energy_partition",
    "excitation_count",
    "figure_datasets",
    "parity",
    "parity_blocks",
    "parse_config_file",
    "photon_number",
    "regime_from_label",
    "run_sweep",
    "rwa_analytic_levels",
    "rwa_ground_energy",
    "rwa_splitting",
    "sweep_datasets",
    "track_states",
    "transition_frequencies",
    "__version__",
]
