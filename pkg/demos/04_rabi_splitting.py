"""
Vacuum Rabi splitting and where the RWA goes wrong
==================================================

The two lowest dipole-active transitions out of the ground state form the
vacuum Rabi doublet.  Within the rotating-wave approximation the doublet is
exactly symmetric and its splitting is exactly 2*lam at resonance; the full
Hamiltonian instead drags both peaks down in frequency as the coupling
grows, and past lam = omega_c the lower RWA "peak" even turns negative --
the approximation has left its domain of validity.
"""

import numpy as np

import polariscope as ps

grid = ps.SweepGrid(lambda_min=0.0, lambda_max=1.2, steps=61)
rows = ps.run_sweep(grid, n_max=14, k_states=7)

lams = np.array([row.lam for row in rows])
peaks_full = np.array([row.nu_peaks_full for row in rows])
peaks_rwa = np.array([row.nu_peaks_rwa for row in rows])
dnu_full = np.array([row.delta_nu_full for row in rows])
dnu_rwa = np.array([row.delta_nu_rwa for row in rows])

print(f"{'lam':>5} {'peak1 full':>11} {'peak2 full':>11} "
      f"{'peak1 rwa':>10} {'peak2 rwa':>10} {'dnu full':>9} {'dnu rwa':>8}")
for i in range(0, len(rows), 10):
    print(f"{lams[i]:>5.2f} {peaks_full[i, 0]:>11.4f} {peaks_full[i, 1]:>11.4f} "
          f"{peaks_rwa[i, 0]:>10.4f} {peaks_rwa[i, 1]:>10.4f} "
          f"{dnu_full[i]:>9.4f} {dnu_rwa[i]:>8.4f}")

# the RWA splitting is 2*lam to machine precision on the whole grid
dev = np.max(np.abs(dnu_rwa - 2.0 * lams))
print(f"\nmax |dnu_rwa - 2*lam| over the grid: {dev:.1e}")
print(f"lower RWA peak at lam = 1.2: {peaks_rwa[-1, 0]:+.4f}  "
      "(negative: the RWA ground state is no longer the lowest level)")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not installed; skipping the figure")
else:
    fig, ax = plt.subplots(figsize=(6, 4.5))
    ax.plot(lams, peaks_rwa[:, 0], "r-", lw=1.0, label="RWA peaks")
    ax.plot(lams, peaks_rwa[:, 1], "r-", lw=1.0)
    ax.plot(lams, peaks_full[:, 0], "k--", lw=1.2, label="full peaks")
    ax.plot(lams, peaks_full[:, 1], "k--", lw=1.2)
    ax.axhline(0.0, color="0.7", lw=0.8)
    ax.set_xlabel(r"coupling $\lambda/\omega_c$")
    ax.set_ylabel(r"peak frequency $/\omega_c$")
    ax.set_title("vacuum Rabi doublet vs. coupling")
    ax.legend(loc="upper left")
    fig.tight_layout()
    fig.savefig("rabi_splitting.png", dpi=150)
    print("wrote rabi_splitting.png")
