"""
How many photon states are enough?
==================================

The photon ladder has to be truncated at some n_max, and the counter-rotating
terms spread each eigenstate over more Fock states as lam grows, so the
required n_max grows with the coupling.  convergence_study() climbs a ladder
of truncations and reports how far the lowest k levels still move relative
to the largest basis in the ladder.
"""

import polariscope as ps
from polariscope import ModelParams

ladder = [4, 6, 8, 10, 14, 20, 28, 40]

for lam in (0.5, 1.0, 1.5):
    rows = ps.convergence_study(ModelParams(lam=lam), ladder, k_states=7)
    print(f"lam = {lam}: max deviation of the lowest 7 levels "
          f"from the n_max = {ladder[-1]} result")
    for row in rows:
        dim = 2 * (row.n_max + 1)
        print(f"  n_max = {row.n_max:>3} (dim {dim:>3}): {row.max_abs_dev:.3e}")
    print()

print("reading the table: at lam = 0.5 the default n_max = 14 is converged")
print("to ~1e-13, while at lam = 1.5 the same truncation still moves by")
print("~1e-3 -- stronger coupling needs a taller photon ladder.")
