"""Generate per-n diagnostic curves for each family as CSV files.

Writes one file per family with the quantities worth plotting against n:
norm parameters, angle, correction size, principal moment, conditioning.
Equivalent to running the command-line sweep for each family:

    quadlsq sweep --family nc --n-min 2 --n-max 17 --out nc.csv

Usage:  python 03_figure_data_sweep.py [output_dir]
"""

import pathlib
import sys

from quadlsq.cli import main

out_dir = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "figure_data")
out_dir.mkdir(parents=True, exist_ok=True)

for family in ("nc", "fejer1", "cc", "gl"):
    out = out_dir / f"{family}_2_17.csv"
    code = main(["sweep", "--family", family,
                 "--n-min", "2", "--n-max", "17", "--out", str(out)])
    assert code == 0

print(f"""
CSV files written under {out_dir}/ with one row per (family, n).
Interesting columns to plot against n:
 * N_omega, N_z  -- boundedness separates convergent families (flat at 2)
                    from Newton-Cotes (explodes once weights go negative);
 * angle_deg     -- Fejer/Clenshaw-Curtis angles track Gauss-Legendre's
                    slide toward zero; Newton-Cotes oscillates wildly;
 * tau_inf       -- the distance between least-squares and minimax
                    solutions, decaying with |mu_Q| for convergent rules;
 * Gamma, cond_inf_A -- conditioning of the triangular block, the signal
                    that the fundamental system turns ill-conditioned as
                    n grows.
""")
