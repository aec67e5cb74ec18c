"""Verify the weak-shock derivative estimates with an amplitude sweep.

Weak backward shocks have monotone decreasing profiles whose slope scales
like the squared amplitude; each further derivative loses one power.  The
sweep shoots three amplitudes and fits log-log slopes against epsilon.
"""

import os

import nskshock as nk

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

model = nk.FluidModel(
    pressure=nk.PowerLaw(1.0, -5.0 / 3.0),
    viscosity=nk.PowerLaw(1.2, -2.0),
    capillarity=nk.PowerLaw(10.0, -7.0),
)

epsilons = [0.02, 0.04, 0.08]
rows = nk.small_amplitude_report(model, 1.5, epsilons, step=1e-2)

print(f"{'eps':>6} {'max|V1|':>12} {'max|V2|/max|V1|':>16} "
      f"{'max|V3|/max|V1|':>16} {'monotone':>9}")
for r in rows:
    print(f"{r['epsilon']:>6.3f} {r['max_v1']:>12.4e} {r['ratio_v2_v1']:>16.4e} "
          f"{r['ratio_v3_v1']:>16.4e} {str(r['monotone']):>9}")

slope1 = nk.loglog_slope(epsilons, [r["max_v1"] for r in rows])
slope2 = nk.loglog_slope(epsilons, [r["ratio_v2_v1"] for r in rows])
slope3 = nk.loglog_slope(epsilons, [r["ratio_v3_v1"] for r in rows])
print(f"fitted slope of max|V'|            vs eps: {slope1:.3f}  (expected 2)")
print(f"fitted slope of max|V''|/max|V'|   vs eps: {slope2:.3f}  (expected 1)")
print(f"fitted slope of max|V'''|/max|V'|  vs eps: {slope3:.3f}  (expected 2)")

csv_path = os.path.join(OUT, "small_amplitude_sweep.csv")
with open(csv_path, "w", newline="\n") as fh:
    fh.write("epsilon,max_v1,ratio_v2_v1,ratio_v3_v1,monotone\n")
    for r in rows:
        fh.write(",".join([
            format(r["epsilon"], ".17g"),
            format(r["max_v1"], ".17g"),
            format(r["ratio_v2_v1"], ".17g"),
            format(r["ratio_v3_v1"], ".17g"),
            str(r["monotone"]).lower(),
        ]) + "\n")
print(f"wrote {csv_path}")
