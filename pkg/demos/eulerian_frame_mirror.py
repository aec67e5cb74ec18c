"""Build the same physical shock in both coordinate frames and compare.

The Eulerian mass-flux constant A equals the Lagrangian shock speed, and the
Eulerian wave speed equals the Lagrangian constant A; beyond the speeds, the
oscillation verdicts of the two frames must agree.  The Eulerian profile is
then shot with the shared integrator core.
"""

import os

import nskshock as nk

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

eulerian = nk.FluidModel(
    pressure=nk.PowerLaw(1.0, 5.0 / 3.0),      # gamma-law in the density
    viscosity=nk.PowerLaw(1.2, 2.0),
    capillarity=nk.PowerLaw(10.0, 2.0),         # maps to 10/v^7 in volume form
    frame=nk.EULERIAN,
)
lagrangian = nk.to_lagrangian(eulerian)
print("Lagrangian image exponents:",
      f"p ~ v^{lagrangian.pressure.exponent:.4f},",
      f"mu ~ v^{lagrangian.viscosity.exponent:.1f},",
      f"kappa ~ v^{lagrangian.capillarity.exponent:.1f}")

v_minus, v_plus, u_minus = 1.5, 1.0, 0.0
sh = nk.build_shock(lagrangian, v_minus, v_plus, u_minus)
es = nk.build_shock_euler(eulerian, 1.0 / v_minus, 1.0 / v_plus, u_minus)

print(f"Lagrangian speed s = {sh.speed:+.12f}")
print(f"Eulerian constant A = {es.a_const:+.12f}   (must equal s)")
print(f"Eulerian speed      = {es.speed:+.12f}")
print(f"Lagrangian A        = {sh.a_const:+.12f}   (must equal the speed above)")
print(f"verdicts: lagrangian={nk.oscillation_criterion(sh, lagrangian)}, "
      f"eulerian={nk.oscillation_criterion_euler(es, eulerian)}")

sol = nk.shoot_profile_euler(es, eulerian, step=2e-3, tol=1e-4)
print(f"Eulerian shooting: converged={sol.converged}, "
      f"R spans [{sol.v_samples.min():.6f}, {sol.v_samples.max():.6f}], "
      f"{sol.sign_changes} slope sign changes")

csv_path = os.path.join(OUT, "eulerian_profile.csv")
nk.write_profile_csv_euler(sol, csv_path)
print(f"wrote {csv_path}")
