"""Command-line front end: scenario files in, deterministic CSV/JSON/SVG out.

Subcommands map one-to-one to the library stages: ``classify`` (shock and
rest-point analysis), ``profile`` (heteroclinic shooting), ``spectrum``
(Fredholm borders and consistent splitting), ``sweep`` (small-amplitude
scaling study) and ``eulerian-profile``.  Exit codes: 0 ok, 1 usage,
2 ordering/Lax failure, 3 non-convergence, 4 spectral degeneracy,
5 domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import equilibria, eulerian, profile, spectrum, svg
from .errors import (
    CenterRootError,
    DomainError,
    LaxError,
    NSKError,
    OrderingError,
    ScenarioError,
)
from .fluid import EULERIAN, LAGRANGIAN, model_from_dict, model_to_dict
from .shock import ShockFamily, build_shock

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_LAX = 2
EXIT_NO_CONVERGENCE = 3
EXIT_SPECTRAL = 4
EXIT_DOMAIN = 5

PROFILE_DEFAULTS = {
    "integrator": "rk4",
    "step": 1e-3,
    "seed_offset": 1e-6,
    "tol": 1e-4,
    "max_len": 1_000_000,
}
SPECTRUM_DEFAULTS = {"xi_lo": -3.0, "xi_hi": 3.0, "n_xi": 601, "lambda_probe": None}
SWEEP_DEFAULTS = {"epsilons": []}


class Scenario:
    """Scenario file with all defaults materialized."""

    def __init__(self, raw):
        if not isinstance(raw, dict):
            raise ScenarioError("scenario root must be a JSON object")
        try:
            self.model = model_from_dict(raw["model"])
        except KeyError:
            raise ScenarioError("scenario is missing the 'model' section") from None
        except (ValueError, TypeError) as exc:
            raise ScenarioError(f"bad model section: {exc}") from None

        states = raw.get("states")
        if not isinstance(states, dict):
            raise ScenarioError("scenario is missing the 'states' section")
        keys = ("r_minus", "r_plus") if self.model.frame == EULERIAN else ("v_minus", "v_plus")
        for key in keys:
            if key not in states:
                raise ScenarioError(f"states section is missing {key!r}")
        self.states = {
            keys[0]: float(states[keys[0]]),
            keys[1]: float(states[keys[1]]),
            "u_minus": float(states.get("u_minus", 0.0)),
        }

        family = raw.get("family", "lax1")
        try:
            self.family = ShockFamily(family)
        except ValueError:
            raise ScenarioError(f"unknown family {family!r}") from None

        for section, defaults in (("profile", PROFILE_DEFAULTS),
                                  ("spectrum", SPECTRUM_DEFAULTS),
                                  ("sweep", SWEEP_DEFAULTS)):
            given = raw.get(section, {})
            unknown = set(given) - set(defaults)
            if unknown:
                raise ScenarioError(f"unknown {section} option(s): {sorted(unknown)}")
        self.profile = {**PROFILE_DEFAULTS, **raw.get("profile", {})}
        self.spectrum = {**SPECTRUM_DEFAULTS, **raw.get("spectrum", {})}
        self.sweep = {**SWEEP_DEFAULTS, **raw.get("sweep", {})}

        self.resolved = {
            "model": model_to_dict(self.model),
            "states": dict(self.states),
            "family": self.family.value,
            "profile": dict(self.profile),
            "spectrum": dict(self.spectrum),
            "sweep": dict(self.sweep),
        }

    def shoot_opts(self):
        opts = dict(self.profile)
        opts["max_len"] = int(opts["max_len"])
        return opts


def load_scenario(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ScenarioError(f"cannot read scenario file: {exc}") from None
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"scenario is not valid JSON: {exc}") from None
    return Scenario(raw)


def _complex_pair(z):
    return [float(np.real(z)), float(np.imag(z))]


def _report_dict(rep):
    return {
        "which": rep.which,
        "v_star": rep.v_star,
        "f_prime": rep.f_prime,
        "discriminant": rep.discriminant,
        "full_eigs": [_complex_pair(z) for z in rep.full_eigs],
        "aux_eigs": [_complex_pair(z) for z in rep.aux_eigs],
        "class_full": rep.class_full,
        "class_aux": rep.class_aux,
        "eta_value": rep.eta_value,
        "osc_threshold": rep.osc_threshold,
        "borderline": rep.borderline,
    }


def _shock_dict(sh):
    return {
        "v_minus": sh.v_minus,
        "v_plus": sh.v_plus,
        "u_minus": sh.u_minus,
        "u_plus": sh.u_plus,
        "speed": sh.speed,
        "family": sh.family.value,
        "a_const": sh.a_const,
        "b_const": sh.b_const,
        "c_const": sh.c_const,
        "amplitude": sh.amplitude,
        "lax_margins": list(sh.lax_margins),
    }


def _write_json(payload, path):
    with open(path, "w", newline="\n") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _require_lagrangian(scenario, command):
    if scenario.model.frame != LAGRANGIAN:
        raise ScenarioError(f"{command} requires a Lagrangian-frame scenario")


def _build_lagrangian_shock(scenario):
    return build_shock(
        scenario.model,
        scenario.states["v_minus"],
        scenario.states["v_plus"],
        scenario.states["u_minus"],
        scenario.family,
    )


# ---------------------------------------------------------------------------
# Commands (each returns (summary_dict, exit_code))
# ---------------------------------------------------------------------------

def cmd_classify(scenario, out_dir, fmt="json"):
    """Shock data, both rest-point reports, oscillation verdict, point condition."""
    _require_lagrangian(scenario, "classify")
    model = scenario.model
    sh = _build_lagrangian_shock(scenario)
    rep_minus = equilibria.analyze_equilibrium(sh, model, "minus")
    rep_plus = equilibria.analyze_equilibrium(sh, model, "plus")
    summary = {
        "scenario": scenario.resolved,
        "shock": _shock_dict(sh),
        "equilibria": {"minus": _report_dict(rep_minus), "plus": _report_dict(rep_plus)},
        "oscillation": equilibria.oscillation_criterion(sh, model),
        "m_value": float(spectrum.point_condition_m(model, sh.v_minus)),
        "power_law_check": spectrum.power_law_check(model),
    }
    _write_json(summary, Path(out_dir) / "classify.json")
    return summary, EXIT_OK


def _phase_portrait_svg(sh, model, sol, path):
    canvas = svg.SvgCanvas(title="phase portrait: homoclinic loop, flow, heteroclinic")
    vbar = profile.find_vbar(sh, model)
    lo = sh.saddle_volume
    vs = np.linspace(lo, vbar, 400)
    q_up, q_dn = profile.homoclinic_loop(sh, model, vs)
    canvas.polyline(vs, q_up, color="#1f77b4", width=1.2)
    canvas.polyline(vs, q_dn, color="#1f77b4", width=1.2)
    canvas.polyline(sol.v_samples[:: max(1, len(sol.v_samples) // 4000)],
                    sol.q_samples[:: max(1, len(sol.q_samples) // 4000)],
                    color="#d62728", width=1.5)
    qmax = float(np.max(q_up)) * 1.15
    xlim = (lo - 0.05 * (vbar - lo), vbar + 0.05 * (vbar - lo))
    segs = svg.flow_field_segments(
        lambda v, q: profile.rhs_full(sh, model, (v, q)), xlim, (-qmax, qmax)
    )
    canvas.segments(segs)
    canvas.write(path, xlabel="V", ylabel="Q")


def cmd_profile(scenario, out_dir, fmt="csv"):
    """Shoot the profile; CSV + JSON summary, optional SVG phase portrait."""
    out = Path(out_dir)
    model = scenario.model
    if model.frame == EULERIAN:
        return cmd_eulerian_profile(scenario, out_dir, fmt)
    sh = _build_lagrangian_shock(scenario)
    sol = profile.shoot_profile(sh, model, **scenario.shoot_opts())
    profile.write_profile_csv(sol, out / "profile.csv")
    summary = {
        "scenario": scenario.resolved,
        "shock": _shock_dict(sh),
        "converged": sol.converged,
        "terminal_distance": sol.terminal_distance,
        "sign_changes": sol.sign_changes,
        "monotone": sol.monotone,
        "samples": len(sol.y_grid),
        "max_h_violation": float(np.max(sol.h_samples)),
        "first_integral_residual": float(
            np.max(np.abs(sol.u_samples + sh.speed * sol.v_samples - sh.a_const))
        ),
    }
    _write_json(summary, out / "profile.json")
    if fmt == "svg":
        _phase_portrait_svg(sh, model, sol, out / "profile.svg")
        canvas = svg.SvgCanvas(title="specific volume along the profile")
        canvas.polyline(sol.y_grid[:: max(1, len(sol.y_grid) // 4000)],
                        sol.v_samples[:: max(1, len(sol.v_samples) // 4000)])
        canvas.write(out / "profile_v.svg", xlabel="y", ylabel="V")
    return summary, (EXIT_OK if sol.converged else EXIT_NO_CONVERGENCE)


def cmd_spectrum(scenario, out_dir, fmt="csv"):
    """Fredholm borders over the xi grid plus the splitting certificate."""
    _require_lagrangian(scenario, "spectrum")
    out = Path(out_dir)
    model = scenario.model
    sh = _build_lagrangian_shock(scenario)
    opts = scenario.spectrum
    report = spectrum.fredholm_borders(
        sh, model, (float(opts["xi_lo"]), float(opts["xi_hi"])), int(opts["n_xi"])
    )
    probe = opts.get("lambda_probe")
    probe = 100.0 * (1.0 + abs(sh.speed)) if probe is None else float(probe)
    splitting = {}
    for which in ("minus", "plus"):
        counts = spectrum.consistent_splitting(sh, model, which, probe)
        splitting[which] = {
            "n_stable": counts.n_stable,
            "n_unstable": counts.n_unstable,
            "n_center": counts.n_center,
        }
    spectrum.write_spectrum_csv(report, out / "spectrum.csv")
    summary = {
        "scenario": scenario.resolved,
        "shock": _shock_dict(sh),
        "max_re": report.max_re,
        "lambda_probe": probe,
        "splitting": splitting,
        "m_value": float(spectrum.point_condition_m(model, sh.v_minus)),
        "power_law_check": spectrum.power_law_check(model),
    }
    _write_json(summary, out / "spectrum.json")
    if fmt == "svg":
        canvas = svg.SvgCanvas(title="Fredholm borders")
        for key, color in (
            ("l1_minus", "#1f77b4"),
            ("l2_minus", "#1f77b4"),
            ("l1_plus", "#ff7f0e"),
            ("l2_plus", "#ff7f0e"),
        ):
            canvas.polyline(report.curves[key].real, report.curves[key].imag, color=color)
        canvas.write(out / "spectrum.svg", xlabel="Re", ylabel="Im")
    return summary, EXIT_OK


def cmd_sweep(scenario, out_dir, fmt="csv"):
    """Small-amplitude sweep; per-epsilon rows plus fitted log-log slopes."""
    _require_lagrangian(scenario, "sweep")
    epsilons = list(scenario.sweep.get("epsilons", []))
    if not epsilons:
        raise ScenarioError("sweep requires a nonempty 'epsilons' list")
    out = Path(out_dir)
    model = scenario.model
    v_minus = scenario.states["v_minus"]
    u_minus = scenario.states["u_minus"]
    opts = scenario.shoot_opts()
    rows = []
    for eps in epsilons:
        try:
            row = profile.small_amplitude_report(
                model, v_minus, [eps], u_minus=u_minus, **opts
            )[0]
        except NSKError as exc:
            row = {"epsilon": float(eps), "error": f"{type(exc).__name__}: {exc}"}
        rows.append(row)

    good = [r for r in rows if "error" not in r]
    slopes = None
    if len(good) >= 2:
        eps_ok = [r["epsilon"] for r in good]
        slopes = {
            "max_v1": profile.loglog_slope(eps_ok, [r["max_v1"] for r in good]),
            "ratio_v2_v1": profile.loglog_slope(eps_ok, [r["ratio_v2_v1"] for r in good]),
            "ratio_v3_v1": profile.loglog_slope(eps_ok, [r["ratio_v3_v1"] for r in good]),
        }

    header = "epsilon,max_v1,ratio_v2_v1,ratio_v3_v1,monotone,converged,sign_changes,error"
    with open(out / "sweep.csv", "w", newline="\n") as fh:
        fh.write(header + "\n")
        for r in rows:
            if "error" in r:
                fh.write(format(r["epsilon"], ".17g") + ",,,,,,," + r["error"] + "\n")
            else:
                fh.write(
                    ",".join(
                        [
                            format(r["epsilon"], ".17g"),
                            format(r["max_v1"], ".17g"),
                            format(r["ratio_v2_v1"], ".17g"),
                            format(r["ratio_v3_v1"], ".17g"),
                            str(r["monotone"]).lower(),
                            str(r["converged"]).lower(),
                            str(r["sign_changes"]),
                            "",
                        ]
                    )
                    + "\n"
                )
    summary = {"scenario": scenario.resolved, "rows": rows, "slopes": slopes}
    _write_json(summary, out / "sweep.json")
    return summary, EXIT_OK


def cmd_eulerian_profile(scenario, out_dir, fmt="csv"):
    """Eulerian-frame profile shooting; CSV columns y, R, Q, J, H."""
    if scenario.model.frame != EULERIAN:
        raise ScenarioError("eulerian-profile requires an Eulerian-frame scenario")
    out = Path(out_dir)
    model = scenario.model
    es = eulerian.build_shock_euler(
        model,
        scenario.states["r_minus"],
        scenario.states["r_plus"],
        scenario.states["u_minus"],
        scenario.family,
    )
    sol = eulerian.shoot_profile_euler(es, model, **scenario.shoot_opts())
    eulerian.write_profile_csv_euler(sol, out / "profile.csv")
    summary = {
        "scenario": scenario.resolved,
        "shock": {
            "r_minus": es.r_minus,
            "r_plus": es.r_plus,
            "j_minus": es.j_minus,
            "j_plus": es.j_plus,
            "speed": es.speed,
            "family": es.family.value,
            "a_const": es.a_const,
            "amplitude": es.amplitude,
        },
        "converged": sol.converged,
        "terminal_distance": sol.terminal_distance,
        "sign_changes": sol.sign_changes,
        "monotone": sol.monotone,
        "oscillation": eulerian.oscillation_criterion_euler(es, model),
        "samples": len(sol.y_grid),
        "max_h_violation": float(np.max(sol.h_samples)),
    }
    _write_json(summary, out / "profile.json")
    return summary, (EXIT_OK if sol.converged else EXIT_NO_CONVERGENCE)


COMMANDS = {
    "classify": cmd_classify,
    "profile": cmd_profile,
    "spectrum": cmd_spectrum,
    "sweep": cmd_sweep,
    "eulerian-profile": cmd_eulerian_profile,
}


def _error_body(exc, code):
    return {"error": type(exc).__name__, "message": str(exc), "exit_code": code}


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="nskshock",
        description="Viscous-dispersive shock profiles and stability certificates",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        cp = sub.add_parser(name)
        cp.add_argument("--scenario", required=True, help="scenario JSON file")
        cp.add_argument("--out", default=".", help="output directory")
        cp.add_argument("--format", default="csv", choices=["csv", "json", "svg"])
        cp.add_argument("--quiet", action="store_true")

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0

    try:
        scenario = load_scenario(args.scenario)
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        summary, code = COMMANDS[args.command](scenario, out_dir, args.format)
    except ScenarioError as exc:
        code = EXIT_USAGE
        summary = _error_body(exc, code)
    except (OrderingError, LaxError) as exc:
        code = EXIT_LAX
        summary = _error_body(exc, code)
    except CenterRootError as exc:
        code = EXIT_SPECTRAL
        summary = _error_body(exc, code)
    except DomainError as exc:
        code = EXIT_DOMAIN
        summary = _error_body(exc, code)
    except NSKError as exc:
        code = EXIT_USAGE
        summary = _error_body(exc, code)

    if not args.quiet:
        print(json.dumps(summary, indent=2, sort_keys=True))
    return code


if __name__ == "__main__":
    sys.exit(main())
