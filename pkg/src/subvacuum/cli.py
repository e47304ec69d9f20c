"""Scenario-driven command line front end.

    subvacuum <command> --scenario FILE [--out DIR] [--sweep SECTION.KEY=v1,v2,...]
              [--format json|csv|both] [--seed N]

Commands: validate, phase-shift, spectrum, power-spectrum, waveguide,
qi-check, fdtd.  Exit status is 0 on success, 2 for an invalid scenario
and 3 when a computation fails numerically.
"""

from __future__ import annotations

import argparse
import configparser
import csv
import io
import json
import math
import os
import re
import sys
import tempfile
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .background_field import (
    FieldModulation,
    SqueezedPlaneWaveMode,
    mean_squared_minimum,
    modulation_from_mode,
    quantum_inequality_margin,
)
from .propagation import ProbePulse, UnphysicalMediumError, comoving_check, effective_velocity, phase_shift
from .quantities import DielectricMaterial, UnitError, parse_quantity
from .spectra import (
    AliasingError,
    LineShape,
    ResolutionError,
    WindowOverlapError,
    analytic_frequency_spectrum,
    analytic_power_spectrum,
    default_grid,
    extract_frequency_features,
    extract_power_features,
    parameters_from_features,
    ratio_beta_alpha,
)
from .waveguide import (
    QuadratureError,
    SqueezeSpectrum,
    TEModeIndices,
    WaveguideGeometry,
    band_center,
    coupling_G,
    min_mean_sq,
    modulation_coefficients,
    modulation_difference,
    qi_verify,
)

SCHEMA_NAME = "subvacuum.result"
SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NUMERIC = 3


class ScenarioError(ValueError):
    """Invalid or inconsistent scenario; maps to exit status 2."""


# ---------------------------------------------------------------- schema
# key -> (kind, default); kinds: ("q", length power) for unit-bearing
# quantities, or "float", "int", "bool", "str"

def _q(power, default=None):
    return (("q", power), default)


SCHEMA: dict[str, dict[str, tuple]] = {
    "material": {
        "epsilon": ("float", 1.0),
        "epsilon_table": ("str", None),
        "chi3": _q(4, 0.0),
    },
    "background": {
        "kind": ("str", None),
        "mean_sq": _q(-4),
        "E0": _q(-2),
        "Omega": _q(-1),
        "k_b": _q(-1),
        "r": ("float", 1.0),
        "alpha": ("float", None),
        "beta": ("float", None),
        "a": _q(1),
        "b": _q(1),
        "L": _q(1, 1.0),
        "m": ("int", 1),
        "n": ("int", 1),
        "k_center": _q(-1),
        "delta_k": _q(-1),
        "max_f": ("float", None),
    },
    "probe": {
        "omega0": _q(-1),
        "wavelength": _q(1),
        "amplitude": ("float", 1.0),
        "delta_omega_p": _q(-1),
        "omega0_over_delta": ("float", None),
        "lineshape": ("str", "lorentzian"),
    },
    "analysis": {
        "distance": _q(1),
        "n_window": ("float", 5.0),
        "points_per_width": ("int", 64),
        "qi_C": ("float", 1.0),
    },
    "fdtd": {
        "mode": ("str", "comoving"),
        "distance_wavelengths": ("float", 1000.0),
        "points_per_wavelength": ("float", None),
        "courant": ("float", 0.9),
        "packet_sigma": ("float", 3.0),
        "trough_offset": ("float", 0.0),
        "decay_lengths": ("float", 14.0),
        "cubic": ("bool", False),
        "backend": ("str", None),
    },
}

BACKGROUND_KEYS = {
    "uniform": {"mean_sq"},
    "plane_wave": {"E0", "Omega", "k_b", "r", "max_f"},
    "waveguide": {"a", "b", "L", "m", "n", "k_center", "delta_k", "r", "max_f"},
    "modulation": {"alpha", "beta", "Omega", "k_b", "max_f"},
}
REQUIRED_BACKGROUND = {
    "uniform": {"mean_sq"},
    "plane_wave": {"E0", "Omega"},
    "waveguide": {"a", "b", "k_center", "delta_k"},
    "modulation": {"alpha", "beta", "Omega"},
}


def _convert(section, key, raw, kind):
    text = raw.strip()
    try:
        if kind == "float":
            return float(text)
        if kind == "int":
            return int(text)
        if kind == "bool":
            low = text.lower()
            if low not in ("1", "0", "true", "false", "yes", "no", "on", "off"):
                raise ValueError(text)
            return low in ("1", "true", "yes", "on")
        if kind == "str":
            return text
        _, power = kind
        q = parse_quantity(text)
    except (ValueError, UnitError) as exc:
        raise ScenarioError(f"[{section}] {key} = {raw!r}: {exc}") from None
    has_unit = re.search(r"[A-Za-zµ]", re.sub(r"[eE][-+]?\d", "", text)) is not None
    if q.length_power != power and (has_unit or q.length_power != 0):
        raise ScenarioError(f"[{section}] {key} = {raw!r} has dimension m^{q.length_power}, expected m^{power}")
    return q.value


@dataclass
class Scenario:
    values: dict  # section -> key -> natural-unit value (defaults filled)
    raw: dict  # section -> key -> string as written
    source: str = "<memory>"

    def get(self, section, key):
        return self.values[section][key]

    def resolved(self) -> dict:
        return {"source": self.source, "raw": self.raw, "resolved": self.values}


def load_scenario(text_or_path, overrides: dict | None = None) -> Scenario:
    parser = configparser.ConfigParser(interpolation=None, inline_comment_prefixes=(";", "#"))
    parser.optionxform = str
    source = "<memory>"
    if isinstance(text_or_path, Path) or (isinstance(text_or_path, str) and "\n" not in text_or_path
                                          and "[" not in text_or_path):
        path = Path(text_or_path)
        if not path.is_file():
            raise ScenarioError(f"scenario file {path} not found")
        source = str(path)
        text = path.read_text()
    else:
        text = text_or_path
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ScenarioError(f"cannot parse scenario: {exc}") from None
    for (sec, key), val in (overrides or {}).items():
        if not parser.has_section(sec):
            parser.add_section(sec)
        parser.set(sec, key, val)

    unknown = [s for s in parser.sections() if s not in SCHEMA]
    bad_keys = [f"{s}.{k}" for s in parser.sections() if s in SCHEMA for k in parser[s] if k not in SCHEMA[s]]
    if unknown or bad_keys:
        raise ScenarioError("unknown keys in scenario: " + ", ".join([f"[{s}]" for s in unknown] + bad_keys))

    raw, values = {}, {}
    for sec, keys in SCHEMA.items():
        raw[sec], values[sec] = {}, {}
        for key, (kind, default) in keys.items():
            if parser.has_option(sec, key):
                raw[sec][key] = parser.get(sec, key)
                values[sec][key] = _convert(sec, key, raw[sec][key], kind)
            else:
                values[sec][key] = default
    sc = Scenario(values, raw, source)
    _validate_structure(sc, parser)
    return sc


def _validate_structure(sc: Scenario, parser) -> None:
    bg = sc.values["background"]
    kind = bg["kind"]
    if kind not in BACKGROUND_KEYS:
        raise ScenarioError(f"[background] kind must be one of {sorted(BACKGROUND_KEYS)}, got {kind!r}")
    given = {k for k in sc.raw["background"] if k != "kind"}
    extra = given - BACKGROUND_KEYS[kind]
    if extra:
        raise ScenarioError(f"[background] keys {sorted(extra)} do not apply to kind = {kind}")
    missing = REQUIRED_BACKGROUND[kind] - given
    if missing:
        raise ScenarioError(f"[background] kind = {kind} requires {sorted(missing)}")
    pr = sc.raw["probe"]
    if ("omega0" in pr) == ("wavelength" in pr):
        raise ScenarioError("[probe] give exactly one of omega0 or wavelength")
    if "delta_omega_p" in pr and "omega0_over_delta" in pr:
        raise ScenarioError("[probe] give at most one of delta_omega_p or omega0_over_delta")
    for sec, key in (("analysis", "n_window"), ("analysis", "qi_C"), ("fdtd", "courant"),
                     ("fdtd", "distance_wavelengths"), ("fdtd", "packet_sigma"), ("fdtd", "decay_lengths")):
        if not sc.values[sec][key] > 0:
            raise ScenarioError(f"[{sec}] {key} must be positive")
    if sc.values["fdtd"]["mode"] not in ("comoving", "spectral"):
        raise ScenarioError("[fdtd] mode must be comoving or spectral")
    if sc.values["fdtd"]["backend"] not in (None, "numba", "numpy"):
        raise ScenarioError("[fdtd] backend must be numba or numpy")


# ---------------------------------------------------------------- objects


@dataclass
class Model:
    material: DielectricMaterial
    pulse: ProbePulse
    modulation: FieldModulation | None
    mean_sq_min: float | None
    mode: SqueezedPlaneWaveMode | None = None
    waveguide: tuple | None = None


def _material(sc: Scenario) -> DielectricMaterial:
    m = sc.values["material"]
    try:
        if m["epsilon_table"]:
            if "epsilon" in sc.raw["material"]:
                raise ScenarioError("[material] give epsilon or epsilon_table, not both")
            pairs = [p.split(":") for p in m["epsilon_table"].split(",")]
            omega = [parse_quantity(w).value for w, _ in pairs]
            eps = [float(e) for _, e in pairs]
            return DielectricMaterial.tabulated(omega, eps, m["chi3"])
        return DielectricMaterial(m["epsilon"], m["chi3"])
    except (ValueError, UnitError) as exc:
        raise ScenarioError(f"[material] {exc}") from None


def _pulse(sc: Scenario) -> ProbePulse:
    p = sc.values["probe"]
    omega0 = p["omega0"] if p["omega0"] is not None else 2.0 * math.pi / p["wavelength"]
    dw = p["delta_omega_p"]
    if p["omega0_over_delta"] is not None:
        dw = omega0 / p["omega0_over_delta"]
    try:
        return ProbePulse(omega0, p["amplitude"], dw, p["lineshape"])
    except ValueError as exc:
        raise ScenarioError(f"[probe] {exc}") from None


def _rescale(mod: FieldModulation, max_f):
    if max_f is None:
        return mod
    if mod.max_abs == 0:
        raise ScenarioError("[background] max_f given but the modulation vanishes")
    return mod.scaled(max_f / mod.max_abs)


def _mean_sq_of(mod: FieldModulation, material, eps):
    """<E^2> at the trough implied by f = (3 chi3 / 2 eps) <E^2>."""
    return 2.0 * eps * mod.minimum / (3.0 * material.chi3) if material.chi3 > 0 else None


def build_model(sc: Scenario) -> Model:
    material = _material(sc)
    pulse = _pulse(sc)
    bg = sc.values["background"]
    kind = bg["kind"]
    eps0 = float(material.epsilon(pulse.omega0))
    try:
        if kind == "uniform":
            return Model(material, pulse, None, bg["mean_sq"])
        if kind == "plane_wave":
            k_b = bg["k_b"] if bg["k_b"] is not None else bg["Omega"] * math.sqrt(eps0)
            mode = SqueezedPlaneWaveMode(bg["E0"], bg["Omega"], k_b, bg["r"])
            mod = _rescale(modulation_from_mode(mode, material, pulse.omega0), bg["max_f"])
            lo = mean_squared_minimum(mode) if bg["max_f"] is None else _mean_sq_of(mod, material, eps0)
            return Model(material, pulse, mod, lo, mode=mode)
        if kind == "modulation":
            k_b = bg["k_b"] if bg["k_b"] is not None else bg["Omega"] * math.sqrt(eps0)
            mod = _rescale(FieldModulation(bg["alpha"], bg["beta"], bg["Omega"], k_b), bg["max_f"])
            return Model(material, pulse, mod, _mean_sq_of(mod, material, eps0))
        geom = WaveguideGeometry(bg["a"], bg["b"], bg["L"])
        idx = TEModeIndices(bg["m"], bg["n"])
        spec = SqueezeSpectrum(bg["k_center"], bg["delta_k"], bg["r"])
        Omega, eps_bar = band_center(geom, idx, spec, material)
        G = coupling_G(geom, idx, spec, material)
        alpha, beta_abs = modulation_coefficients(G, bg["r"])
        mod = _rescale(FieldModulation(alpha, -beta_abs, Omega, bg["k_center"]), bg["max_f"])
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            lo = min_mean_sq(geom, idx, spec, material)
        if bg["max_f"] is not None:
            lo = _mean_sq_of(mod, material, eps_bar)
        return Model(material, pulse, mod, lo, waveguide=(geom, idx, spec))
    except (ValueError, UnitError) as exc:
        if isinstance(exc, ScenarioError):
            raise
        raise ScenarioError(f"[background] {exc}") from None


def validate(sc: Scenario) -> dict:
    model = build_model(sc)
    checks = {}
    if model.mean_sq_min is not None:
        v = effective_velocity(model.material, model.mean_sq_min, model.pulse.omega0)
        checks["v_eff"] = v.exact
        if not v.exact < 1.0:
            raise ScenarioError(f"effective probe speed {v.exact:.12g} >= 1: superluminal medium requested")
    if model.mode is not None:
        cm = comoving_check(model.mode, model.material, model.pulse)
        checks["comoving_ratio"] = cm.ratio
    if model.modulation is not None:
        checks["max_abs_f"] = model.modulation.max_abs
        checks["subvacuum"] = model.modulation.is_subvacuum()
    return {"valid": True, "checks": checks}


# ---------------------------------------------------------------- commands


def _need(cond, msg):
    if not cond:
        raise ScenarioError(msg)


def cmd_validate(sc, model):
    return validate(sc), None


def cmd_phase_shift(sc, model):
    d = sc.values["analysis"]["distance"]
    _need(d is not None, "[analysis] distance is required for phase-shift")
    _need(model.mean_sq_min is not None, "phase-shift needs chi3 > 0 or a uniform mean_sq background")
    res = phase_shift(model.pulse, model.material, model.mean_sq_min, d)
    out = res.as_dict()
    out["mean_sq"] = model.mean_sq_min
    out["wavelength"] = model.pulse.wavelength()
    return out, None


def _spectral_inputs(sc, model):
    _need(model.modulation is not None, "spectra need a travelling modulation background")
    _need(model.pulse.delta_omega_p is not None, "[probe] delta_omega_p or omega0_over_delta is required")
    line = LineShape(model.pulse.delta_omega_p, model.pulse.lineshape)
    grid = default_grid(model.pulse.omega0, model.modulation.Omega, model.pulse.delta_omega_p,
                        sc.values["analysis"]["points_per_width"])
    return line, grid


def _closed_forms(model):
    x = model.pulse.omega0 / model.pulse.delta_omega_p
    a, b = model.modulation.alpha, abs(model.modulation.beta)
    return {
        "A_S/A_C": x * b / (2.0 * math.pi),
        "(A_L-A_R)/A_C": 2.0 / math.pi * x * a,
        "(u_L-u_R)/u_C": 4.0 / math.pi * x * a,
        "u_S/u_C": x * x * b * b / 16.0,
    }


def cmd_spectrum(sc, model):
    line, grid = _spectral_inputs(sc, model)
    spec = analytic_frequency_spectrum(model.pulse, model.modulation, line, grid)
    feats = extract_frequency_features(spec, sc.values["analysis"]["n_window"])
    test = ratio_beta_alpha(feats)
    out = {
        "metadata": spec.metadata(),
        "features": feats.as_dict(),
        "closed_forms": _closed_forms(model),
        "ratio_beta_alpha": test.ratio,
        "subvacuum_present": test.subvacuum_present,
        "parameters": parameters_from_features(feats),
    }
    return out, {"columns": ["omega", "amplitude"], "rows": np.column_stack([spec.omega, spec.amplitude])}


def cmd_power_spectrum(sc, model):
    line, grid = _spectral_inputs(sc, model)
    spec = analytic_power_spectrum(model.pulse, model.modulation, line, grid)
    feats = extract_power_features(spec, sc.values["analysis"]["n_window"])
    out = {
        "metadata": spec.metadata(),
        "features": feats.as_dict(),
        "closed_forms": _closed_forms(model),
        "parameters": parameters_from_features(feats),
    }
    return out, {"columns": ["omega", "power"], "rows": np.column_stack([spec.omega, spec.power])}


def cmd_waveguide(sc, model):
    _need(model.waveguide is not None, "waveguide command needs [background] kind = waveguide")
    geom, idx, spec = model.waveguide
    Omega, eps_bar = band_center(geom, idx, spec, model.material)
    G = coupling_G(geom, idx, spec, model.material)
    alpha, beta = modulation_coefficients(G, spec.r_center)
    out = {
        "Omega": Omega,
        "eps_bar": eps_bar,
        "G": G,
        "alpha": alpha,
        "beta_abs": beta,
        "beta_minus_alpha": modulation_difference(G, spec.r_center),
        "min_mean_sq_avg": model.mean_sq_min,
        "fractional_bandwidth": spec.delta_k / spec.k_center,
    }
    if model.pulse.delta_omega_p is not None:
        out["omega0_over_dw_beta"] = model.pulse.omega0 / model.pulse.delta_omega_p * beta
    return out, None


def cmd_qi_check(sc, model):
    if model.waveguide is not None:
        rep = qi_verify(*model.waveguide, model.material)
        return rep.as_dict(), None
    _need(model.mode is not None, "qi-check needs a plane_wave or waveguide background")
    m = quantum_inequality_margin(model.mode, sc.values["analysis"]["qi_C"])
    return {"min_mean_sq": m.min_value, "bound": m.bound, "tau": m.tau, "C": m.C,
            "implied_C": m.implied_C, "margin": m.margin, "satisfied": m.satisfied}, None


def cmd_fdtd(sc, model):
    from .fdtd_oracle import GridSpec, run_comoving, run_spectral

    _need(model.modulation is not None, "fdtd needs a travelling modulation background")
    f = sc.values["fdtd"]
    mode = f["mode"]
    ppw = f["points_per_wavelength"] or (40.0 if mode == "comoving" else 32.0)
    grid = GridSpec(ppw, f["courant"])
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        if mode == "comoving":
            rep = run_comoving(model.pulse, model.modulation, model.material, grid, f["distance_wavelengths"],
                               packet_sigma=f["packet_sigma"], trough_offset=f["trough_offset"],
                               cubic=f["cubic"], backend=f["backend"])
            out = rep.as_dict()
            series = {"columns": ["t", "E"], "rows": np.column_stack([rep.time, rep.time_series])}
        else:
            _need(model.pulse.delta_omega_p is not None, "[probe] spectral fdtd needs a bandwidth")
            rep = run_spectral(model.pulse, model.modulation, model.material, grid,
                               decay_lengths=f["decay_lengths"], n_window=sc.values["analysis"]["n_window"],
                               backend=f["backend"])
            feats = rep.frequency_features.merged(rep.power_features)
            out = {
                "features": feats.as_dict(),
                "closed_forms": _closed_forms(model),
                "parseval_relative_error": rep.parseval.relative_error,
                "omega_numeric": rep.omega_numeric,
                "omega_effective": rep.omega_effective,
                "diagnostics": rep.diagnostics,
            }
            series = {"columns": ["t", "Re_E", "Im_E"],
                      "rows": np.column_stack([rep.time, rep.time_series.real, rep.time_series.imag])}
    out["warnings"] = [str(w.message) for w in caught]
    return out, series


COMMANDS = {
    "validate": cmd_validate,
    "phase-shift": cmd_phase_shift,
    "spectrum": cmd_spectrum,
    "power-spectrum": cmd_power_spectrum,
    "waveguide": cmd_waveguide,
    "qi-check": cmd_qi_check,
    "fdtd": cmd_fdtd,
}

CSV_COLUMNS = {
    "spectrum": "omega [1/m], amplitude (real part of the spectrum)",
    "power-spectrum": "omega [1/m], power |E_hat|^2",
    "fdtd": "comoving: t, E at the probe point; spectral: t, Re E, Im E of the analytic signal",
}


# ---------------------------------------------------------------- output


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        v = float(obj)
        return v if math.isfinite(v) else repr(v)
    if isinstance(obj, np.ndarray):
        return _jsonable(obj.tolist())
    if isinstance(obj, complex):
        return {"re": obj.real, "im": obj.imag}
    return obj


def _atomic_write(path: Path, data: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def result_document(command, sc: Scenario, result, seed) -> dict:
    return {
        "schema": SCHEMA_NAME,
        "schema_version": SCHEMA_VERSION,
        "package_version": __version__,
        "command": command,
        "seed": seed,
        "scenario": sc.resolved(),
        "result": result,
    }


def dumps(doc) -> str:
    return json.dumps(_jsonable(doc), sort_keys=True, indent=2) + "\n"


def _csv_text(series) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(series["columns"])
    for row in series["rows"]:
        w.writerow([repr(float(v)) for v in row])
    return buf.getvalue()


def evaluate(command: str, scenario_path, overrides: dict, seed: int) -> tuple[dict, dict | None]:
    sc = load_scenario(scenario_path, overrides)
    np.random.seed(seed % 2**32)  # nothing is random today; fixed for future stochastic inputs
    model = build_model(sc)
    if command != "validate":
        validate(sc)
    result, series = COMMANDS[command](sc, model)
    return result_document(command, sc, result, seed), series


def _job(command, scenario, overrides, seed, out_dir, stem, fmt):
    """Run one evaluation and write its files; returns (exit code, message)."""
    try:
        doc, series = evaluate(command, scenario, overrides, seed)
    except (ScenarioError, UnphysicalMediumError, WindowOverlapError, ResolutionError) as exc:
        return EXIT_INVALID, f"invalid scenario: {exc}"
    except (QuadratureError, AliasingError, ArithmeticError, RuntimeError, FloatingPointError) as exc:
        return EXIT_NUMERIC, f"numeric failure: {type(exc).__name__}: {exc}"
    except ValueError as exc:
        return EXIT_INVALID, f"invalid scenario: {exc}"
    written = []
    if fmt in ("json", "both"):
        p = out_dir / f"{stem}.json"
        _atomic_write(p, dumps(doc))
        written.append(str(p))
    if fmt in ("csv", "both") and series is not None:
        p = out_dir / f"{stem}.csv"
        _atomic_write(p, _csv_text(series))
        written.append(str(p))
    return EXIT_OK, " ".join(written)


def _parse_sweep(spec: str):
    key, sep, values = spec.partition("=")
    sec, dot, name = key.partition(".")
    if not (sep and dot and sec and name and values):
        raise ScenarioError(f"--sweep expects SECTION.KEY=v1,v2,..., got {spec!r}")
    if sec not in SCHEMA or name not in SCHEMA[sec]:
        raise ScenarioError(f"--sweep: unknown key {key}")
    return (sec, name), [v.strip() for v in values.split(",") if v.strip()]


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="subvacuum", description="Probe propagation in squeezed-vacuum backgrounds.")
    ap.add_argument("--version", action="version", version=__version__)
    ap.add_argument("command", choices=sorted(COMMANDS))
    ap.add_argument("--scenario", required=True, help="INI scenario file")
    ap.add_argument("--out", default=".", help="output directory (default: current)")
    ap.add_argument("--sweep", help="SECTION.KEY=v1,v2,... list-valued override of one key")
    ap.add_argument("--format", choices=("json", "csv", "both"), default="json")
    ap.add_argument("--seed", type=int, default=0, help="unsigned 64-bit seed recorded in the result")
    ap.add_argument("--jobs", type=int, default=None, help="parallel sweep workers")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if not 0 <= args.seed < 2**64:
        print("invalid scenario: --seed must be an unsigned 64-bit integer", file=sys.stderr)
        return EXIT_INVALID
    out_dir = Path(args.out)
    stem = args.command.replace("-", "_")
    try:
        jobs = [({}, stem)]
        if args.sweep:
            key, values = _parse_sweep(args.sweep)
            jobs = [({key: v}, f"{stem}.{key[0]}.{key[1]}.{i:03d}") for i, v in enumerate(values)]
    except ScenarioError as exc:
        print(f"invalid scenario: {exc}", file=sys.stderr)
        return EXIT_INVALID

    calls = [(args.command, args.scenario, ov, args.seed, out_dir, name, args.format) for ov, name in jobs]
    if len(calls) > 1 and (args.jobs or 0) != 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_job, *zip(*calls)))
    else:
        results = [_job(*c) for c in calls]
    status = max(code for code, _ in results)
    for code, msg in results:
        print(msg, file=sys.stderr if code else sys.stdout)
    return status


if __name__ == "__main__":
    sys.exit(main())
