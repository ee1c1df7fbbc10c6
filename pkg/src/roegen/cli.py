"""Command line front end.

    roegen carnot [--config FILE] [--out DIR] [--reverse] [--svg] [overrides]
    roegen vdw critical|isotherm|maxwell|surface [--config FILE] [--out DIR] [overrides]
    roegen catastrophe [--config FILE] [--out DIR] [--grid | --check | --P .. --Q .. --I ..]

Exit codes: 0 success, 1 input or domain error, 2 numeric validation failure.
The config file is INI-style, one section per module; flags win over the
file, the file wins over built-in defaults.
"""
from __future__ import annotations

import argparse
import configparser
import math
import sys
from pathlib import Path

import numpy as np

from . import catastrophe as cat
from . import io as out_io
from .carnot import CarnotSpec, build_cycle, reverse_cycle, validate_cycle
from .errors import RoegenError
from .state import IdealIncomeModel, StatePoint, VdWModel
from .vdw import (critical_point, maxwell_construction, surface_grid,
                  verify_critical, vdw_isotherm_path)

EXIT_OK, EXIT_INPUT, EXIT_NUMERIC = 0, 1, 2
CHECK_TOL = 1e-9

DEFAULTS = {
    "ideal": {"n": 1.0, "R": 1.0, "f": 3, "Q_ref": 1.0, "I_ref": 1.0},
    "carnot": {"I_H": 2.0, "I_C": 1.0, "Q_1": 1.0, "Q_2": math.e, "samples_per_leg": 1000},
    "vdw": {"a": 27.0, "b": 1.0, "R": 8.0, "n": 1.0},
    "isotherm": {"I_reduced": 0.9, "Q_min_reduced": 0.45, "Q_max_reduced": 5.0, "samples": 400},
    "maxwell": {"I_reduced": 0.9},
    "surface": {"Q_min_reduced": 0.45, "Q_max_reduced": 5.0, "I_min_reduced": 0.8,
                "I_max_reduced": 1.2, "nQ": 60, "nI": 9},
    "catastrophe": {"alpha_min": -1.0, "alpha_max": 1.0, "beta_min": -1.0, "beta_max": 1.0,
                    "points": 41, "samples": 1000, "seed": 0},
}
INT_KEYS = {"f", "samples_per_leg", "samples", "nQ", "nI", "points", "seed"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _num(key, raw):
    try:
        if key in INT_KEYS:
            v = float(raw)
            if not v.is_integer():
                raise ValueError
            return int(v)
        return float(raw)
    except (TypeError, ValueError):
        raise UsageError(f"{key}: expected a {'integer' if key in INT_KEYS else 'number'}, got {raw!r}") from None


def load_config(path: str | None) -> dict:
    cfg = {sec: dict(vals) for sec, vals in DEFAULTS.items()}
    if path is None:
        return cfg
    parser = configparser.ConfigParser()
    parser.optionxform = str
    try:
        with open(path, encoding="utf-8") as fh:
            parser.read_file(fh)
    except (OSError, configparser.Error) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    for sec in parser.sections():
        if sec not in cfg:
            raise UsageError(f"unknown config section [{sec}]")
        for key, raw in parser.items(sec):
            if key not in cfg[sec] and not (sec == "catastrophe" and key in ("P", "Q", "I")):
                raise UsageError(f"unknown key {key!r} in [{sec}]")
            cfg[sec][key] = _num(key, raw)
    return cfg


def _override(cfg, section, args, names):
    for key in names:
        val = getattr(args, key, None)
        if val is not None:
            cfg[section][key] = val


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="roegen", description="Economic Carnot, Van der Waals and cusp computations")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--config", help="INI file with per-module sections")
        sp.add_argument("--out", default="out", help="output directory (default: out)")

    c = sub.add_parser("carnot", help="economic Carnot cycle on the ideal income surface")
    common(c)
    for key in ("n", "R", "Q_ref", "I_ref", "I_H", "I_C", "Q_1", "Q_2"):
        c.add_argument(f"--{key.replace('_', '-')}", dest=key, type=float)
    c.add_argument("--f", type=int)
    c.add_argument("--samples-per-leg", dest="samples_per_leg", type=int)
    c.add_argument("--reverse", action="store_true", help="emit the consumption (reversed) cycle")
    c.add_argument("--svg", action="store_true", help="also write Q-P and E-I SVG plots")

    v = sub.add_parser("vdw", help="Van der Waals equation of state")
    v.add_argument("subcommand", choices=("critical", "isotherm", "maxwell", "surface"))
    common(v)
    for key in ("a", "b", "R", "n"):
        v.add_argument(f"--{key}", type=float)
    v.add_argument("--I-reduced", dest="I_reduced", type=float)
    v.add_argument("--Q-min-reduced", dest="Q_min_reduced", type=float)
    v.add_argument("--Q-max-reduced", dest="Q_max_reduced", type=float)
    v.add_argument("--samples", type=int)

    k = sub.add_parser("catastrophe", help="cusp catastrophe coordinates")
    common(k)
    for key in ("a", "b", "R"):
        k.add_argument(f"--{key}", type=float)
    for key in ("P", "Q", "I"):
        k.add_argument(f"--{key}", type=float, help="state to map (default: the critical point)")
    mode = k.add_mutually_exclusive_group()
    mode.add_argument("--grid", action="store_true", help="write the (alpha, beta, root count) grid")
    mode.add_argument("--check", action="store_true", help="check the surface residual on sampled states")
    k.add_argument("--points", type=int)
    k.add_argument("--samples", type=int)
    k.add_argument("--seed", type=int)
    for key in ("alpha_min", "alpha_max", "beta_min", "beta_max"):
        k.add_argument(f"--{key.replace('_', '-')}", dest=key, type=float)
    return p


def _print_block(pairs, stream):
    for key, val in pairs:
        print(f"{key} = {out_io.fmt(val)}", file=stream)


def run_carnot(args, cfg, stream) -> int:
    _override(cfg, "ideal", args, ("n", "R", "f", "Q_ref", "I_ref"))
    _override(cfg, "carnot", args, ("I_H", "I_C", "Q_1", "Q_2", "samples_per_leg"))
    model = IdealIncomeModel(**cfg["ideal"])
    report = build_cycle(CarnotSpec(model, **cfg["carnot"]))
    if args.reverse:
        report = reverse_cycle(report)
    diag = validate_cycle(report)

    outdir = Path(args.out)
    out_io.write_text(outdir / "cycle_qp.csv", out_io.cycle_qp_csv(report))
    out_io.write_text(outdir / "cycle_ei.csv", out_io.cycle_ei_csv(report))
    out_io.write_text(outdir / "cycle.json", out_io.json_text(report.to_dict()))
    if args.svg:
        out_io.write_text(outdir / "cycle_qp.svg",
                          out_io.cycle_svg(report, "Q", "P", "Economic Carnot cycle, Q-P", xlog=True, ylog=True))
        out_io.write_text(outdir / "cycle_ei.svg",
                          out_io.cycle_svg(report, "E", "I", "Economic Carnot cycle, E-I"))
    _print_block([("W", report.W), ("q_H", report.q_H), ("q_C", report.q_C), ("eta", report.eta),
                  ("E_A", report.E_A), ("E_B", report.E_B), ("reversed", report.reversed),
                  ("residual_dG", diag.residual_dG), ("residual_loop", diag.residual_loop),
                  ("residual_W", diag.residual_W), ("validation", "pass" if diag.passed else "FAIL")],
                 stream)
    return EXIT_OK if diag.passed else EXIT_NUMERIC


def run_vdw(args, cfg, stream) -> int:
    _override(cfg, "vdw", args, ("a", "b", "R", "n"))
    model = VdWModel(**cfg["vdw"])
    crit = critical_point(model)
    outdir = Path(args.out)
    sub = args.subcommand

    if sub == "critical":
        diag = verify_critical(model)
        _print_block([("P_c", crit.P_c), ("Q_c", crit.Q_c), ("I_c", crit.I_c),
                      ("dP/dQ", diag.slope), ("d2P/dQ2", diag.curvature),
                      ("validation", "pass" if diag.passed else "FAIL")], stream)
        return EXIT_OK if diag.passed else EXIT_NUMERIC

    if sub == "maxwell":
        _override(cfg, "maxwell", args, ("I_reduced",))
        t = cfg["maxwell"]["I_reduced"]
        if t >= 1.0:
            raise RoegenError(f"I_reduced={t!r} is supercritical; no coexistence")
        co = maxwell_construction(model, t * crit.I_c)
        doc = {"I": t * crit.I_c, "I_reduced": t, **co.to_dict(), "P_sat_reduced": co.P_sat / crit.P_c}
        text = out_io.json_text(doc)
        out_io.write_text(outdir / "maxwell.json", text)
        stream.write(text)
        return EXIT_OK

    if sub == "isotherm":
        _override(cfg, "isotherm", args, ("I_reduced", "Q_min_reduced", "Q_max_reduced", "samples"))
        c = cfg["isotherm"]
        I = c["I_reduced"] * crit.I_c
        lo, hi = c["Q_min_reduced"] * crit.Q_c, c["Q_max_reduced"] * crit.Q_c
        raw = vdw_isotherm_path(model, I, lo, hi, c["samples"])
        fixed = vdw_isotherm_path(model, I, lo, hi, c["samples"], corrected=True)
        out_io.write_text(outdir / "vdw_isotherm_raw.csv", out_io.isotherm_csv(raw))
        out_io.write_text(outdir / "vdw_isotherm_corrected.csv", out_io.isotherm_csv(fixed))
        _print_block([("I", I), ("samples", len(raw)),
                      ("files", "vdw_isotherm_raw.csv vdw_isotherm_corrected.csv")], stream)
        return EXIT_OK

    c = cfg["surface"]
    if c["nQ"] < 2 or c["nI"] < 1:
        raise UsageError("surface grid needs nQ >= 2 and nI >= 1")
    qs = np.geomspace(c["Q_min_reduced"] * crit.Q_c, c["Q_max_reduced"] * crit.Q_c, c["nQ"])
    Is = np.linspace(c["I_min_reduced"] * crit.I_c, c["I_max_reduced"] * crit.I_c, c["nI"])
    rows = surface_grid(model, qs, Is)
    out_io.write_text(outdir / "vdw_surface.csv", out_io.csv_text(("Q", "P", "I"), rows))
    _print_block([("rows", len(rows)), ("file", "vdw_surface.csv")], stream)
    return EXIT_OK


def run_catastrophe(args, cfg, stream) -> int:
    _override(cfg, "vdw", args, ("a", "b", "R"))
    _override(cfg, "catastrophe", args, ("P", "Q", "I", "points", "samples", "seed",
                                         "alpha_min", "alpha_max", "beta_min", "beta_max"))
    model = VdWModel(**cfg["vdw"])
    c = cfg["catastrophe"]
    outdir = Path(args.out)

    if args.grid:
        if c["points"] < 1:
            raise UsageError("grid needs at least one point per axis")
        alphas = np.linspace(c["alpha_min"], c["alpha_max"], c["points"])
        betas = np.linspace(c["beta_min"], c["beta_max"], c["points"])
        rows = cat.bifurcation_grid(alphas, betas)
        out_io.write_text(outdir / "cusp_grid.csv", out_io.csv_text(("alpha", "beta", "root_count"), rows))
        _print_block([("rows", len(rows)), ("file", "cusp_grid.csv")], stream)
        return EXIT_OK

    if args.check:
        if c["samples"] < 1:
            raise UsageError("--samples must be positive")
        worst, worst_rt = cat.check_surface(model, c["samples"], np.random.default_rng(c["seed"]))
        ok = worst <= CHECK_TOL and worst_rt <= cat.ROUND_TRIP_TOL
        _print_block([("samples", c["samples"]), ("max_scaled_residual", worst),
                      ("max_round_trip_error", worst_rt), ("validation", "pass" if ok else "FAIL")], stream)
        return EXIT_OK if ok else EXIT_NUMERIC

    crit = critical_point(model)
    s = StatePoint(c.get("P", crit.P_c), c.get("Q", crit.Q_c), c.get("I", crit.I_c))
    cc = cat.phi(model, s)
    _print_block([("x", cc.x), ("alpha", cc.alpha), ("beta", cc.beta),
                  ("surface_residual", cat.surface_residual(cc)),
                  ("potential", cat.cusp_potential(cc))], stream)
    return EXIT_OK


def main(argv=None, stream=None, err=None) -> int:
    stream = sys.stdout if stream is None else stream
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        cfg = load_config(args.config)
        runner = {"carnot": run_carnot, "vdw": run_vdw, "catastrophe": run_catastrophe}[args.command]
        return runner(args, cfg, stream)
    except (UsageError, RoegenError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except (TypeError, ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
