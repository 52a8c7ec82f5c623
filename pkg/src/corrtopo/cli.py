"""Command-line front end.

Subcommands::

    corrtopo sweep     --family general_flip --x 0.7853981634 [--grid ...] [--out DIR]
    corrtopo pulse     --eps 2 --v0 1 [--check]
    corrtopo nonlocal  --v0 1 --dt 0.4 [--check]
    corrtopo phasecopy --v0 1 --dt 1.0471975512 [--check]
    corrtopo evolve    --potential "family=case1_diag v0=1" --dt 3.14 [--steps 4]

Exit codes: 0 success, 1 assertion failure (``--check`` /
``--assert-alternation``), 2 usage error. All flags take plain reals in
radians / hbar = 1 units. The CLI performs no arithmetic beyond formatting;
every printed number comes from a library operation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import closedform, model, report
from .energy import expectation
from .entangle import concurrence_pure, concurrence_wootters, reduced_pair_density
from .evolve import evolve_first_order, trajectory
from .scenarios import run_nonlocal, run_phase_copy, run_pulse
from .topo import DEFAULT_GRID, GridSpec, alternation_check, lattice_sites, sweep, zero_loci


def _parse_grid(text: str) -> GridSpec:
    parts = text.split(",")
    if len(parts) != 6:
        raise ValueError("grid must be emin,emax,kmin,kmax,ne,nk")
    emin, emax, kmin, kmax = (float(p) for p in parts[:4])
    ne, nk = int(parts[4]), int(parts[5])
    return GridSpec(emin, emax, kmin, kmax, ne, nk)


def cmd_sweep(args) -> int:
    try:
        grid = _parse_grid(args.grid) if args.grid else DEFAULT_GRID
        field = sweep(args.family, args.x, grid, v0=args.v0)
        loci = zero_loci(args.family, grid)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    sites_by_locus = {
        locus.name: lattice_sites(args.family, args.x, locus) for locus in loci
    }
    alternation = {name: alternation_check(sites) for name, sites in sites_by_locus.items()}

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    report.write_field_csv(out / "field.csv", field)
    report.write_pgm(out / "heatmap.pgm", field)
    report.write_loci_csv(out / "loci.csv", loci)
    report.write_sites_csv(out / "sites.csv", sites_by_locus)
    report.write_alternation_json(out / "alternation.json", alternation)
    report.render_field_figure(out / "figure.png", field, loci, sites_by_locus)

    for name in ("field.csv", "heatmap.pgm", "loci.csv", "sites.csv", "alternation.json", "figure.png"):
        print(f"wrote {out / name}")
    failed = False
    for name, rep in alternation.items():
        status = "PASS" if rep.passed else "FAIL"
        note = " (vacuous)" if rep.vacuous else ""
        print(f"alternation {name}: {status}{note} - {rep.reason}")
        failed = failed or not rep.passed
    if args.assert_alternation and failed:
        print("alternation assertion failed", file=sys.stderr)
        return 1
    return 0


def _print_scenario(rep, checks, do_check: bool) -> int:
    print(report.dumps_json(rep.to_dict()))
    if not do_check:
        return 0
    failures = [msg for ok, msg in checks if not ok]
    for msg in failures:
        print(f"check failed: {msg}", file=sys.stderr)
    return 1 if failures else 0


def cmd_pulse(args) -> int:
    try:
        rep = run_pulse(args.eps, args.v0)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    checks = [
        (abs(rep.extras["bell_fidelity"] - 1.0) <= 1e-12, "Bell fidelity != 1"),
        (abs(rep.energy_before + args.eps / 2.0) <= 1e-12, "initial expectation != -eps/2"),
        (abs(rep.energy_after) <= 1e-12, "final expectation != 0"),
        (rep.concurrence >= 1.0 - 1e-9, "final state not maximally entangled"),
    ]
    return _print_scenario(rep, checks, args.check)


def cmd_nonlocal(args) -> int:
    rep = run_nonlocal(args.v0, args.dt)
    checks = [
        (
            abs(rep.concurrence - rep.extras["predicted_pair_concurrence"]) <= 1e-9,
            "pair concurrence deviates from closed-form prediction |cos(2*v0*dt)|",
        ),
        (abs(rep.extras["qubit3_purity"] - 1.0) <= 1e-10, "qubit-3 marginal not pure"),
        (rep.extras["qubit3_marginal_error"] <= 1e-10, "qubit-3 marginal moved"),
    ]
    return _print_scenario(rep, checks, args.check)


def cmd_phasecopy(args) -> int:
    try:
        rep = run_phase_copy(args.v0, args.dt)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    checks = [
        (rep.concurrence <= 1e-9, "state did not stay separable"),
        (rep.extras["schmidt"][1] <= 1e-10, "second Schmidt coefficient too large"),
    ]
    return _print_scenario(rep, checks, args.check)


def cmd_evolve(args) -> int:
    if (args.potential is None) == (args.config is None):
        print("error: provide exactly one of --potential or --config", file=sys.stderr)
        return 2
    try:
        if args.potential is not None:
            specs = [model.parse_potential(args.potential)]
        else:
            lines = Path(args.config).read_text(encoding="utf-8").splitlines()
            specs = [
                model.parse_potential(line)
                for line in lines
                if line.strip() and not line.lstrip().startswith("#")
            ]
            if not specs:
                raise ValueError(f"config file {args.config} contains no jobs")
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    for spec in specs:
        v = model.build_potential(spec)
        dim = spec.dim
        h0 = np.zeros((dim, dim), dtype=complex)
        psi0 = (
            model.initial_two_qubit_state() if dim == 4 else model.initial_three_qubit_state()
        )
        if args.dt == 0:
            samples = [(0.0, psi0)]
        elif args.first_order:
            samples = [
                (args.dt * k / args.steps, evolve_first_order(psi0, h0, v, args.dt * k / args.steps))
                for k in range(args.steps + 1)
            ]
        else:
            samples = trajectory(psi0, h0, v, args.dt, args.steps)

        rows = []
        for t, psi in samples:
            conc = (
                concurrence_pure(psi)
                if dim == 4
                else concurrence_wootters(reduced_pair_density(psi))
            )
            rows.append(
                {
                    "t": report.jnum(t),
                    "potential": model.format_potential(spec),
                    "amplitudes": report.jamps(psi),
                    "concurrence": report.jnum(conc),
                    "expectation": report.jnum(expectation(v, psi)),
                }
            )
        for row in rows:
            print(report.dumps_json_line(row))
        if args.plot:
            report.render_trajectory_figure(args.plot, rows)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="corrtopo",
        description="Interacting-qubit simulator: sweeps, scenarios and evolutions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sweep", help="map concurrence and expectation over (eta, kappa)")
    p.add_argument("--family", required=True, choices=[model.GENERAL_DIAG, model.GENERAL_FLIP])
    p.add_argument("--x", type=float, required=True, help="accumulated phase x = V0*dt")
    p.add_argument("--grid", default=None, help="emin,emax,kmin,kmax,ne,nk (default [-pi,pi]^2, 201x201)")
    p.add_argument("--v0", type=float, default=1.0, help="potential amplitude for the expectation map")
    p.add_argument("--out", default="out", help="output directory")
    p.add_argument("--assert-alternation", action="store_true", help="exit 1 if site kinds fail to alternate")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("pulse", help="short-pulse Bell-state generation")
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--v0", type=float, required=True)
    p.add_argument("--check", action="store_true")
    p.set_defaults(func=cmd_pulse)

    p = sub.add_parser("nonlocal", help="Bell pair with ancilla-coupled second qubit")
    p.add_argument("--v0", type=float, required=True)
    p.add_argument("--dt", type=float, required=True)
    p.add_argument("--check", action="store_true")
    p.set_defaults(func=cmd_nonlocal)

    p = sub.add_parser("phasecopy", help="identical phase imprinting on both qubits")
    p.add_argument("--v0", type=float, required=True)
    p.add_argument("--dt", type=float, required=True)
    p.add_argument("--check", action="store_true")
    p.set_defaults(func=cmd_phasecopy)

    p = sub.add_parser("evolve", help="evolve the canonical state under any potential")
    p.add_argument("--potential", default=None, help='e.g. "family=general_flip v0=1 eta=1.5708 kappa=1.5708"')
    p.add_argument("--config", default=None, help="file with one potential spec per line (batch mode)")
    p.add_argument("--dt", type=float, required=True)
    p.add_argument("--steps", type=int, default=1)
    p.add_argument("--first-order", action="store_true", help="truncated propagator I - i*t*H per sample")
    p.add_argument("--plot", default=None, help="also render concurrence/expectation vs t to this file")
    p.set_defaults(func=cmd_evolve)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    return args.func(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
