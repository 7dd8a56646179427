"""Command-line interface.

Subcommands map one-to-one onto the engine's operations:

    commutator    projected coordinate commutator at one kept-level count
    sweep         commutator reports for every kept-level count 0..N
    spectrum      level energies, degeneracies, and [H, L] = 0
    landau-gauge  momentum-grid convergence study of the same commutator
    crosscheck    grid route vs ladder route at one kept-level count
    dump-matrix   serialize a named operator matrix as JSON

Exit status is 0 exactly when every assertion inside the emitted report
holds, 1 when a report is emitted but fails, 2 for usage errors. Output
is JSON, CSV, or a plain table; the default comes from NCG_DEFAULT_OUTPUT
(table if unset). All runs are single-threaded and deterministic:
identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import fock, ladder, landau_gauge, projection, spectrum
from .serialize import dumps, format_float, render_csv, render_table
from .units import PhysicalUnits, magnetic_length

__all__ = ["RunConfig", "build_parser", "run", "main"]

OUTPUT_FORMATS = ("json", "csv", "table")
ENV_OUTPUT = "NCG_DEFAULT_OUTPUT"
DUMPABLE = ("a", "b", "alpha", "x", "y", "px", "py", "H", "L", "xy-commutator", "projector")

DEFAULT_N = 4
DEFAULT_J = 8
DEFAULT_GRID_M = "32,64,128,256"
DEFAULT_CROSSCHECK_M = 128


@dataclass
class RunConfig:
    """Everything one invocation needs; produced by the parser."""

    command: str
    N: int = DEFAULT_N
    J: int = DEFAULT_J
    keep: Optional[int] = None
    grid_sizes: list[int] = field(default_factory=list)
    k_half_width: float = landau_gauge.DEFAULT_HALF_WIDTH
    units: PhysicalUnits = PhysicalUnits()
    output: str = "table"
    output_explicit: bool = False
    out_path: Optional[str] = None
    op_name: Optional[str] = None
    h_form: str = "ladder"


def _add_unit_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("physical constants")
    group.add_argument("--config", type=str, default=None, metavar="PATH",
                       help="JSON file with any of e, B, c, hbar, m (flags override)")
    for name, text in (
        ("e", "charge"),
        ("B", "magnetic field strength"),
        ("c", "speed of light"),
        ("hbar", "reduced Planck constant"),
        ("m", "particle mass"),
    ):
        group.add_argument(f"--{name}", type=float, default=None, help=f"{text} (default 1)")


def _add_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--output", choices=OUTPUT_FORMATS, default=None,
                        help=f"report format (default ${ENV_OUTPUT} or table)")
    parser.add_argument("--out", dest="out_path", type=str, default=None, metavar="PATH",
                        help="write the report to PATH instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nclandau",
        description="Coordinate commutators in truncated Landau-level spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("commutator", help="projected coordinate commutator")
    p.add_argument("--N", type=int, default=DEFAULT_N, help="highest retained level")
    p.add_argument("--J", type=int, default=DEFAULT_J, help="highest retained degeneracy orbit")
    p.add_argument("--keep", type=int, default=None, help="highest projected level (default N)")
    _add_unit_flags(p)
    _add_output_flags(p)

    p = sub.add_parser("sweep", help="commutator reports for keep = 0..N")
    p.add_argument("--N", type=int, default=DEFAULT_N)
    p.add_argument("--J", type=int, default=DEFAULT_J)
    _add_unit_flags(p)
    _add_output_flags(p)

    p = sub.add_parser("spectrum", help="level energies and degeneracies")
    p.add_argument("--N", type=int, default=DEFAULT_N)
    p.add_argument("--J", type=int, default=DEFAULT_J)
    _add_unit_flags(p)
    _add_output_flags(p)

    p = sub.add_parser("landau-gauge", help="momentum-grid convergence study")
    p.add_argument("--keep", type=int, default=0, help="highest retained level")
    p.add_argument("--grid-M", type=str, default=DEFAULT_GRID_M,
                   help="comma-separated grid sizes (default %(default)s)")
    p.add_argument("--k-range", type=float, default=landau_gauge.DEFAULT_HALF_WIDTH,
                   help="half-width of the momentum grid in guiding-center lengths")
    _add_unit_flags(p)
    _add_output_flags(p)

    p = sub.add_parser("crosscheck", help="grid route vs ladder route")
    p.add_argument("--keep", type=int, default=0)
    p.add_argument("--J", type=int, default=None,
                   help="degeneracy cutoff for the ladder route (default keep+3)")
    p.add_argument("--grid-M", type=str, default=str(DEFAULT_CROSSCHECK_M),
                   help="grid size for the momentum route")
    p.add_argument("--k-range", type=float, default=landau_gauge.DEFAULT_HALF_WIDTH)
    _add_unit_flags(p)
    _add_output_flags(p)

    p = sub.add_parser("dump-matrix", help="serialize one operator matrix (JSON)")
    p.add_argument("--op", choices=DUMPABLE, required=True, help="which operator")
    p.add_argument("--N", type=int, default=DEFAULT_N)
    p.add_argument("--J", type=int, default=DEFAULT_J)
    p.add_argument("--keep", type=int, default=None, help="kept levels (projector only)")
    p.add_argument("--form", choices=ladder.H_FORMS, default="ladder", help="Hamiltonian form")
    _add_unit_flags(p)
    _add_output_flags(p)

    return parser


def _units_from_args(parser: argparse.ArgumentParser, args: argparse.Namespace) -> PhysicalUnits:
    values = {"e": 1.0, "B": 1.0, "c": 1.0, "hbar": 1.0, "m": 1.0}
    if args.config is not None:
        try:
            loaded = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            parser.error(f"--config: cannot read {args.config}: {exc}")
        unknown = set(loaded) - set(values)
        if unknown:
            parser.error(f"--config: unknown constants {sorted(unknown)}")
        values.update(loaded)
    for name in values:
        flag = getattr(args, name)
        if flag is not None:
            values[name] = flag
    try:
        return PhysicalUnits(**values)
    except ValueError as exc:
        parser.error(str(exc))


def _parse_grid_sizes(parser: argparse.ArgumentParser, text: str) -> list[int]:
    try:
        sizes = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        parser.error(f"--grid-M: expected comma-separated integers, got {text!r}")
    # coefficient extraction needs a nonempty grid interior
    if not sizes or any(size < 5 for size in sizes):
        parser.error(f"--grid-M: grid sizes must be >= 5, got {text!r}")
    return sizes


def _resolve_output(args: argparse.Namespace, parser: argparse.ArgumentParser) -> tuple[str, bool]:
    if args.output is not None:
        return args.output, True
    env = os.environ.get(ENV_OUTPUT)
    if env:
        if env not in OUTPUT_FORMATS:
            parser.error(f"{ENV_OUTPUT}={env!r} is not one of {OUTPUT_FORMATS}")
        return env, False
    return "table", False


def config_from_args(parser: argparse.ArgumentParser, args: argparse.Namespace) -> RunConfig:
    output, explicit = _resolve_output(args, parser)
    config = RunConfig(command=args.command, output=output, output_explicit=explicit,
                       out_path=args.out_path, units=_units_from_args(parser, args))

    if args.command in ("commutator", "sweep", "spectrum", "dump-matrix"):
        if args.N < 0:
            parser.error(f"--N must be nonnegative, got {args.N}")
        if args.J < 0:
            parser.error(f"--J must be nonnegative, got {args.J}")
        if args.J < 1 and args.command in ("commutator", "sweep"):
            parser.error(f"--J must be >= 1 for an interior in j, got {args.J}")
        config.N, config.J = args.N, args.J

    if args.command in ("commutator", "dump-matrix"):
        keep = args.keep
        if keep is not None and not 0 <= keep <= args.N:
            parser.error(f"--keep must lie in 0..--N (got --keep {keep}, --N {args.N})")
        config.keep = keep

    if args.command in ("landau-gauge", "crosscheck"):
        if args.keep < 0:
            parser.error(f"--keep must be nonnegative, got {args.keep}")
        config.keep = args.keep
        if args.k_range <= 0:
            parser.error(f"--k-range must be positive, got {args.k_range}")
        config.k_half_width = args.k_range
        config.grid_sizes = _parse_grid_sizes(parser, getattr(args, "grid_M"))

    if args.command == "crosscheck":
        if len(config.grid_sizes) != 1:
            parser.error("--grid-M: crosscheck takes exactly one grid size")
        config.J = args.keep + 3 if args.J is None else args.J
        if config.J < 1:
            parser.error(f"--J must be >= 1, got {config.J}")

    if args.command == "dump-matrix":
        config.op_name = args.op
        config.h_form = args.form
        if args.op == "projector" and config.keep is None:
            parser.error("--keep is required with --op projector")
        if config.output != "json":
            if config.output_explicit:
                parser.error("--output: dump-matrix only emits json")
            config.output = "json"

    return config


# -- command implementations ---------------------------------------------


def _report_table(report: projection.CommutatorReport) -> str:
    head = (
        f"projected coordinate commutator  N={report.cutoffs.landau_cutoff}"
        f" J={report.cutoffs.degeneracy_cutoff} keep={report.keep_levels}"
    )
    rows = [report.csv_row()]
    body = render_table(head, projection.CommutatorReport.csv_header(), rows)
    status = "ok" if report.ok else "FAILED"
    return body + f"status: {status}\n"


def _cmd_commutator(config: RunConfig) -> tuple[int, str]:
    cutoffs = fock.Cutoffs(config.N, config.J)
    keep = config.N if config.keep is None else config.keep
    report = projection.projected_commutator_xy(cutoffs, keep, config.units)
    if config.output == "json":
        text = dumps(report.as_dict()) + "\n"
    elif config.output == "csv":
        text = render_csv(report.csv_header(), [report.csv_row()])
    else:
        text = _report_table(report)
    return (0 if report.ok else 1), text


def _cmd_sweep(config: RunConfig) -> tuple[int, str]:
    cutoffs = fock.Cutoffs(config.N, config.J)
    reports = projection.sweep(cutoffs, config.units)
    ok = all(r.ok for r in reports)
    if config.output == "json":
        payload = {"reports": [r.as_dict() for r in reports], "ok": ok}
        text = dumps(payload) + "\n"
    elif config.output == "csv":
        text = render_csv(projection.CommutatorReport.csv_header(), [r.csv_row() for r in reports])
    else:
        head = f"projected commutator sweep  N={config.N} J={config.J}"
        text = render_table(head, projection.CommutatorReport.csv_header(),
                            [r.csv_row() for r in reports])
        text += f"status: {'ok' if ok else 'FAILED'}\n"
    return (0 if ok else 1), text


def _cmd_spectrum(config: RunConfig) -> tuple[int, str]:
    report = spectrum.verify_spectrum(fock.Cutoffs(config.N, config.J), config.units)
    if config.output == "json":
        text = dumps(report.as_dict()) + "\n"
    elif config.output == "csv":
        text = render_csv(["level", "energy", "multiplicity"], report.table_rows())
    else:
        head = f"level spectrum  N={config.N} J={config.J}  max error {format_float(report.max_abs_error)}"
        text = render_table(head, ["level", "energy", "multiplicity"], report.table_rows())
        text += f"status: {'ok' if report.ok else 'FAILED'}\n"
    return (0 if report.ok else 1), text


def _cmd_landau_gauge(config: RunConfig) -> tuple[int, str]:
    rows = landau_gauge.convergence_study(
        config.keep, config.grid_sizes, config.units, config.k_half_width
    )
    expected = -1j * (config.keep + 1) * magnetic_length(config.units) ** 2
    ok = bool(rows) and rows[-1].abs_error <= 0.01 * abs(expected)
    if config.output == "json":
        payload = {
            "keep": config.keep,
            "expected": [expected.real, expected.imag],
            "rows": [row.as_dict() for row in rows],
            "ok": ok,
        }
        text = dumps(payload) + "\n"
    elif config.output == "csv":
        text = render_csv(landau_gauge.ConvergenceRow.csv_header(), [r.csv_row() for r in rows])
    else:
        head = f"momentum-grid convergence  keep={config.keep}"
        text = render_table(head, landau_gauge.ConvergenceRow.csv_header(),
                            [r.csv_row() for r in rows])
        text += f"status: {'ok' if ok else 'FAILED'}\n"
    return (0 if ok else 1), text


def _cmd_crosscheck(config: RunConfig) -> tuple[int, str]:
    keep = config.keep
    cutoffs = fock.Cutoffs(keep, config.J)
    ladder_report = projection.projected_commutator_xy(cutoffs, keep, config.units)
    grid = landau_gauge.KGrid.centered(config.grid_sizes[0], config.units, config.k_half_width)
    grid_report = landau_gauge.projected_commutator_landau(grid, keep, config.units)
    sym = ladder_report.top_coefficient
    lan = grid_report.top_coefficient
    rel = abs(lan - sym) / abs(sym)
    ok = ladder_report.ok and rel <= 0.01
    payload = {
        "keep": keep,
        "J": config.J,
        "grid_M": config.grid_sizes[0],
        "symmetric_gauge": [sym.real, sym.imag],
        "landau_gauge": [lan.real, lan.imag],
        "relative_difference": rel,
        "ok": ok,
    }
    if config.output == "json":
        text = dumps(payload) + "\n"
    elif config.output == "csv":
        header = ["keep", "J", "grid_M", "sym_re", "sym_im", "lan_re", "lan_im", "rel_diff"]
        row = [keep, config.J, config.grid_sizes[0], sym.real, sym.imag, lan.real, lan.imag, rel]
        text = render_csv(header, [row])
    else:
        lines = [f"gauge crosscheck  keep={keep}"]
        lines.append(f"  ladder route    : {format_float(sym.real)} {format_float(sym.imag)}i")
        lines.append(f"  momentum route  : {format_float(lan.real)} {format_float(lan.imag)}i")
        lines.append(f"  relative diff   : {format_float(rel)}")
        lines.append(f"status: {'ok' if ok else 'FAILED'}")
        text = "\n".join(lines) + "\n"
    return (0 if ok else 1), text


def _cmd_dump_matrix(config: RunConfig) -> tuple[int, str]:
    cutoffs = fock.Cutoffs(config.N, config.J)
    name = config.op_name
    if name == "projector":
        op = projection.projector(cutoffs, config.keep)
    elif name == "xy-commutator":
        x, y = ladder.build_xy(cutoffs, config.units)
        op = fock.commutator(x, y)
    elif name == "H":
        op = ladder.build_H(cutoffs, config.units, form=config.h_form)
    elif name in ("x", "y"):
        op = ladder.build_xy(cutoffs, config.units)[0 if name == "x" else 1]
    elif name in ("px", "py"):
        op = ladder.build_momenta(cutoffs, config.units)[0 if name == "px" else 1]
    elif name == "L":
        op = ladder.build_L(cutoffs, config.units)
    elif name == "a":
        op = ladder.build_a(cutoffs)
    elif name == "b":
        op = ladder.build_b(cutoffs)
    else:  # alpha
        op = ladder.build_alpha(cutoffs)
    return 0, dumps(fock.to_json_dict(op)) + "\n"


_COMMANDS = {
    "commutator": _cmd_commutator,
    "sweep": _cmd_sweep,
    "spectrum": _cmd_spectrum,
    "landau-gauge": _cmd_landau_gauge,
    "crosscheck": _cmd_crosscheck,
    "dump-matrix": _cmd_dump_matrix,
}


def run(config: RunConfig) -> tuple[int, str]:
    """Execute one configuration; returns (exit status, rendered report)."""
    return _COMMANDS[config.command](config)


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = config_from_args(parser, args)
    status, text = run(config)
    if config.out_path:
        Path(config.out_path).write_text(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
