# -*- Mode:Python; indent-tabs-mode:nil; tab-width:4 -*-
#
# Copyright 2021 The tautcoh developers.
#
# This program is free software; you can redistribute it and/or
# modify it under the terms of the GNU Lesser General Public
# License version 3 as published by the Free Software Foundation.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU
# Lesser General Public License for more details.
#
# You should have received a copy of the GNU Lesser General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""Tautological bundle cohomology command line tool.

This is the main entry point for the tautcoh package, invoked when
running `tautcoh` or `python -mtautcoh`. The `compute` command evaluates
a decomposition for the surface described in a configuration file, and
`check` runs the consistency suite.
"""

import argparse
import logging
import sys
from functools import partial
from typing import List, Optional

import tautcoh
import tautcoh.errors
from tautcoh import checker, formulas, kernel_map
from tautcoh.config import ConfigSpec, Mode, QuerySpec, load_config
from tautcoh.reports import QueryEcho, Report
from tautcoh.slots import Slot
from tautcoh.surfaces import SurfaceData

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_CHECK_FAILED = 2


def main():
    """Run the command-line interface."""
    options = _parse_arguments()

    if options.version:
        print(f"tautcoh {tautcoh.__version__}")
        sys.exit()

    if options.debug:
        log_level = logging.DEBUG
    else:
        log_level = logging.INFO

    logging.basicConfig(level=log_level)

    sys.exit(run(options))


def run(options: argparse.Namespace) -> int:
    """Process the parsed command line and emit the report.

    :return: The process exit status.
    """
    try:
        report = _build_report(options)
        _emit(report, options)
    except OSError as err:
        msg = err.strerror
        if err.filename:
            msg = f"{err.filename}: {msg}"
        print(f"Error: {msg}.", file=sys.stderr)
        return EXIT_ERROR
    except tautcoh.errors.TautcohError as err:
        print(f"Error: {err}", file=sys.stderr)
        return EXIT_ERROR

    if report.failed:
        return EXIT_CHECK_FAILED
    return EXIT_OK


def _build_report(options: argparse.Namespace) -> Report:
    config = load_config(options.config) if options.config else None

    if options.command == "check":
        surfaces = _config_surfaces(config)
        outcomes = checker.run_suite(options.suite, surfaces)
        echo = QueryEcho(
            mode=Mode.CHECK.value,
            surface=surfaces[0].name if surfaces else None,
            suite=options.suite,
        )
        return Report.from_outcomes(echo, outcomes)

    if config is None:
        raise tautcoh.errors.InvalidQuery("'compute' requires --config")

    query = _resolve_query(config, options)
    if query.mode == Mode.CHECK:
        surfaces = _config_surfaces(config)
        echo = QueryEcho(mode=query.mode.value, suite=options.suite)
        return Report.from_outcomes(echo, checker.run_suite(options.suite, surfaces))

    if config.surface is None:
        raise tautcoh.errors.InvalidQuery("the configuration has no surface")

    surface = config.surface.to_surface()
    echo = QueryEcho(mode=query.mode.value, n=query.n, k=query.k, surface=surface.name)
    logger.debug("computing %s on %s", query.mode.value, surface.name)
    return _compute(query, surface, echo)


def _config_surfaces(config: Optional[ConfigSpec]) -> List[SurfaceData]:
    if config is None or config.surface is None:
        return []
    return [config.surface.to_surface()]


def _resolve_query(config: ConfigSpec, options: argparse.Namespace) -> QuerySpec:
    if config.query is None:
        if options.mode is None:
            raise tautcoh.errors.InvalidQuery("no mode given")
        query = QuerySpec(mode=options.mode, n=options.n, k=options.k)
    else:
        query = config.query.merged(mode=options.mode, n=options.n, k=options.k)
    return query.resolved()


def _compute(query: QuerySpec, surface: SurfaceData, echo: QueryEcho) -> Report:
    # pylint: disable=too-many-return-statements
    n = query.n or 0

    if query.mode == Mode.SK_TAUT:
        h_la = surface.h(Slot.LA) if query.k == 1 else None
        decomposition = formulas.coh_sk_taut(n, query.k or 0, surface.h(Slot.A), h_la)
        return Report.from_decomposition(echo, decomposition)

    if query.mode in (Mode.S2_N2, Mode.S2_N3, Mode.S2_CONJECTURE):
        args = (surface.h(Slot.O), surface.h(Slot.L), surface.h(Slot.L2))
        if query.mode == Mode.S2_N2:
            decomposition = formulas.coh_s2_n2(*args)
        elif query.mode == Mode.S2_N3:
            decomposition = formulas.coh_s2_n3(*args)
        else:
            decomposition = formulas.coh_s2_conjecture(n, *args)
        return Report.from_decomposition(echo, decomposition)

    if query.mode == Mode.SECTIONS_TWISTED:
        decomposition, kernel = kernel_map.sections_s2_twisted(n, surface)
        return Report.from_decomposition(echo, decomposition, kernel=kernel)

    if query.mode == Mode.EULER_K:
        euler = formulas.euler_K_twisted(
            n, surface.h(Slot.A), surface.h(Slot.L2A), surface.h(Slot.L2A2)
        )
        return Report.from_euler(echo, euler)

    bounds = formulas.coh_s2_twisted_bounds(n, surface)
    return Report.from_decomposition(echo, bounds.decomposition, bounds=bounds)


def _emit(report: Report, options: argparse.Namespace) -> None:
    output_format = options.format or ("json" if options.output else "text")
    if output_format == "json":
        content = report.to_json()
    else:
        content = report.to_text()

    if options.output:
        with open(options.output, "w") as output_file:
            output_file.write(content)
        logger.debug("report written to %s", options.output)
    else:
        print(content, end="")


class _ArgumentParser(argparse.ArgumentParser):
    """Argument parser exiting with the usage error status."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"Error: {message}.", file=sys.stderr)
        sys.exit(EXIT_ERROR)


def _parse_arguments() -> argparse.Namespace:
    prog = "tautcoh"
    description = (
        "Evaluate cohomology decompositions of symmetric powers of "
        "tautological bundles on Hilbert schemes of points on surfaces."
    )

    parser = _ArgumentParser(prog=prog, description=description, add_help=False)
    parser.add_argument(
        "-h",
        "--help",
        action="help",
        default=argparse.SUPPRESS,
        help="Show this help message and exit.",
    )
    parser.add_argument(
        "--debug",
        action="store_true",
        help="Enable debug messages.",
    )
    parser.add_argument(
        "--version",
        action="store_true",
        help="Display the tautcoh version and exit.",
    )

    common_parser = _ArgumentParser(add_help=False)
    common_parser.add_argument(
        "-h",
        "--help",
        action="help",
        default=argparse.SUPPRESS,
        help="Show this help message and exit.",
    )
    common_parser.add_argument(
        "--config",
        metavar="PATH",
        help="The surface and query description, in JSON or YAML.",
    )
    common_parser.add_argument(
        "--output",
        metavar="PATH",
        help="Write the report to a file instead of the standard output.",
    )
    common_parser.add_argument(
        "--format",
        choices=["json", "text"],
        help="The report format. Default is 'text', or 'json' with --output.",
    )
    common_parser.add_argument(
        "--suite",
        choices=[suite.value for suite in checker.Suite],
        default=checker.Suite.DEFAULT.value,
        help="The collection of checks to run. Default is 'default'.",
    )

    subparsers = parser.add_subparsers(dest="command")

    add_subparser = partial(
        subparsers.add_parser, add_help=False, parents=[common_parser]
    )

    compute_parser = add_subparser(
        "compute", help="Compute a decomposition for the configured surface."
    )
    compute_parser.add_argument(
        "--mode",
        choices=[mode.value for mode in Mode],
        help="What to compute, overriding the configured query.",
    )
    compute_parser.add_argument(
        "--n",
        type=int,
        help="The number of points, overriding the configured query.",
    )
    compute_parser.add_argument(
        "--k",
        type=int,
        help="The symmetric power for 'sk_taut', overriding the configured query.",
    )

    add_subparser("check", help="Run the consistency checks.")

    options = parser.parse_args()
    if not options.version and options.command is None:
        parser.error("a command is required")

    return options
