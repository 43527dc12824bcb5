"""
Command-line front end for the Legendre transform.

Usage:
    manage.py legendre transform --fn quadratic --domain -2:2 --grid 5
    manage.py legendre check involution --fn exp --domain -1:1 --tol 1e-6
    manage.py legendre check area --fn shifted-quadratic --box 1:-1 --xs 0.5,0.25
    manage.py legendre check oracle --fn exp --samples 1601 --grid 33
    manage.py legendre check all --fn cosh
    manage.py legendre catalog

Exit codes: 0 on success, 1 when a check fails, 2 on usage or input errors.
"""

import argparse
import csv
import io
import json
import logging
import re
from typing import List, Tuple

from django.core.management.base import BaseCommand, CommandError, CommandParser

from conjugates.catalog import CATALOG, parse_function
from conjugates.exceptions import InvalidInterval, LegendreError, describe
from conjugates.models import CheckName, CheckReport, ConvexModel, Interval
from conjugates.services import CheckService, TransformService

# argparse only treats plain numbers like "-2" as values; "-2:2" and
# "-1,-0.5" would otherwise be read as unknown flags.
NEGATIVE_VALUE = re.compile(r"^-\.?\d")


class ValueParser(CommandParser):
    """CommandParser that accepts values starting with a minus sign."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = NEGATIVE_VALUE


def format_number(value: float) -> str:
    """17 significant digits; negative zero prints as 0."""
    return format(value + 0.0, ".17g")


def _interval(text: str) -> Interval:
    try:
        return Interval.parse(text)
    except InvalidInterval as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _pair(text: str) -> Tuple[float, float]:
    parts = text.split(":")
    try:
        x0, y0 = (float(part) for part in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected 'x0:y0', got {text!r}") from exc
    return x0, y0


def _values(text: str) -> List[float]:
    try:
        return [float(part) for part in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from exc


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from exc
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


class Command(BaseCommand):
    help = "Compute Legendre transforms and verify their identities numerically."

    requires_system_checks = []

    def add_arguments(self, parser):
        """Build the transform / check / catalog grammar."""
        parser._negative_number_matcher = NEGATIVE_VALUE
        from_command_line = parser.called_from_command_line
        commands = parser.add_subparsers(dest="command", required=True, parser_class=ValueParser)

        transform = commands.add_parser(
            "transform", help="Tabulate y, x = g(y), G(y)", called_from_command_line=from_command_line
        )
        self._add_function_arguments(transform)
        transform.add_argument("--grid", type=_positive_int, required=True, help="Number of y values")
        transform.add_argument("--format", choices=["csv", "json"], default="csv")

        commands.add_parser(
            "catalog", help="List the named functions", called_from_command_line=from_command_line
        )

        check = commands.add_parser(
            "check", help="Run a named invariant check", called_from_command_line=from_command_line
        )
        checks = check.add_subparsers(dest="check", required=True, parser_class=ValueParser)
        for name in (
            CheckName.INVOLUTION,
            CheckName.FENCHEL_YOUNG,
            CheckName.DERIVATIVE,
            CheckName.TANGENT,
            CheckName.SHIFT,
        ):
            sub = checks.add_parser(name.value, help=name.label, called_from_command_line=from_command_line)
            self._add_function_arguments(sub)
            sub.add_argument("--tol", type=float, default=None)

        area = checks.add_parser(
            CheckName.AREA.value, help=CheckName.AREA.label, called_from_command_line=from_command_line
        )
        self._add_function_arguments(area)
        area.add_argument("--box", type=_pair, default=None, help="Mixed-sign box corner x0:y0")
        area.add_argument("--xs", type=_values, default=None, help="Comma-separated x values")
        area.add_argument("--tol", type=float, default=None)

        oracle = checks.add_parser(
            CheckName.ORACLE.value, help=CheckName.ORACLE.label, called_from_command_line=from_command_line
        )
        self._add_function_arguments(oracle)
        oracle.add_argument("--samples", type=_positive_int, default=1601)
        oracle.add_argument("--grid", type=_positive_int, default=33)

        everything = checks.add_parser(
            "all", help="Every check with default settings", called_from_command_line=from_command_line
        )
        self._add_function_arguments(everything)

    @staticmethod
    def _add_function_arguments(parser):
        parser.add_argument("--fn", required=True, help="Catalog name or poly:c0,c1,...")
        parser.add_argument("--domain", type=_interval, default=None, help="Domain a:b")

    def handle(self, *args, **options):
        """Dispatch the subcommand; numerical errors exit with status 2."""
        if options["verbosity"] >= 2:
            logging.getLogger("conjugates").setLevel(logging.DEBUG)

        try:
            if options["command"] == "catalog":
                self._catalog()
            elif options["command"] == "transform":
                self._transform(self._model(options), options["grid"], options["format"])
            else:
                self._check(self._model(options), options)
        except LegendreError as exc:
            raise CommandError(describe(exc), returncode=2) from exc

    @staticmethod
    def _model(options) -> ConvexModel:
        return parse_function(options["fn"]).to_model(options["domain"])

    def _catalog(self):
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["name", "lo", "hi", "description"])
        for entry in CATALOG.values():
            writer.writerow(
                [
                    entry.name,
                    format_number(entry.default_domain.lo),
                    format_number(entry.default_domain.hi),
                    entry.description,
                ]
            )
        self.stdout.write(buffer.getvalue(), ending="")

    def _transform(self, model: ConvexModel, grid: int, output_format: str):
        points = [
            TransformService.conjugate_point(model, y)
            for y in CheckService.interior_grid(model, grid, conjugate_side=True)
        ]
        if output_format == "json":
            payload = {
                "function": model.name,
                "domain": model.domain.as_list(),
                "points": [{"y": p.y, "x": p.x, "G": p.G} for p in points],
            }
            self.stdout.write(json.dumps(payload, indent=2))
            return

        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["y", "x", "G"])
        for point in points:
            writer.writerow([format_number(point.y), format_number(point.x), format_number(point.G)])
        self.stdout.write(buffer.getvalue(), ending="")

    def _check(self, model: ConvexModel, options):
        name = options["check"]
        if name == "all":
            reports = CheckService.run_all(model)
            self.stdout.write(json.dumps([report.as_dict() for report in reports], indent=2))
        else:
            reports = [self._run_check(model, name, options)]
            self.stdout.write(json.dumps(reports[0].as_dict(), indent=2))

        failed = [report.check_name for report in reports if not report.passed]
        if failed:
            raise CommandError(f"check failed: {', '.join(failed)} on {model}", returncode=1)

    @staticmethod
    def _run_check(model: ConvexModel, name: str, options) -> CheckReport:
        if name == CheckName.INVOLUTION:
            return CheckService.involution(model, options["tol"])
        if name == CheckName.FENCHEL_YOUNG:
            return CheckService.fenchel_young(model, options["tol"])
        if name == CheckName.DERIVATIVE:
            return CheckService.conjugate_derivative(model, options["tol"])
        if name == CheckName.TANGENT:
            return CheckService.tangent_duality(model, options["tol"])
        if name == CheckName.SHIFT:
            return CheckService.shift_covariance(model, options["tol"])
        if name == CheckName.AREA:
            return CheckService.area(model, box=options["box"], xs=options["xs"], tol=options["tol"])
        return CheckService.oracle(model, samples=options["samples"], grid=options["grid"])
