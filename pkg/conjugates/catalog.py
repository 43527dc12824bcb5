"""Named catalog of convex functions and the ``--fn`` spec parser."""

import math
from dataclasses import dataclass
from functools import partial
from typing import Dict, Optional

from numpy.polynomial import Polynomial

from conjugates.exceptions import InvalidFunctionSpec, UnknownFunction
from conjugates.models import ConvexModel, Interval, RealFunction
from conjugates.services import ModelService

POLY_PREFIX = "poly:"


@dataclass(frozen=True)
class CatalogEntry:
    """A function F with its closed-form derivative f."""

    name: str
    F: RealFunction
    f: RealFunction
    default_domain: Optional[Interval]
    description: str

    def to_model(self, domain: Optional[Interval] = None) -> ConvexModel:
        """
        Validate the entry on ``domain`` (or its default domain).

        Raises:
            InvalidFunctionSpec: no domain given and the entry has no default
            NonMonotoneDerivative: f is not strictly increasing on the domain
        """
        domain = domain or self.default_domain
        if domain is None:
            raise InvalidFunctionSpec(f"{self.name} has no default domain; pass --domain a:b")
        return ModelService.make_model(self.F, self.f, domain, name=self.name)


def _half_square(x: float) -> float:
    return x * x / 2


def _identity(x: float) -> float:
    return x


def _quarter_fourth(x: float) -> float:
    return x**4 / 4


def _cube(x: float) -> float:
    return x**3


def _shifted_half_square(x: float) -> float:
    return x * x / 2 - x


def _minus_one(x: float) -> float:
    return x - 1


def _x_log_x(x: float) -> float:
    return x * math.log(x) - x


CATALOG: Dict[str, CatalogEntry] = {
    entry.name: entry
    for entry in (
        CatalogEntry(
            "quadratic",
            _half_square,
            _identity,
            Interval(-2.0, 2.0),
            "x^2/2, the kinetic-energy form; its own conjugate",
        ),
        CatalogEntry("exp", math.exp, math.exp, Interval(-1.0, 1.0), "e^x; conjugate y*ln(y) - y"),
        CatalogEntry(
            "quartic",
            _quarter_fourth,
            _cube,
            Interval(0.1, 2.0),
            "x^4/4; conjugate (3/4)*y^(4/3), kept away from the singular y = 0",
        ),
        CatalogEntry("cosh", math.cosh, math.sinh, Interval(-1.5, 1.5), "cosh(x); derivative sinh(x)"),
        CatalogEntry(
            "shifted-quadratic",
            _shifted_half_square,
            _minus_one,
            Interval(0.0, 3.0),
            "x^2/2 - x; f crosses zero at x = 1, used for mixed-sign boxes",
        ),
        CatalogEntry(
            "xlogx",
            _x_log_x,
            math.log,
            Interval(0.2, 3.0),
            "x*ln(x) - x; conjugate e^y, the partner of exp",
        ),
    )
}


def _polynomial_evaluator(polynomial: Polynomial, x: float) -> float:
    return float(polynomial(x))


def parse_function(spec: str, domain: Optional[Interval] = None) -> CatalogEntry:
    """
    Resolve a catalog name or ``poly:c0,c1,...,ck`` to a CatalogEntry.

    Polynomial coefficients are in ascending degree and f is the exact
    derivative. Polynomials are validated on ``domain`` when one is given.

    Args:
        spec: Catalog name or polynomial spec
        domain: Domain to validate a polynomial on

    Returns:
        CatalogEntry

    Raises:
        UnknownFunction: spec names nothing in the catalog
        InvalidFunctionSpec: polynomial coefficients do not parse
        NonMonotoneDerivative: polynomial is not strictly convex on domain
    """
    if spec in CATALOG:
        return CATALOG[spec]
    if not spec.startswith(POLY_PREFIX):
        known = ", ".join(sorted(CATALOG))
        raise UnknownFunction(f"unknown function {spec!r}; expected one of {known} or poly:c0,c1,...")

    try:
        coefficients = [float(part) for part in spec[len(POLY_PREFIX):].split(",")]
    except ValueError as exc:
        raise InvalidFunctionSpec(f"cannot parse polynomial coefficients in {spec!r}") from exc
    if not all(math.isfinite(c) for c in coefficients):
        raise InvalidFunctionSpec(f"polynomial coefficients must be finite in {spec!r}")

    polynomial = Polynomial(coefficients)
    derivative = polynomial.deriv()
    entry = CatalogEntry(
        name=spec,
        F=partial(_polynomial_evaluator, polynomial),
        f=partial(_polynomial_evaluator, derivative),
        default_domain=None,
        description=f"polynomial with coefficients {coefficients}",
    )
    if domain is not None:
        entry.to_model(domain)
    return entry
