"""Numerical defaults and typed access to the ``LEGENDRE`` settings overrides."""

from typing import Any, Dict

from django.conf import settings

DEFAULTS: Dict[str, Any] = {
    "VALIDATION_SAMPLES": 1001,
    "DERIVATIVE_CROSSCHECK_RTOL": 1e-5,
    "ROOT_XTOL": 1e-12,
    "ROOT_RTOL": 1e-12,
    "ROOT_FTOL": 1e-12,
    "ROOT_MAXITER": 200,
    "QUADRATURE_TOL": 1e-9,
    "QUADRATURE_MAX_DEPTH": 60,
    "QUADRATURE_MIN_DEPTH": 2,
    "INTERIOR_FRACTION": 0.9,
    "CHECK_TOLERANCES": {
        "involution": 1e-6,
        "derivative": 1e-6,
        "fenchel-young": 1e-9,
        "tangent": 1e-9,
        "shift": 1e-12,
        "area": 1e-8,
    },
}


def get_setting(name: str) -> Any:
    """
    Look up a numerical setting, falling back to the built-in default.

    Args:
        name: Key inside ``settings.LEGENDRE``

    Returns:
        The configured value
    """
    configured = getattr(settings, "LEGENDRE", {})
    if name in configured:
        return configured[name]
    return DEFAULTS[name]


def check_tolerance(check_name: str) -> float:
    """Default tolerance for a named check."""
    tolerances = dict(DEFAULTS["CHECK_TOLERANCES"])
    tolerances.update(get_setting("CHECK_TOLERANCES"))
    return float(tolerances[check_name])
