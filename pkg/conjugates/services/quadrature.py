"""Quadrature service: adaptive Simpson integration."""

import math
from typing import Optional

from conjugates.conf import get_setting
from conjugates.exceptions import MaxDepthExceeded, NonFiniteValue
from conjugates.models import RealFunction


class QuadratureService:
    """Service for definite integrals of smooth functions."""

    @staticmethod
    def integrate(
        fn: RealFunction,
        lo: float,
        hi: float,
        tol: Optional[float] = None,
    ) -> float:
        """
        Integrate fn from lo to hi with adaptive Simpson.

        Reversed limits follow the usual orientation sign.

        Args:
            fn: Integrand, finite on the interval
            lo: Lower limit
            hi: Upper limit
            tol: Absolute error target (defaults to QUADRATURE_TOL)

        Returns:
            Estimate of the signed integral

        Raises:
            NonFiniteValue: fn returned NaN or an infinity
            MaxDepthExceeded: refinement hit QUADRATURE_MAX_DEPTH
        """
        if tol is None:
            tol = get_setting("QUADRATURE_TOL")
        if lo == hi:
            return 0.0
        if lo > hi:
            return -QuadratureService.integrate(fn, hi, lo, tol)

        fa = _evaluate(fn, lo)
        fm = _evaluate(fn, (lo + hi) / 2)
        fb = _evaluate(fn, hi)
        whole = _simpson(lo, hi, fa, fm, fb)
        return _refine(
            fn,
            lo,
            hi,
            fa,
            fm,
            fb,
            whole,
            tol,
            depth=0,
            min_depth=get_setting("QUADRATURE_MIN_DEPTH"),
            max_depth=get_setting("QUADRATURE_MAX_DEPTH"),
        )


def _evaluate(fn: RealFunction, x: float) -> float:
    value = fn(x)
    if not math.isfinite(value):
        raise NonFiniteValue(x, value, "integrand")
    return value


def _simpson(a: float, b: float, fa: float, fm: float, fb: float) -> float:
    return (b - a) / 6 * (fa + 4 * fm + fb)


def _refine(fn, a, b, fa, fm, fb, whole, tol, depth, min_depth, max_depth) -> float:
    # Left half is always summed before the right half.
    m = (a + b) / 2
    flm = _evaluate(fn, (a + m) / 2)
    frm = _evaluate(fn, (m + b) / 2)
    left = _simpson(a, m, fa, flm, fm)
    right = _simpson(m, b, fm, frm, fb)
    delta = left + right - whole
    if depth >= min_depth and abs(delta) <= 15 * tol:
        return left + right + delta / 15
    if depth >= max_depth:
        raise MaxDepthExceeded(
            f"adaptive Simpson did not reach tol {tol!r} on [{a!r}, {b!r}] "
            f"within depth {max_depth}"
        )
    return _refine(fn, a, m, fa, flm, fm, left, tol / 2, depth + 1, min_depth, max_depth) + _refine(
        fn, m, b, fm, frm, fb, right, tol / 2, depth + 1, min_depth, max_depth
    )
