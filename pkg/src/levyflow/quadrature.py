"""Graded-mesh quadrature for radially singular jump-measure integrands.

The radial profiles in this package behave like ``s**(-1-alpha)`` at zero;
after the usual second-order compensation the integrands are ``O(s**(1-alpha))``
near the origin, integrable but steep.  The integrator therefore works on
dyadic levels accumulating at zero (mesh points ``upper * 2**-j``), applies
Gauss-Legendre panels per level, and estimates the remaining mass below the
last level from the observed geometric decay of level contributions.

Panels are additionally capped at a fraction of an ``oscillation`` length
scale so that symbols ``1 - cos(s*t)`` with large ``t`` stay resolved.
"""

from __future__ import annotations

import numpy as np

_GAUSS_NODES, _GAUSS_WEIGHTS = np.polynomial.legendre.leggauss(12)


class QuadratureError(RuntimeError):
    """Raised when an integral fails to converge; carries the residual."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


def gauss_panel(fn, a, b, oscillation=None):
    """Integrate ``fn`` over ``[a, b]``, splitting to resolve oscillations.

    ``fn`` must be vectorized.  ``oscillation`` is the shortest wavelength
    present in the integrand; panels are kept below a quarter of it.
    """
    width = b - a
    if width <= 0.0:
        return 0.0
    n_sub = 1
    if oscillation is not None and np.isfinite(oscillation) and oscillation > 0.0:
        n_sub = max(1, int(np.ceil(width / (0.25 * oscillation))))
        n_sub = min(n_sub, 20000)
    edges = np.linspace(a, b, n_sub + 1)
    mids = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1:] - edges[:-1])
    pts = mids[:, None] + half[:, None] * _GAUSS_NODES[None, :]
    vals = fn(pts.ravel()).reshape(pts.shape)
    return float(np.sum(half[:, None] * _GAUSS_WEIGHTS[None, :] * vals))


def graded_integral_to_zero(fn, upper, tol=1e-8, oscillation=None, max_levels=60):
    """``\\int_0^upper fn(s) ds`` for integrands integrably singular at 0.

    Stops once the per-level contributions decay geometrically and the
    extrapolated tail toward zero is below ``tol``; the tail estimate is
    added to the returned value.
    """
    if upper <= 0.0:
        return 0.0
    total = 0.0
    hi = float(upper)
    prev = None
    for level in range(max_levels):
        lo = hi * 0.5
        part = gauss_panel(fn, lo, hi, oscillation=oscillation)
        total += part
        if prev is not None and abs(prev) > 0.0:
            ratio = abs(part) / abs(prev)
            if ratio < 0.95:
                tail = abs(part) * ratio / (1.0 - ratio)
                if tail < tol:
                    total += np.sign(part) * tail if part != 0.0 else 0.0
                    return total
        prev = part
        hi = lo
    raise QuadratureError(
        f"graded quadrature did not converge in {max_levels} levels",
        residual=prev,
    )


def integral_to_infinity(fn, lower, tol=1e-10, oscillation=None, max_doublings=80):
    """``\\int_lower^inf fn(s) ds`` by doubling panels; needs decay at infinity."""
    total = 0.0
    lo = float(lower)
    largest = 0.0
    for _ in range(max_doublings):
        hi = 2.0 * lo
        part = gauss_panel(fn, lo, hi, oscillation=oscillation)
        total += part
        largest = max(largest, abs(part))
        if abs(part) < tol * max(1.0, largest):
            return total
        lo = hi
    raise QuadratureError(
        "tail quadrature did not converge; integrand decays too slowly",
        residual=part,
    )


def geometric_cells(lower, upper, n_cells):
    """Log-spaced cell edges on ``[lower, upper]``."""
    return np.geomspace(lower, upper, n_cells + 1)
