"""
Lower bounds for the number of distinct distances determined by ``n`` points.

All evaluators use unit constants: the constants in the published bounds are
not stated explicitly, so results are meant for growth comparisons only. The
``n^(4/5) / log^c n`` planar bound is left out because its ``c`` is not given.
"""
from typing import *


def _check(d: int, n: int):
    if d < 1 or n < 1:
        raise ValueError("'d={}, n={}' are not valid: both must be positive".format(d, n))


def _planar(d: int):
    if d != 2:
        raise ValueError("'{}' is not a valid dimension for a planar bound".format(d))


def dimension_exponent(d: int) -> float:
    """``3 / (3d - 2)``, the exponent of the ``d``-dimensional bound."""
    return 3 / (3 * d - 2)


def erdos_bound(d: int, n: int) -> float:
    """``n^(3/(3d-2))``, the ``d``-dimensional distinct-distance lower bound."""
    _check(d, n)
    return float(n) ** dimension_exponent(d)


def erdos_planar_bound(d: int, n: int) -> float:
    """``n^(1/2)``."""
    _check(d, n)
    _planar(d)
    return float(n) ** 0.5


def moser_bound(d: int, n: int) -> float:
    """``n^(2/3)``."""
    _check(d, n)
    _planar(d)
    return float(n) ** (2 / 3)


def clarkson_bound(d: int, n: int) -> float:
    """``n^(3/4)``, equal to :func:`erdos_bound` at ``d = 2``."""
    _check(d, n)
    _planar(d)
    return float(n) ** 0.75


LOWER_BOUNDS = {
    "erdos": erdos_planar_bound,
    "moser": moser_bound,
    "clarkson": clarkson_bound,
    "dimension": erdos_bound,
}


def lower_bound(name: str, d: int, n: int) -> float:
    if name.lower() not in LOWER_BOUNDS:
        raise ValueError("'{}' is not a valid lower bound, expected one of {}".format(name, sorted(LOWER_BOUNDS)))
    return LOWER_BOUNDS[name.lower()](d, n)


def required_exponent(d: int) -> float:
    """
    ``1/d``: any exponent above it already contradicts linear growth, since a
    spectrum has about ``R^d`` points in ``B(R)``.
    """
    if d < 1:
        raise ValueError("'{}' is not a valid dimension".format(d))
    return 1 / d


def spectrum_distance_demand(d: int, R: float, density_constant: Optional[float] = 1.0) -> float:
    """
    ``(c R^d)^(3/(3d-2))``: the distinct distances forced on a set with
    ``c R^d`` points in ``B(R)``. For ``c = 1`` this is ``R^(3d/(3d-2))``.
    """
    if not R > 0:
        raise ValueError("'{}' is not a valid radius: must be positive".format(R))
    if not density_constant > 0:
        raise ValueError("'{}' is not a valid density constant: must be positive".format(density_constant))
    return (density_constant * float(R) ** d) ** dimension_exponent(d)
