import math
from fractions import Fraction
from typing import *
import numpy as np

from .domain import Domain, ZeroSetDescription, is_exact
from .quadrature import cube_exponential_integral

DEFAULT_CUBE_TOL = 1e-9


def _distance_to_nonzero_integer(c: float) -> float:
    n = round(c)
    if n == 0:
        return 1 - abs(c)
    return abs(c - n)


class CubeZeroSet(ZeroSetDescription):
    r"""
    Zero set of the unit cube transform: the union of the hyperplanes
    ``{xi : xi_i = z}`` over coordinates ``i`` and nonzero integers ``z``.
    The rule is symbolic, so the horizon is infinite.
    """
    def __init__(self, dimension: int, **kwargs):
        super().__init__(dimension=dimension, horizon=math.inf)

    def contains(self, xi: Sequence, tol: Optional[float] = None) -> bool:
        xi = self._check(list(xi))
        if is_exact(xi):
            # exact rationals: no tolerance involved
            return any(c != 0 and c.denominator == 1 for c in map(Fraction, xi))
        tol = DEFAULT_CUBE_TOL if tol is None else tol
        return any(round(float(c)) != 0 and abs(float(c) - round(float(c))) <= tol for c in xi)

    def distance_to(self, xi: Sequence) -> float:
        xi = self._check(list(xi))
        return min(_distance_to_nonzero_integer(float(c)) for c in xi)

    def __repr__(self):
        return "CubeZeroSet(dimension={})".format(self.dimension)


class UnitCube(Domain):
    r"""
    The unit cube ``Q_d = [0, 1]^d``; ``Z^d`` is one of its spectra.
    """
    def __init__(self, dimension: Optional[int] = 2, **kwargs):
        kwargs.pop("name", None)
        super().__init__(name="cube", dimension=dimension, **kwargs)

    def volume(self) -> float:
        return 1.0

    def transform_value(self, xi: Sequence) -> complex:
        r"""
        ``prod_j (1 - exp(-2 pi i xi_j)) / (2 pi i xi_j) = prod_j exp(-pi i xi_j) sinc(xi_j)``,
        each factor being 1 at ``xi_j = 0``. Exact-rational input with a nonzero
        integer coordinate returns an exact zero.
        """
        xi = self.check_vector(xi)
        if is_exact(xi) and any(c != 0 and Fraction(c).denominator == 1 for c in xi):
            return 0j
        x = np.array([float(c) for c in xi])
        return complex(np.prod(np.exp(-1j * math.pi * x) * np.sinc(x)))

    def zero_set(self, horizon: Optional[float] = math.inf) -> CubeZeroSet:
        if not horizon > 0:
            raise ValueError("'{}' is not a valid horizon: must be positive".format(horizon))
        return CubeZeroSet(self.dimension)

    def separation_radius(self) -> float:
        return 1.0

    def _quadrature(self, delta: np.ndarray, resolution: int) -> complex:
        return cube_exponential_integral(delta, resolution)
