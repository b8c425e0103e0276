import math
from typing import *

import numpy as np
import pandas as pd

from openspectral.specfun import Order, bessel_j, bessel_zeros, first_zero
from openspectral.utils import HorizonError, frame_to_csv
from .domain import Domain, ZeroSetDescription
from .quadrature import ball_exponential_integral

DEFAULT_BALL_RTOL = 1e-9
SMALL_RADIUS = 1e-6


def ball_volume(d: int) -> float:
    """``|B_d| = pi^(d/2) / Gamma(d/2 + 1)``."""
    return math.pi ** (d / 2) / math.gamma(d / 2 + 1)


def default_ball_tolerance(rho: float) -> float:
    """Absolute radius tolerance used when none is given: ``1e-9 * max(1, |xi|)``."""
    return DEFAULT_BALL_RTOL * max(1.0, rho)


class BallZeroSet(ZeroSetDescription):
    r"""
    Zero set of the unit ball transform: concentric spheres of radius
    ``r_k = z_k / (2 pi)`` over the positive zeros ``z_k`` of ``J_{d/2}``.

    Args:
        dimension (:obj:`int`): the dimension ``d``.
        root_radii (:obj:`Sequence[float]`): ascending radii, complete up to ``horizon``.
        horizon (:obj:`float`): the enumeration horizon.
    """
    def __init__(self, dimension: int, root_radii: Sequence[float], horizon: float, **kwargs):
        super().__init__(dimension=dimension, horizon=float(horizon))
        self.root_radii = np.asarray(root_radii, dtype=float)
        if len(self.root_radii) and self.root_radii[0] <= 0:
            raise ValueError("root radii must be positive")
        if np.any(np.diff(self.root_radii) <= 0):
            raise ValueError("root radii must be strictly increasing")

    def __len__(self):
        return len(self.root_radii)

    def _radius(self, xi: Sequence) -> float:
        xi = self._check(list(xi))
        rho = float(np.linalg.norm([float(c) for c in xi]))
        if rho > self.horizon:
            raise HorizonError("|xi| = {:.6g} exceeds the zero set horizon {:.6g}".format(rho, self.horizon))
        return rho

    def nearest_radius_gap(self, rho: float) -> float:
        if not len(self.root_radii):
            return math.inf
        i = np.searchsorted(self.root_radii, rho)
        neighbours = self.root_radii[max(i - 1, 0): i + 1]
        return float(np.min(np.abs(neighbours - rho)))

    def contains(self, xi: Sequence, tol: Optional[float] = None) -> bool:
        rho = self._radius(xi)
        tol = default_ball_tolerance(rho) if tol is None else tol
        return self.nearest_radius_gap(rho) <= tol

    def distance_to(self, xi: Sequence) -> float:
        return self.nearest_radius_gap(self._radius(xi))

    def count_up_to(self, radius: float, tol: float = 0.0) -> int:
        """Number of root radii in ``(0, radius + tol]``; ``tol`` matches the membership tolerance."""
        if radius > self.horizon:
            raise HorizonError("radius {:.6g} exceeds the zero set horizon {:.6g}".format(radius, self.horizon))
        return int(np.searchsorted(self.root_radii, radius + tol, side="right"))

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"index": np.arange(1, len(self.root_radii) + 1), "radius": self.root_radii},
                            columns=["index", "radius"])

    def to_csv(self, path: Optional[str] = None) -> str:
        return frame_to_csv(self.to_frame(), path)

    def __repr__(self):
        return "BallZeroSet(dimension={}, radii={}, horizon={:g})".format(
            self.dimension, len(self.root_radii), self.horizon)


class UnitBall(Domain):
    r"""
    The closed unit ball ``B_d``. Its transform is radial,
    ``hat chi(xi) = |xi|^{-d/2} J_{d/2}(2 pi |xi|)``.
    """
    def __init__(self, dimension: Optional[int] = 2, **kwargs):
        kwargs.pop("name", None)
        super().__init__(name="ball", dimension=dimension, **kwargs)
        self.order = Order.from_dimension(self.dimension)

    def volume(self) -> float:
        return ball_volume(self.dimension)

    def radial_profile(self, rho: float) -> float:
        """``f(rho) = rho^{-d/2} J_{d/2}(2 pi rho)``, continuous at 0 with ``f(0) = |B_d|``."""
        if rho < 0:
            raise ValueError("'{}' is not a valid radius".format(rho))
        if rho < SMALL_RADIUS:
            # two terms of the series; rho^(-nu) itself would overflow for tiny rho
            return self.volume() * (1 - (math.pi * rho) ** 2 / (self.order.nu + 1))
        return rho ** (-self.order.nu) * bessel_j(self.order, 2 * math.pi * rho)

    def transform_value(self, xi: Sequence) -> complex:
        xi = self.check_vector(xi)
        rho = float(np.linalg.norm([float(c) for c in xi]))
        return complex(self.radial_profile(rho))

    def zero_set(self, horizon: float) -> BallZeroSet:
        horizon = float(horizon)
        if not horizon > 0:
            raise ValueError("'{}' is not a valid horizon: must be positive".format(horizon))
        table = bessel_zeros(self.order, 2 * math.pi * horizon, **self.zero_options)
        radii = [z / (2 * math.pi) for z in table.zeros]
        return BallZeroSet(self.dimension, [r for r in radii if r <= horizon], horizon)

    def separation_radius(self) -> float:
        return first_zero(self.order, **self.zero_options) / (2 * math.pi)

    def _quadrature(self, delta: np.ndarray, resolution: int) -> complex:
        return ball_exponential_integral(delta, resolution)
