import math
from dataclasses import dataclass
from functools import lru_cache
from typing import *

import numpy as np
import pandas as pd
from scipy.optimize import brentq

from openspectral.utils import logger, ConvergenceError, frame_to_csv
from .bessel import Order, bessel_j, bessel_j_array

DEFAULT_SCAN_STEP = min(1.0, math.pi / 8)
DEFAULT_XTOL = 1e-13
DEFAULT_ACCEPT_TOL = 1e-9
DEFAULT_MAX_ITER = 200


@dataclass(frozen=True)
class ZeroTable(object):
    """
    Positive zeros of ``J_nu`` up to a horizon.

    Args:
        order (:obj:`Order`): the order of the Bessel function.
        zeros (:obj:`Tuple[float]`): ascending positive zeros.
        upper_limit (:obj:`float`): enumeration horizon; every zero in ``(0, upper_limit]`` is listed.
    """
    order: Order
    zeros: Tuple[float, ...]
    upper_limit: float

    def __post_init__(self):
        zeros = tuple(float(z) for z in self.zeros)
        object.__setattr__(self, "zeros", zeros)
        if zeros and zeros[0] <= 0:
            raise ValueError("zeros must be positive, got {}".format(zeros[0]))
        if any(b <= a for a, b in zip(zeros, zeros[1:])):
            raise ValueError("zeros must be strictly increasing")
        if zeros and zeros[-1] > self.upper_limit:
            raise ValueError("zero {} lies beyond the horizon {}".format(zeros[-1], self.upper_limit))

    def __len__(self):
        return len(self.zeros)

    def __iter__(self):
        return iter(self.zeros)

    def gaps(self) -> np.ndarray:
        """Differences of consecutive zeros; they approach pi."""
        return np.diff(np.asarray(self.zeros))

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"index": np.arange(1, len(self.zeros) + 1), "zero": list(self.zeros)},
                            columns=["index", "zero"])

    def to_csv(self, path: Optional[str] = None) -> str:
        return frame_to_csv(self.to_frame(), path)


def mcmahon_zero(order: Order, k: int) -> float:
    """
    McMahon's large-``k`` expansion of the ``k``-th positive zero of ``J_nu``,
    ``beta - (mu-1)/(8 beta) - 4(mu-1)(7mu-31)/(3 (8 beta)^3)`` with
    ``beta = (k + nu/2 - 1/4) pi`` and ``mu = 4 nu^2``.
    """
    if k < 1:
        raise ValueError("'{}' is not a valid zero index".format(k))
    beta = (k + order.nu / 2 - 0.25) * math.pi
    mu = 4 * order.nu ** 2
    return beta - (mu - 1) / (8 * beta) - 4 * (mu - 1) * (7 * mu - 31) / (3 * (8 * beta) ** 3)


def _asymptotic_count(order: Order, upper_limit: float) -> int:
    # the k-th zero is close to (k + nu/2 - 1/4) pi; solve for the last k below the limit
    k = max(0, int(math.floor(upper_limit / math.pi - order.nu / 2 + 0.25)) + 1)
    while k > 0 and mcmahon_zero(order, k) > upper_limit:
        k -= 1
    return k


def _scan_grid(upper_limit: float, scan_step: float) -> np.ndarray:
    # grid points sit at half steps so that exact zeros such as k*pi (order 1/2) avoid grid nodes;
    # the grid runs to the first node past upper_limit, so brackets do not depend on the limit
    n = int(math.floor(upper_limit / scan_step - 0.5)) + 2
    return scan_step * (np.arange(n) + 0.5)


@lru_cache(maxsize=128)
def _zero_tuple(twice_nu: int, upper_limit: float, scan_step: float, xtol: float,
                accept_tol: float, max_iter: int) -> Tuple[float, ...]:
    order = Order(twice_nu)
    f = lambda x: bessel_j(order, x)
    xs = _scan_grid(upper_limit, scan_step)
    values = bessel_j_array(order, xs)
    signs = np.sign(values)

    roots = [float(x) for x in xs[signs == 0]]
    brackets = np.nonzero(signs[:-1] * signs[1:] < 0)[0]
    for i in brackets:
        a, b = float(xs[i]), float(xs[i + 1])
        try:
            root, info = brentq(f, a, b, xtol=xtol, maxiter=max_iter, full_output=True, disp=False)
        except (RuntimeError, ValueError) as e:
            raise ConvergenceError("root refinement failed on [{}, {}] for order {}: {}".format(a, b, order, e))
        if not info.converged:
            raise ConvergenceError("root refinement did not converge on [{}, {}] for order {} after {} iterations".format(
                a, b, order, info.iterations))
        residual = abs(f(root))
        if residual > accept_tol:
            raise ConvergenceError("refined root {} of order {} has residual {:.3g} > {:.3g}".format(
                root, order, residual, accept_tol))
        roots.append(float(root))
    return tuple(sorted(r for r in roots if r <= upper_limit))


def bessel_zeros(
    order: Order,
    upper_limit: float,
    scan_step: Optional[float] = DEFAULT_SCAN_STEP,
    xtol: Optional[float] = DEFAULT_XTOL,
    accept_tol: Optional[float] = DEFAULT_ACCEPT_TOL,
    max_iter: Optional[int] = DEFAULT_MAX_ITER,
    **kwargs
) -> ZeroTable:
    """
    Enumerate every positive zero of ``J_nu`` in ``(0, upper_limit]``.

    Brackets come from sign changes on a uniform grid of spacing ``scan_step``.
    For ``nu >= 1/2`` consecutive zeros are at least pi apart, so a step below
    pi puts at most one zero in each cell and the scan cannot miss any. Each
    bracket is refined with Brent's method.

    Args:
        order (:obj:`Order`): the order.
        upper_limit (:obj:`float`): the horizon, positive.
        scan_step (:obj:`float`, optional): grid spacing, must be below pi. Defaults to pi/8.
        xtol (:obj:`float`, optional): absolute root accuracy. Defaults to 1e-13.
        accept_tol (:obj:`float`, optional): largest accepted ``|J_nu(root)|``. Defaults to 1e-9.
        max_iter (:obj:`int`, optional): iteration budget per bracket. Defaults to 200.

    Returns:
        :obj:`ZeroTable`: the zeros.
    """
    upper_limit = float(upper_limit)
    if not math.isfinite(upper_limit) or upper_limit <= 0:
        raise ValueError("'{}' is not a valid upper limit: must be positive".format(upper_limit))
    if not 0 < scan_step < math.pi:
        raise ValueError("'{}' is not a valid scan step: must lie in (0, pi)".format(scan_step))
    zeros = _zero_tuple(order.twice_nu, upper_limit, float(scan_step), float(xtol), float(accept_tol), int(max_iter))

    expected = _asymptotic_count(order, upper_limit)
    if abs(expected - len(zeros)) > 1:
        logger.warning("order {}: found {} zeros below {:g}, asymptotic count predicts {}".format(
            order, len(zeros), upper_limit, expected))
    logger.debug("order {}: {} zeros in (0, {:g}]".format(order, len(zeros), upper_limit))
    return ZeroTable(order=order, zeros=zeros, upper_limit=upper_limit)


def zero_count(order: Order, upper_limit: float, **kwargs) -> int:
    """Number of positive zeros of ``J_nu`` in ``(0, upper_limit]``."""
    return len(bessel_zeros(order, upper_limit, **kwargs))


def first_zero(order: Order, **kwargs) -> float:
    """The smallest positive zero of ``J_nu``, found by doubling the horizon."""
    limit = 2 * math.pi
    while True:
        table = bessel_zeros(order, limit, **kwargs)
        if len(table):
            return table.zeros[0]
        limit *= 2
