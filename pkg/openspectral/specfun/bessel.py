"""
Bessel functions of the first kind for integer and half-integer orders.

Two evaluation regimes are used:

* ``x <= max(12, 2*nu)``: the ascending power series, summed in exact rational
  arithmetic so the only rounding is the final conversion and the prefactor;
* beyond that: :func:`scipy.special.jv`, whose AMOS backend switches to the
  large-argument (Hankel) expansion.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import *

import numpy as np
from scipy import special

SERIES_CUTOFF = 12.0
MAX_ARGUMENT = 1e8


@dataclass(frozen=True, order=True)
class Order(object):
    """
    Order ``nu`` of a Bessel function, stored as ``2*nu`` so that ``nu = d/2`` is exact.

    Args:
        twice_nu (:obj:`int`): twice the order, at least 1.
    """
    twice_nu: int

    def __post_init__(self):
        if isinstance(self.twice_nu, bool) or not isinstance(self.twice_nu, (int, np.integer)):
            raise ValueError("'{}' is not a valid order: twice_nu must be an integer".format(self.twice_nu))
        if self.twice_nu < 1:
            raise ValueError("'{}' is not a valid order: twice_nu must be >= 1".format(self.twice_nu))
        object.__setattr__(self, "twice_nu", int(self.twice_nu))

    @classmethod
    def from_dimension(cls, d: int) -> "Order":
        """The order ``d/2`` of the ball transform in dimension ``d``."""
        return cls(d)

    @property
    def nu(self) -> float:
        return self.twice_nu / 2

    @property
    def is_half_integer(self) -> bool:
        return self.twice_nu % 2 == 1

    def shifted(self, steps: Optional[int] = 1) -> "Order":
        """The order ``nu + steps``."""
        return Order(self.twice_nu + 2 * steps)

    def __str__(self):
        if self.is_half_integer:
            return "{}/2".format(self.twice_nu)
        return str(self.twice_nu // 2)


def _check_argument(x) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError("'{}' is not a valid argument: must be finite".format(x))
    if x < 0:
        raise ValueError("'{}' is not a valid argument: must be nonnegative".format(x))
    if x > MAX_ARGUMENT:
        raise ValueError("argument {} exceeds the certified range (<= {:g})".format(x, MAX_ARGUMENT))
    return x


def series_cutoff(order: Order) -> float:
    return max(SERIES_CUTOFF, float(order.twice_nu))


def bessel_j_series(order: Order, x: float) -> float:
    """
    Power-series oracle ``J_nu(x) = (x/2)^nu / Gamma(nu+1) * sum_k (-x^2/4)^k / (k! (nu+1)_k)``.

    The sum is carried out exactly on the binary value of ``x``; only the
    prefactor is rounded. Usable for any ``x`` but slow for large arguments.
    """
    x = _check_argument(x)
    if x == 0.0:
        return 0.0
    q = -Fraction(x) ** 2 / 4
    total = Fraction(1)
    term = Fraction(1)
    k = 0
    # once k(k+nu) > 2|q| each term at most halves the previous one, so the tail is below the last term
    while True:
        k += 1
        term = term * q / (k * Fraction(order.twice_nu + 2 * k, 2))
        total += term
        if k * (k + order.nu) > 2 * abs(q) and abs(term) <= abs(total) * Fraction(1, 2 ** 70):
            break
    if x / 2 == 0.0:
        # subnormal x: the prefactor underflows
        return 0.0
    prefactor = math.exp(order.nu * math.log(x / 2) - math.lgamma(order.nu + 1))
    return prefactor * float(total)


def bessel_j(order: Order, x: float) -> float:
    """
    Evaluate ``J_nu(x)`` for ``x >= 0``.

    Args:
        order (:obj:`Order`): the order.
        x (:obj:`float`): a finite nonnegative argument.

    Returns:
        :obj:`float`: ``J_nu(x)``; ``0`` at ``x = 0`` since ``nu > 0``.
    """
    x = _check_argument(x)
    if x == 0.0:
        return 0.0
    if x <= series_cutoff(order):
        return bessel_j_series(order, x)
    return float(special.jv(order.nu, x))


def bessel_j_array(order: Order, xs) -> np.ndarray:
    """Vectorised :func:`bessel_j`; identical values element by element."""
    xs = np.asarray(xs, dtype=float)
    if not np.all(np.isfinite(xs)):
        raise ValueError("arguments must be finite")
    if np.any(xs < 0):
        raise ValueError("arguments must be nonnegative")
    if np.any(xs > MAX_ARGUMENT):
        raise ValueError("arguments exceed the certified range (<= {:g})".format(MAX_ARGUMENT))
    out = np.empty_like(xs)
    small = xs <= series_cutoff(order)
    out[small] = [bessel_j(order, x) for x in xs[small]]
    out[~small] = special.jv(order.nu, xs[~small])
    return out


def spherical_closed_form(order: Order, x: float) -> float:
    """
    Closed trigonometric form for half-integer orders,
    ``J_{n+1/2}(x) = sqrt(2x/pi) * j_n(x)`` with ``j_n`` the spherical Bessel function.
    """
    if not order.is_half_integer:
        raise ValueError("closed form only exists for half-integer orders, got {}".format(order))
    x = _check_argument(x)
    if x == 0.0:
        return 0.0
    n = (order.twice_nu - 1) // 2
    return math.sqrt(2 * x / math.pi) * float(special.spherical_jn(n, x))
