import math
import numbers
from typing import *

import numpy as np

from openspectral.utils import DimensionMismatchError


def is_exact(xi: Sequence) -> bool:
    """True when every coordinate is an exact rational (``int`` or ``Fraction``)."""
    return all(isinstance(c, numbers.Rational) and not isinstance(c, bool) for c in xi)


class ZeroSetDescription(object):
    """
    The base class of zero set descriptions ``Z_D = {xi : hat chi_D(xi) = 0}``.

    Args:
        dimension (:obj:`int`): the ambient dimension.
        horizon (:obj:`float`): largest ``|xi|`` the description is complete for.
    """
    def __init__(self, dimension: int, horizon: Optional[float] = math.inf, **kwargs):
        self.dimension = dimension
        self.horizon = horizon

    def contains(self, xi: Sequence, tol: Optional[float] = None) -> bool:
        """
        Whether ``xi`` lies in the zero set.

        Args:
            xi (:obj:`Sequence`): a vector of length ``dimension``.
            tol (:obj:`float`, optional): membership tolerance; ``None`` picks the description's default.

        Returns:
            :obj:`bool`: membership.
        """
        raise NotImplementedError

    def distance_to(self, xi: Sequence) -> float:
        """Euclidean distance from ``xi`` to the zero set."""
        raise NotImplementedError

    def _check(self, xi: Sequence) -> Sequence:
        if len(xi) != self.dimension:
            raise DimensionMismatchError("vector of length {} queried against a {}-dimensional zero set".format(
                len(xi), self.dimension))
        return xi


class Domain(object):
    """
    The base class of domains ``D`` whose exponential families are studied.

    Args:
        name (:obj:`str`, optional): the registry name of the domain.
        dimension (:obj:`int`, optional): the dimension ``d >= 1``. Defaults to 2.
        resolution (:obj:`int`, optional): default quadrature resolution. Defaults to 64.
        zero_options (:obj:`dict`, optional): keyword arguments forwarded to the Bessel zero enumeration.
    """
    def __init__(
        self,
        name: Optional[str] = "base",
        dimension: Optional[int] = 2,
        resolution: Optional[int] = 64,
        zero_options: Optional[dict] = None,
        **kwargs
    ):
        if isinstance(dimension, bool) or not isinstance(dimension, (int, np.integer)) or dimension < 1:
            raise ValueError("'{}' is not a valid dimension".format(dimension))
        self.name = name
        self.dimension = int(dimension)
        self.resolution = resolution
        self.zero_options = dict(zero_options or {})

    @property
    def token(self) -> str:
        """The ``kind:d`` form used on the command line."""
        return "{}:{}".format(self.name, self.dimension)

    def __repr__(self):
        return "{}(dimension={})".format(type(self).__name__, self.dimension)

    def __eq__(self, other):
        return type(self) is type(other) and self.dimension == other.dimension

    def __hash__(self):
        return hash((type(self).__name__, self.dimension))

    def check_vector(self, xi: Sequence) -> Sequence:
        xi = list(xi)
        if len(xi) != self.dimension:
            raise DimensionMismatchError("vector of length {} given for {}".format(len(xi), self.token))
        if not is_exact(xi) and not all(math.isfinite(float(c)) for c in xi):
            raise ValueError("vector {} is not finite".format(xi))
        return xi

    def volume(self) -> float:
        """``|D|``, which is also ``hat chi_D(0)``."""
        raise NotImplementedError

    def transform_value(self, xi: Sequence) -> complex:
        """
        The Fourier transform of the indicator, ``hat chi_D(xi) = int_D exp(-2 pi i x.xi) dx``.

        Args:
            xi (:obj:`Sequence`): a finite vector of length ``dimension``.

        Returns:
            :obj:`complex`: the transform value.
        """
        raise NotImplementedError

    def zero_set(self, horizon: float) -> ZeroSetDescription:
        """Describe ``Z_D`` completely for ``|xi| <= horizon``."""
        raise NotImplementedError

    def separation_radius(self) -> float:
        """``inf {|xi| : hat chi_D(xi) = 0}``, the minimal separation of an orthogonal frequency set."""
        raise NotImplementedError

    def inner_product_numeric(self, lam: Sequence, lam_prime: Sequence, resolution: Optional[int] = None) -> complex:
        """
        Quadrature approximation of ``<e_lam, e_lam'> = int_D conj(e_lam(x)) e_lam'(x) dx``
        (conjugate-linear in the first slot), which equals ``hat chi_D(lam - lam')``.

        Args:
            lam (:obj:`Sequence`): the first frequency.
            lam_prime (:obj:`Sequence`): the second frequency.
            resolution (:obj:`int`, optional): nodes per coordinate direction, at least 8.

        Returns:
            :obj:`complex`: the approximate inner product.
        """
        resolution = self.resolution if resolution is None else resolution
        if resolution < 8:
            raise ValueError("'{}' is not a valid resolution: must be >= 8".format(resolution))
        lam = self.check_vector(lam)
        lam_prime = self.check_vector(lam_prime)
        delta = np.array([float(a) - float(b) for a, b in zip(lam, lam_prime)])
        return self._quadrature(delta, int(resolution))

    def _quadrature(self, delta: np.ndarray, resolution: int) -> complex:
        raise NotImplementedError
