"""Deterministic quadrature rules on the interval, the sphere and the ball."""
import math
from functools import lru_cache
from typing import *

import numpy as np
from scipy import special


@lru_cache(maxsize=32)
def unit_interval_rule(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights on ``[0, 1]``."""
    t, w = special.roots_legendre(n)
    return (t + 1) / 2, w / 2


@lru_cache(maxsize=32)
def sphere_rule(d: int, n: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Product rule on the unit sphere ``S^{d-1}``; weights sum to its area.

    ``d = 2`` uses ``n`` equispaced angles. For ``d >= 3`` the sphere is sliced
    along the first coordinate ``t``: the surface measure is
    ``(1 - t^2)^((d-3)/2) dt dsigma_{d-2}``, integrated in ``t`` with
    Gauss-Jacobi nodes and recursively on ``S^{d-2}``.
    """
    if d == 1:
        return np.array([[-1.0], [1.0]]), np.array([1.0, 1.0])
    if d == 2:
        theta = 2 * math.pi * np.arange(n) / n
        return np.stack([np.cos(theta), np.sin(theta)], axis=1), np.full(n, 2 * math.pi / n)
    a = (d - 3) / 2
    t, wt = special.roots_jacobi(n, a, a)
    sub_dirs, sub_w = sphere_rule(d - 1, n)
    scale = np.sqrt(1 - t ** 2)
    dirs = np.concatenate([
        np.column_stack([np.full(len(sub_dirs), ti), si * sub_dirs]) for ti, si in zip(t, scale)
    ])
    weights = np.concatenate([wi * sub_w for wi in wt])
    return dirs, weights


def ball_exponential_integral(delta: np.ndarray, n: int, max_nodes: Optional[int] = 2 ** 28) -> complex:
    """
    ``int_{B_d} exp(-2 pi i x.delta) dx`` in mapped polar coordinates:
    Gauss-Legendre in the radius (with the ``rho^{d-1}`` Jacobian) times
    :func:`sphere_rule` in the direction.
    """
    d = len(delta)
    n_dirs = 2 if d == 1 else n ** (d - 1)
    if n * n_dirs > max_nodes:
        raise ValueError("resolution {} needs {} nodes in dimension {}, above the limit {}".format(
            n, n * n_dirs, d, max_nodes))
    rho, w_rho = unit_interval_rule(n)
    dirs, w_dir = sphere_rule(d, n)
    projection = dirs @ delta
    total = 0j
    for r, wr in zip(rho, w_rho):
        total += wr * r ** (d - 1) * np.dot(w_dir, np.exp(-2j * math.pi * r * projection))
    return complex(total)


def cube_exponential_integral(delta: np.ndarray, n: int) -> complex:
    """
    ``int_{[0,1]^d} exp(-2 pi i x.delta) dx`` with the tensor-product
    Gauss-Legendre rule; the integrand factorises over coordinates, so the
    tensor sum is evaluated one axis at a time.
    """
    x, w = unit_interval_rule(n)
    value = 1 + 0j
    for component in delta:
        value *= np.dot(w, np.exp(-2j * math.pi * x * component))
    return complex(value)
