import itertools
import math
from dataclasses import dataclass, asdict
from fractions import Fraction
from typing import *

import numpy as np
import pandas as pd
from sklearn.neighbors import KDTree

from openspectral.utils import logger, BudgetExceededError, dump_json
from .point_set import PointSet

DISTANCE_SLACK = 1e-12
MAX_GRID_POINTS = 2 ** 26


@dataclass
class PackingReport(object):
    """
    Result of the disjoint-balls volume argument on ``Lambda cap B(R)``.

    ``bound = ((R + r/2) / (r/2))^d`` is evaluated in exact arithmetic. ``ok`` is
    the conjunction of ``separation_ok`` (every pair at distance ``>= r``) and
    ``count_ok`` (``count <= bound``).
    """
    count: int
    bound: float
    min_pairwise_distance: float
    separation_ok: bool
    count_ok: bool
    ok: bool
    R: float
    r: float

    def to_dict(self) -> Dict:
        return asdict(self)

    def to_json(self) -> str:
        return dump_json(self.to_dict())


def packing_bound(d: int, R: float, r: float) -> Fraction:
    """The exact value of ``((R + r/2) / (r/2))^d``."""
    if not r > 0 or not R > 0:
        raise ValueError("'R={}, r={}' are not valid radii: both must be positive".format(R, r))
    R, r = Fraction(R), Fraction(r)
    return ((2 * R + r) / r) ** d


def _inside_ball(point: Sequence, R: float) -> bool:
    if all(isinstance(c, (int, Fraction)) for c in point):
        return sum(Fraction(c) ** 2 for c in point) <= Fraction(R) ** 2
    return math.sqrt(sum(float(c) ** 2 for c in point)) <= R + DISTANCE_SLACK


def packing_bound_check(lambda_set: PointSet, R: float, r: float) -> PackingReport:
    """
    Check the two consequences of orthogonality used in the packing argument:
    separation by at least ``r`` and at most ``((R + r/2)/(r/2))^d`` points in ``B(R)``.

    Args:
        lambda_set (:obj:`PointSet`): points inside the closed ball ``B(0, R)``.
        R (:obj:`float`): the ball radius.
        r (:obj:`float`): the separation radius.

    Returns:
        :obj:`PackingReport`
    """
    bound = packing_bound(lambda_set.dimension, R, r)
    outside = [p for p in lambda_set if not _inside_ball(p, R)]
    if outside:
        raise ValueError("{} point(s) lie outside B(0, {}), e.g. {}".format(len(outside), R, outside[0]))
    min_distance = lambda_set.min_pairwise_distance()
    separation_ok = min_distance >= r - DISTANCE_SLACK
    count_ok = len(lambda_set) <= bound
    if not separation_ok:
        logger.warning("minimum distance {:.6g} is below the separation radius {:.6g}".format(min_distance, r))
    return PackingReport(
        count=len(lambda_set),
        bound=float(bound),
        min_pairwise_distance=min_distance,
        separation_ok=separation_ok,
        count_ok=count_ok,
        ok=separation_ok and count_ok,
        R=float(R),
        r=float(r),
    )


def max_gap_radius(
    lambda_set: PointSet,
    region_radius: float,
    grid_step: float,
    max_grid_points: Optional[int] = MAX_GRID_POINTS,
) -> float:
    """
    Largest distance from a grid centre in ``B(0, region_radius)`` to the nearest
    point of ``lambda_set``. The grid is the cubic lattice of spacing ``grid_step``
    clipped to the ball, so the result is within ``grid_step * sqrt(d)`` of the
    true supremum.

    Args:
        lambda_set (:obj:`PointSet`): a nonempty point set.
        region_radius (:obj:`float`): radius of the scanned region.
        grid_step (:obj:`float`): grid spacing, below ``region_radius``.
        max_grid_points (:obj:`int`, optional): guard on the cubic grid size.

    Returns:
        :obj:`float`: the empirical gap radius.
    """
    if len(lambda_set) == 0:
        raise ValueError("max_gap_radius needs a nonempty point set")
    if not 0 < grid_step < region_radius:
        raise ValueError("'{}' is not a valid grid step for region radius {}".format(grid_step, region_radius))
    d = lambda_set.dimension
    half = int(math.floor(region_radius / grid_step))
    axis = grid_step * np.arange(-half, half + 1)
    if len(axis) ** d > max_grid_points:
        raise BudgetExceededError("a grid of {}^{} points exceeds the limit {}".format(len(axis), d, max_grid_points))

    tree = KDTree(lambda_set.as_array())
    if d == 1:
        slices = [(np.zeros((1, 0)), x0) for x0 in axis]
    else:
        rest = np.stack(np.meshgrid(*([axis] * (d - 1)), indexing="ij"), axis=-1).reshape(-1, d - 1)
        slices = [(rest, x0) for x0 in axis]

    gap = 0.0
    for rest, x0 in slices:
        centres = np.column_stack([np.full(len(rest), x0), rest])
        centres = centres[np.linalg.norm(centres, axis=1) <= region_radius + DISTANCE_SLACK]
        if not len(centres):
            continue
        dist, _ = tree.query(centres, k=1)
        gap = max(gap, float(dist.max()))
    return gap


def density_profile(lambda_set: PointSet, radii: Sequence[float], grid_step: float) -> pd.DataFrame:
    """
    Counting and gap statistics of ``lambda_set`` on growing balls ``B(0, R)``.

    Columns: ``R``, ``count`` (points in ``B(R)``), ``density`` (``count / R^d``),
    ``max_gap`` (:func:`max_gap_radius`) and ``gap_error_bound`` (``grid_step * sqrt(d)``).
    """
    d = lambda_set.dimension
    norms = lambda_set.norms()
    rows = []
    for R in radii:
        count = int(np.sum(norms <= R + DISTANCE_SLACK))
        rows.append({
            "R": float(R),
            "count": count,
            "density": count / R ** d,
            "max_gap": max_gap_radius(lambda_set, R, grid_step),
            "gap_error_bound": grid_step * math.sqrt(d),
        })
    return pd.DataFrame(rows, columns=["R", "count", "density", "max_gap", "gap_error_bound"])


def integer_lattice_points(d: int, R: float) -> PointSet:
    """``Z^d cap B(0, R)`` with exact integer coordinates, in lexicographic order."""
    if d < 1 or R < 0:
        raise ValueError("'d={}, R={}' is not a valid lattice region".format(d, R))
    limit = int(math.floor(R))
    R2 = Fraction(R) ** 2
    points = [p for p in itertools.product(range(-limit, limit + 1), repeat=d) if sum(c * c for c in p) <= R2]
    return PointSet(points, dimension=d, label="Z^{} in B({:g})".format(d, R))
