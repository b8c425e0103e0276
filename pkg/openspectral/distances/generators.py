import itertools
import math
from dataclasses import dataclass
from math import comb
from typing import *

import numpy as np
from tqdm import tqdm

from openspectral.ortho import PointSet
from openspectral.utils import logger, BudgetExceededError
from .summary import distinct_distances, DEFAULT_CLUSTER_TOL

MAX_SUBSET_SIZE = 12
DEFAULT_SEARCH_BUDGET = 10 ** 6


class Generator(object):
    """
    The base class of planar configuration families explored by :func:`min_distinct_search`.

    Args:
        name (:obj:`str`, optional): registry name.
        cluster_tol (:obj:`float`, optional): tolerance for families with irrational coordinates.
    """
    mode = "exact"

    def __init__(self, name: Optional[str] = "base", cluster_tol: Optional[float] = DEFAULT_CLUSTER_TOL, **kwargs):
        self.name = name
        self.cluster_tol = cluster_tol

    def size(self, n: int) -> int:
        """Number of configurations :meth:`configurations` yields for ``n`` points."""
        raise NotImplementedError

    def configurations(self, n: int) -> Iterator[PointSet]:
        raise NotImplementedError

    def count(self, points: PointSet) -> int:
        return distinct_distances(points, mode=self.mode, tol=self.cluster_tol).distinct_count


class RegularPolygon(Generator):
    """The regular ``n``-gon on the unit circle and, for ``n >= 4``, the regular ``(n-1)``-gon with its centre."""
    mode = "clustered"

    def __init__(self, **kwargs):
        kwargs.pop("name", None)
        super().__init__(name="regular_polygon", **kwargs)

    @staticmethod
    def polygon(k: int, centre: Optional[bool] = False) -> PointSet:
        theta = 2 * math.pi * np.arange(k) / k
        points = [(math.cos(t), math.sin(t)) for t in theta]
        if centre:
            points.append((0.0, 0.0))
        return PointSet(points, dimension=2, label="{}-gon{}".format(k, " + centre" if centre else ""))

    def size(self, n: int) -> int:
        return 2 if n >= 4 else 1

    def configurations(self, n: int) -> Iterator[PointSet]:
        yield self.polygon(n)
        if n >= 4:
            yield self.polygon(n - 1, centre=True)


class GridSubsets(Generator):
    """All ``n``-subsets of the ``m x m`` integer grid, compared exactly."""
    mode = "exact"

    def __init__(self, m: Optional[int] = 4, **kwargs):
        kwargs.pop("name", None)
        super().__init__(name="grid_subsets", **kwargs)
        if m < 1:
            raise ValueError("'{}' is not a valid grid side".format(m))
        self.m = m
        self.grid = [(x, y) for x in range(m) for y in range(m)]
        self._squared = [[(a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2 for b in self.grid] for a in self.grid]

    def size(self, n: int) -> int:
        return comb(len(self.grid), n)

    def configurations(self, n: int) -> Iterator[PointSet]:
        for subset in itertools.combinations(range(len(self.grid)), n):
            yield PointSet([self.grid[i] for i in subset], dimension=2, label="{}x{} grid subset".format(self.m, self.m))

    def subset_count(self, subset: Sequence[int]) -> int:
        return len({self._squared[i][j] for i, j in itertools.combinations(subset, 2)})


GENERATORS = {
    "regular_polygon": RegularPolygon,
    "grid_subsets": GridSubsets,
}


def load_generator(config):
    return GENERATORS[config["name"].lower()](**config)


@dataclass
class MinDistinctResult(object):
    point_set: PointSet
    distinct_count: int
    examined: int
    generator: str


def min_distinct_search(n: int, generator: Generator, budget: Optional[int] = DEFAULT_SEARCH_BUDGET) -> MinDistinctResult:
    """
    Minimise the distinct-distance count over the configurations of ``generator``.
    The result is an upper bound on ``g_2(n)`` only. Ties keep the first
    configuration in generation order.

    Args:
        n (:obj:`int`): number of points, at least 2.
        generator (:obj:`Generator`): the configuration family.
        budget (:obj:`int`, optional): maximum number of configurations to examine.

    Returns:
        :obj:`MinDistinctResult`
    """
    if n < 2:
        raise ValueError("'{}' is not a valid point count: must be >= 2".format(n))
    if isinstance(generator, GridSubsets) and n > MAX_SUBSET_SIZE:
        raise ValueError("grid subsets are limited to n <= {}, got {}".format(MAX_SUBSET_SIZE, n))
    total = generator.size(n)
    if total > budget:
        raise BudgetExceededError("{} configurations of {} exceed the budget {}".format(total, generator.name, budget))
    if total == 0:
        raise ValueError("{} has no configuration with {} points".format(generator.name, n))

    if isinstance(generator, GridSubsets):
        best, best_count = None, math.inf
        for subset in tqdm(itertools.combinations(range(len(generator.grid)), n), total=total,
                           desc="grid subsets", leave=False):
            count = generator.subset_count(subset)
            if count < best_count:
                best, best_count = subset, count
        best_set = PointSet([generator.grid[i] for i in best], dimension=2,
                            label="{}x{} grid subset".format(generator.m, generator.m))
    else:
        best_set, best_count = None, math.inf
        for points in generator.configurations(n):
            count = generator.count(points)
            if count < best_count:
                best_set, best_count = points, count
    logger.info("{} with n={}: {} distinct distances over {} configurations".format(
        generator.name, n, best_count, total))
    return MinDistinctResult(point_set=best_set, distinct_count=int(best_count), examined=total, generator=generator.name)
