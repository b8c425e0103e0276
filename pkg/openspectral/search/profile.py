import math
from typing import *

import pandas as pd
from tqdm import tqdm

from openspectral.distances import distinct_distances
from openspectral.domains import UnitBall
from openspectral.specfun import zero_count
from openspectral.utils import logger
from .chain import longest_collinear_chain, DEFAULT_BUDGET
from .clique import max_clique_search
from .graph import OrthogonalityGraph, root_triangle_candidates, DEFAULT_MAX_CANDIDATES


class Strategy(object):
    """
    The base class of search strategies: ``run(d, R)`` returns a :obj:`SearchResult`.

    Args:
        name (:obj:`str`, optional): registry name.
        tol (:obj:`float`, optional): membership tolerance, ``None`` for the zero set default.
        budget (:obj:`int`, optional): node budget.
    """
    def __init__(self, name: Optional[str] = "base", tol: Optional[float] = None,
                 budget: Optional[int] = DEFAULT_BUDGET, **kwargs):
        self.name = name
        self.tol = tol
        self.budget = budget

    def run(self, d: int, R: float):
        raise NotImplementedError


class ChainStrategy(Strategy):
    def __init__(self, **kwargs):
        kwargs.pop("name", None)
        super().__init__(name="chain", **kwargs)

    def run(self, d: int, R: float):
        return longest_collinear_chain(d, R, tol=self.tol, budget=self.budget)


class CliqueStrategy(Strategy):
    """Maximum clique over :func:`root_triangle_candidates`."""
    def __init__(self, max_candidates: Optional[int] = DEFAULT_MAX_CANDIDATES, **kwargs):
        kwargs.pop("name", None)
        super().__init__(name="clique", **kwargs)
        self.max_candidates = max_candidates

    def run(self, d: int, R: float):
        candidates = root_triangle_candidates(d, R, self.tol, self.max_candidates)
        graph = OrthogonalityGraph.from_point_set(candidates, UnitBall(d), self.tol)
        return max_clique_search(graph, self.budget)


STRATEGIES = {
    "chain": ChainStrategy,
    "clique": CliqueStrategy,
}


def load_strategy(config):
    return STRATEGIES[config["name"].lower()](**config)


def growth_profile(
    d: int,
    R_values: Sequence[float],
    strategy: Union[str, Strategy] = "chain",
    budget: Optional[int] = None,
    tol: Optional[float] = None,
) -> pd.DataFrame:
    """
    Best orthogonal set found for each radius. ``strategy`` is a registry name
    or a configured :obj:`Strategy`; ``budget`` and ``tol`` override its settings.

    Columns: ``R``, ``size``, ``distinct_distances`` of the found set,
    ``available_roots`` (root radii up to ``2R``, the ceiling for the previous
    column) and ``truncated``.
    """
    if isinstance(strategy, str):
        strategy = load_strategy({"name": strategy, "tol": tol})
    elif tol is not None:
        strategy.tol = tol
    if budget is not None:
        strategy.budget = budget
    R_values = list(R_values)
    if any(b <= a for a, b in zip(R_values, R_values[1:])):
        raise ValueError("R values must be strictly ascending, got {}".format(R_values))
    columns = ["R", "size", "distinct_distances", "available_roots", "truncated"]
    rows = []
    order = UnitBall(d).order
    for R in tqdm(R_values, desc="growth profile", leave=False):
        result = strategy.run(d, R)
        points = result.point_set
        distinct = distinct_distances(points, mode="clustered").distinct_count if len(points) > 1 else 0
        rows.append({
            "R": float(R),
            "size": result.size,
            "distinct_distances": distinct,
            "available_roots": zero_count(order, 2 * math.pi * 2 * R),
            "truncated": result.truncated,
        })
        logger.info("R={:g}: size {}, {} distinct distances".format(R, result.size, distinct))
    return pd.DataFrame(rows, columns=columns)
