from typing import *

from openspectral.domains import UnitBall, BallZeroSet
from openspectral.ortho import PointSet
from openspectral.utils import logger, HorizonError
from .graph import horizon_for
from .result import SearchResult

DEFAULT_BUDGET = 100000


def longest_collinear_chain(
    d: int,
    R: float,
    tol: Optional[float] = None,
    budget: Optional[int] = DEFAULT_BUDGET,
    zero_set: Optional[BallZeroSet] = None,
) -> SearchResult:
    """
    Largest ``{0 = t_0 < t_1 < ... < t_k <= R}`` on the first axis whose
    differences ``t_j - t_i`` all lie within ``tol`` of a root radius of the
    ball ``B_d``.

    Every position is itself a root radius, because ``t_j - t_0 = t_j``.
    Every pair is tested against the enumerated radii directly, never by
    transitivity. The depth-first search extends chains in ascending order and
    prunes a branch once it cannot beat the incumbent.

    Args:
        d (:obj:`int`): the dimension.
        R (:obj:`float`): largest position allowed.
        tol (:obj:`float`, optional): membership tolerance, ``None`` for the zero set default.
        budget (:obj:`int`, optional): number of search nodes to expand before giving up.
        zero_set (:obj:`BallZeroSet`, optional): radii enumerated to at least ``2R``.

    Returns:
        :obj:`SearchResult`: the chain as points ``(t, 0, ..., 0)``.
    """
    if not R > 0:
        raise ValueError("'{}' is not a valid radius: must be positive".format(R))
    if zero_set is None:
        zero_set = UnitBall(d).zero_set(horizon_for(2 * R))
    elif zero_set.horizon < 2 * R:
        raise HorizonError("zero set horizon {:.6g} is below 2R = {:.6g}".format(zero_set.horizon, 2 * R))

    positions = [float(r) for r in zero_set.root_radii if r <= R]

    def axis(t: float) -> List[float]:
        return [t] + [0.0] * (d - 1)

    compatible = [
        {j for j in range(i + 1, len(positions)) if zero_set.contains(axis(positions[j] - positions[i]), tol)}
        for i in range(len(positions))
    ]

    best: List[int] = []
    history = [{"nodes": 0, "size": 1}]
    nodes = 0
    truncated = False

    def expand(chain: List[int], candidates: List[int]):
        nonlocal best, nodes, truncated
        if nodes >= budget:
            truncated = True
            return
        nodes += 1
        if len(chain) > len(best):
            best = list(chain)
            history.append({"nodes": nodes, "size": len(best) + 1})
        for k, j in enumerate(candidates):
            if truncated or len(chain) + len(candidates) - k <= len(best):
                return
            expand(chain + [j], [c for c in candidates[k + 1:] if c in compatible[j]])

    expand([], list(range(len(positions))))
    if truncated:
        logger.warning("chain search stopped after {} nodes; best size {}".format(nodes, len(best) + 1))

    points = [tuple(axis(0.0))] + [tuple(axis(positions[j])) for j in best]
    result = SearchResult(
        point_set=PointSet(points, dimension=d, label="collinear chain in B({:g})".format(R)),
        strategy="chain",
        truncated=truncated,
        nodes_expanded=nodes,
        history=history,
        tol=tol,
    )
    logger.info("collinear chain for ball:{} with R={:g}: size {}".format(d, R, result.size))
    return result
