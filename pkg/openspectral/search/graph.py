import itertools
import math
from typing import *

import networkx as nx

from openspectral.domains import Domain, UnitBall, ZeroSetDescription
from openspectral.ortho import PointSet
from openspectral.utils import logger, BudgetExceededError, HorizonError

DEFAULT_MAX_CANDIDATES = 2000


def horizon_for(diameter: float) -> float:
    return max(diameter * (1 + 1e-9) + 1e-12, 1e-12)


class OrthogonalityGraph(object):
    """
    Candidate frequencies joined by an edge exactly when their difference lies
    in the zero set. Orthogonal families are the cliques of this graph.

    Args:
        point_set (:obj:`PointSet`): the vertices; vertex ``i`` is ``point_set[i]``.
        zero_set (:obj:`ZeroSetDescription`): a zero set covering the diameter of ``point_set``.
        tol (:obj:`float`, optional): membership tolerance, ``None`` for the zero set default.
    """
    def __init__(self, point_set: PointSet, zero_set: ZeroSetDescription, tol: Optional[float] = None):
        if zero_set.horizon < point_set.diameter():
            raise HorizonError("zero set horizon {:.6g} is below the candidate diameter {:.6g}".format(
                zero_set.horizon, point_set.diameter()))
        self.point_set = point_set
        self.zero_set = zero_set
        self.tol = tol
        self.graph = nx.Graph()
        self.graph.add_nodes_from(range(len(point_set)))
        for (i, p), (j, q) in itertools.combinations(enumerate(point_set.points), 2):
            if zero_set.contains([a - b for a, b in zip(p, q)], tol):
                self.graph.add_edge(i, j)
        logger.info("orthogonality graph: {} vertices, {} edges".format(
            self.graph.number_of_nodes(), self.graph.number_of_edges()))

    @classmethod
    def from_point_set(cls, point_set: PointSet, domain: Domain, tol: Optional[float] = None) -> "OrthogonalityGraph":
        return cls(point_set, domain.zero_set(horizon_for(point_set.diameter())), tol)

    def __len__(self):
        return self.graph.number_of_nodes()

    def neighbours(self, v: int) -> Set[int]:
        return set(self.graph.neighbors(v))

    def subgraph(self, vertices: Iterable[int]) -> "OrthogonalityGraph":
        """The induced subgraph, vertices renumbered in the given order."""
        vertices = list(vertices)
        sub = object.__new__(OrthogonalityGraph)
        sub.point_set = self.point_set.subset(vertices)
        sub.zero_set = self.zero_set
        sub.tol = self.tol
        sub.graph = nx.relabel_nodes(self.graph.subgraph(vertices), {v: k for k, v in enumerate(vertices)})
        return sub

    def points_of(self, clique: Sequence[int], label: Optional[str] = None) -> PointSet:
        return self.point_set.subset(sorted(clique), label=label)


def _dedupe(points: List[Tuple[float, ...]], digits: Optional[int] = 12) -> List[Tuple[float, ...]]:
    seen, kept = set(), []
    for p in points:
        key = tuple(round(c, digits) + 0.0 for c in p)
        if key not in seen:
            seen.add(key)
            kept.append(p)
    return kept


def root_triangle_candidates(
    d: int,
    R: float,
    tol: Optional[float] = None,
    max_candidates: Optional[int] = DEFAULT_MAX_CANDIDATES,
) -> PointSet:
    """
    Candidate frequencies in ``B(0, R)`` built from root radii in the plane of the
    first two axes: the origin, the points ``(r_a, 0)`` and the apexes of every
    triangle with base ``r_a`` on the first axis and sides ``r_b`` from the origin
    and ``r_c`` from ``(r_a, 0)``.

    Args:
        d (:obj:`int`): dimension, at least 2.
        R (:obj:`float`): radius of the candidate region.
        tol (:obj:`float`, optional): accepted slack in the triangle inequality.
        max_candidates (:obj:`int`, optional): guard on the number of candidates.

    Returns:
        :obj:`PointSet`: the candidates, sorted lexicographically.
    """
    if d < 2:
        raise ValueError("'{}' is not a valid dimension for triangle candidates".format(d))
    slack = 1e-12 if tol is None else tol
    zs = UnitBall(d).zero_set(horizon_for(2 * R))
    radii = [float(r) for r in zs.root_radii]
    inner = [r for r in radii if r <= R]
    points = [(0.0, 0.0)] + [(r, 0.0) for r in inner]
    for a, b in itertools.product(inner, repeat=2):
        for c in radii:
            x = (a * a + b * b - c * c) / (2 * a)
            h2 = b * b - x * x
            if h2 < -slack:
                continue
            y = math.sqrt(max(h2, 0.0))
            points.extend([(x, y), (x, -y)] if y > 0 else [(x, 0.0)])
    points = [p for p in _dedupe(points) if math.hypot(*p) <= R + 1e-12]
    if len(points) > max_candidates:
        raise BudgetExceededError("{} triangle candidates exceed the limit {}".format(len(points), max_candidates))
    points = sorted(tuple(list(p) + [0.0] * (d - 2)) for p in points)
    return PointSet(points, dimension=d, label="root triangles in B({:g})".format(R))
