from typing import *

from openspectral.utils import logger
from .graph import OrthogonalityGraph
from .result import SearchResult

DEFAULT_BUDGET = 100000


def greedy_clique(adjacency: Dict[int, Set[int]]) -> List[int]:
    """Repeatedly take the candidate of largest degree, lowest index on ties."""
    clique = []
    candidates = sorted(adjacency)
    while candidates:
        v = max(candidates, key=lambda u: (len(adjacency[u] & set(candidates)), -u))
        clique.append(v)
        candidates = [u for u in candidates if u in adjacency[v]]
    return sorted(clique)


def color_classes(candidates: Sequence[int], adjacency: Dict[int, Set[int]]) -> List[Tuple[int, int]]:
    """
    Greedy sequential colouring in index order. Returns ``(vertex, colour)``
    sorted by colour; any clique among the first ``k`` entries has at most as
    many vertices as the colour of the ``k``-th entry.
    """
    classes: List[List[int]] = []
    for v in candidates:
        for cls in classes:
            if not adjacency[v] & set(cls):
                cls.append(v)
                break
        else:
            classes.append([v])
    return [(v, k + 1) for k, cls in enumerate(classes) for v in cls]


def maximum_clique(
    adjacency: Dict[int, Set[int]],
    budget: Optional[int] = DEFAULT_BUDGET,
) -> Tuple[List[int], bool, int, List[Dict]]:
    """
    Branch and bound with a colouring bound on a plain adjacency mapping.
    The greedy clique is the starting incumbent, so an exhausted budget still
    returns a valid (possibly smaller) clique. A budget of 0 expands nothing,
    not even the greedy pass, and returns the lowest vertex alone.

    Returns:
        ``(clique, truncated, nodes_expanded, history)`` with the clique in index order.
    """
    if budget == 0:
        best = sorted(adjacency)[:1]
        return best, True, 0, [{"nodes": 0, "size": len(best)}]
    best = greedy_clique(adjacency)
    history = [{"nodes": 0, "size": len(best)}]
    nodes = 0
    truncated = False

    def expand(clique: List[int], candidates: List[int]):
        nonlocal best, nodes, truncated
        if nodes >= budget:
            truncated = True
            return
        nodes += 1
        if len(clique) > len(best):
            best = sorted(clique)
            history.append({"nodes": nodes, "size": len(best)})
        colored = color_classes(candidates, adjacency)
        while colored:
            v, color = colored.pop()
            if truncated or len(clique) + color <= len(best):
                return
            rest = {u for u, _ in colored}
            expand(clique + [v], [u for u in candidates if u in rest and u in adjacency[v]])

    expand([], sorted(adjacency))
    return best, truncated, nodes, history


def max_clique_search(graph: OrthogonalityGraph, budget: Optional[int] = DEFAULT_BUDGET) -> SearchResult:
    """
    Maximum clique of the orthogonality graph, see :func:`maximum_clique`.

    Args:
        graph (:obj:`OrthogonalityGraph`): the candidate graph.
        budget (:obj:`int`, optional): number of branch-and-bound nodes to expand.

    Returns:
        :obj:`SearchResult`: the clique as a point set, vertices in index order.
    """
    adjacency = {v: graph.neighbours(v) for v in range(len(graph))}
    best, truncated, nodes, history = maximum_clique(adjacency, budget)
    if truncated:
        logger.warning("clique search stopped after {} nodes; best size {}".format(nodes, len(best)))
    logger.info("clique search over {} vertices: size {}".format(len(graph), len(best)))
    return SearchResult(
        point_set=graph.points_of(best, label="orthogonal clique"),
        strategy="clique",
        truncated=truncated,
        nodes_expanded=nodes,
        history=history,
        tol=graph.tol,
    )
