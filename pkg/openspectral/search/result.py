from dataclasses import dataclass, field
from typing import *

import jsonlines

from openspectral.ortho import PointSet
from openspectral.utils import round_sig


@dataclass
class SearchResult(object):
    """
    Best orthogonal set found by a search, with its bookkeeping.

    Args:
        point_set (:obj:`PointSet`): the incumbent at termination.
        strategy (:obj:`str`): registry name of the search.
        truncated (:obj:`bool`): whether the node budget stopped the search.
        nodes_expanded (:obj:`int`): search nodes expanded.
        history (:obj:`List[dict]`): one ``{"nodes", "size"}`` record per incumbent improvement.
        tol (:obj:`float`, optional): the membership tolerance used.
    """
    point_set: PointSet
    strategy: str
    truncated: bool = False
    nodes_expanded: int = 0
    history: List[Dict] = field(default_factory=list)
    tol: Optional[float] = None

    @property
    def size(self) -> int:
        return len(self.point_set)

    def summary(self) -> Dict:
        return {
            "event": "summary",
            "strategy": self.strategy,
            "size": self.size,
            "nodes_expanded": self.nodes_expanded,
            "truncated": self.truncated,
            "tol": self.tol,
        }

    def log_records(self) -> List[Dict]:
        records = [dict(event="incumbent", **record) for record in self.history]
        records.append(self.summary())
        return [round_sig(record) for record in records]

    def write_log(self, path: str):
        with jsonlines.open(path, mode="w") as writer:
            writer.write_all(self.log_records())
