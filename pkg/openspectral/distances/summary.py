import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import *

import numpy as np
import pandas as pd

from openspectral.ortho import PointSet
from openspectral.utils import frame_to_csv

DEFAULT_CLUSTER_TOL = 1e-9
# coordinates are scaled to integers; int64 is used while d * (2 * max|x|)^2 stays below this
_INT64_SAFE = 2 ** 62


@dataclass
class DistanceSummary(object):
    """
    Distinct pairwise distances of a point set with their multiplicities.

    In ``"exact"`` mode ``values`` are the distinct squared distances as
    :obj:`Fraction`; in ``"clustered"`` mode they are the (unsquared) float
    distances after single-linkage merging at ``tol``.
    """
    values: List = field(default_factory=list)
    multiplicities: List[int] = field(default_factory=list)
    mode: str = "exact"
    tol: Optional[float] = None

    def __post_init__(self):
        if len(self.values) != len(self.multiplicities):
            raise ValueError("{} values but {} multiplicities".format(len(self.values), len(self.multiplicities)))
        if any(b <= a for a, b in zip(self.values, self.values[1:])):
            raise ValueError("distance values must be strictly increasing")

    @property
    def distinct_count(self) -> int:
        return len(self.values)

    @property
    def pair_count(self) -> int:
        return sum(self.multiplicities)

    def distances(self) -> List[float]:
        """The distinct distances as floats, unsquared in both modes."""
        if self.mode == "exact":
            return [math.sqrt(v) for v in self.values]
        return [float(v) for v in self.values]

    def to_frame(self) -> pd.DataFrame:
        if self.mode == "exact":
            return pd.DataFrame({"squared_value": [str(v) for v in self.values],
                                 "multiplicity": self.multiplicities},
                                columns=["squared_value", "multiplicity"])
        return pd.DataFrame({"value": [float(v) for v in self.values], "multiplicity": self.multiplicities},
                            columns=["value", "multiplicity"])

    def to_csv(self, path: Optional[str] = None) -> str:
        return frame_to_csv(self.to_frame(), path)


def _common_denominator(points: PointSet) -> int:
    L = 1
    for p in points:
        for c in p:
            L = L * Fraction(c).denominator // math.gcd(L, Fraction(c).denominator)
    return L


def _exact_counts(points: PointSet) -> Tuple[Counter, int]:
    """Multiset of squared distances scaled by ``L^2``, with ``L`` the common denominator."""
    L = _common_denominator(points)
    scaled = [[int(Fraction(c) * L) for c in p] for p in points]
    spread = max(abs(c) for p in scaled for c in p)
    if points.dimension * (2 * spread) ** 2 < _INT64_SAFE:
        X = np.array(scaled, dtype=np.int64)
        chunks = [np.sum((X[i + 1:] - X[i]) ** 2, axis=1) for i in range(len(X) - 1)]
        values, counts = np.unique(np.concatenate(chunks), return_counts=True)
        return Counter({int(v): int(c) for v, c in zip(values, counts)}), L
    counter = Counter()
    for p, q in itertools.combinations(scaled, 2):
        counter[sum((a - b) ** 2 for a, b in zip(p, q))] += 1
    return counter, L


def _single_linkage(sorted_values: np.ndarray, tol: float) -> Tuple[List[float], List[int]]:
    values, multiplicities = [], []
    start = 0
    for i in range(1, len(sorted_values) + 1):
        if i == len(sorted_values) or sorted_values[i] - sorted_values[i - 1] > tol:
            values.append(float(np.mean(sorted_values[start:i])))
            multiplicities.append(i - start)
            start = i
    return values, multiplicities


def distinct_distances(points: PointSet, mode: Optional[str] = "exact", tol: Optional[float] = DEFAULT_CLUSTER_TOL) -> DistanceSummary:
    """
    Count the distinct pairwise distances of ``points``.

    Args:
        points (:obj:`PointSet`): at least two points.
        mode (:obj:`str`, optional): ``"exact"`` compares squared distances as reduced rationals and
            needs rational coordinates; ``"clustered"`` sorts float distances and merges neighbours closer than ``tol``.
        tol (:obj:`float`, optional): clustering tolerance; ``None`` means the default 1e-9.

    Returns:
        :obj:`DistanceSummary`
    """
    if len(points) < 2:
        raise ValueError("distinct distances need at least two points, got {}".format(len(points)))
    mode = mode.lower()
    if mode == "exact":
        if not points.exact:
            raise ValueError("exact mode needs rational coordinates; point set '{}' has floats".format(points.label))
        counter, L = _exact_counts(points)
        keys = sorted(counter)
        return DistanceSummary(values=[Fraction(k, L * L) for k in keys],
                               multiplicities=[counter[k] for k in keys], mode="exact")
    elif mode == "clustered":
        tol = DEFAULT_CLUSTER_TOL if tol is None else tol
        values, multiplicities = _single_linkage(np.sort(points.pairwise_distances()), tol)
        return DistanceSummary(values=values, multiplicities=multiplicities, mode="clustered", tol=tol)
    raise ValueError("'{}' is not a valid distance mode, expected exact or clustered".format(mode))


def distinct_distances_naive(points: PointSet) -> DistanceSummary:
    """All-pairs exact oracle: one dictionary keyed by the squared distance as a :obj:`Fraction`."""
    if not points.exact:
        raise ValueError("the naive oracle needs rational coordinates")
    counter = Counter()
    for p, q in itertools.combinations(points, 2):
        counter[sum((Fraction(a) - Fraction(b)) ** 2 for a, b in zip(p, q))] += 1
    keys = sorted(counter)
    return DistanceSummary(values=keys, multiplicities=[counter[k] for k in keys], mode="exact")
