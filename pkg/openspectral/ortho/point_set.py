import math
import os
import re
from fractions import Fraction
from typing import *

import numpy as np
import pandas as pd
from scipy.spatial.distance import pdist

from openspectral.domains import is_exact
from openspectral.utils import DimensionMismatchError

_RATIONAL_TOKEN = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_coordinate(token: str, exact: Optional[bool] = False):
    """
    Parse one CSV coordinate.

    Exact mode accepts integers and ``p/q`` tokens only and returns a
    :obj:`Fraction`; float mode also accepts ``p/q`` and returns a float.
    """
    token = token.strip()
    if exact:
        if not _RATIONAL_TOKEN.match(token):
            raise ValueError("'{}' is not an exact rational token (expected p or p/q)".format(token))
        value = Fraction(token)
    else:
        value = float(Fraction(token)) if "/" in token else float(token)
        if not math.isfinite(value):
            raise ValueError("'{}' is not a finite coordinate".format(token))
    return value


def format_coordinate(c) -> str:
    if isinstance(c, Fraction):
        return str(c)
    if isinstance(c, (int, np.integer)):
        return str(int(c))
    return "%.15g" % c


class PointSet(object):
    """
    A finite set of distinct points in ``R^d``, standing in for ``Lambda cap B_d(R)``.

    Args:
        points (:obj:`Iterable[Sequence]`): the points; coordinates are ints/Fractions (exact) or floats.
        dimension (:obj:`int`, optional): required when ``points`` is empty, otherwise inferred.
        label (:obj:`str`, optional): a free-text label carried into reports and files.
    """
    def __init__(self, points: Iterable[Sequence], dimension: Optional[int] = None, label: Optional[str] = ""):
        points = tuple(tuple(p) for p in points)
        if dimension is None:
            if not points:
                raise ValueError("an empty point set needs an explicit dimension")
            dimension = len(points[0])
        if dimension < 1:
            raise ValueError("'{}' is not a valid dimension".format(dimension))
        for p in points:
            if len(p) != dimension:
                raise DimensionMismatchError("point {} does not have dimension {}".format(p, dimension))
        if len(set(points)) != len(points):
            raise ValueError("point set '{}' contains duplicate points".format(label))
        self.points = points
        self.dimension = int(dimension)
        self.label = label

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def __eq__(self, other):
        return isinstance(other, PointSet) and self.dimension == other.dimension and self.points == other.points

    def __repr__(self):
        return "PointSet(n={}, dimension={}, label={!r})".format(len(self), self.dimension, self.label)

    @property
    def exact(self) -> bool:
        return all(is_exact(p) for p in self.points)

    def as_array(self) -> np.ndarray:
        if not self.points:
            return np.zeros((0, self.dimension))
        return np.array([[float(c) for c in p] for p in self.points])

    def norms(self) -> np.ndarray:
        return np.linalg.norm(self.as_array(), axis=1)

    def pairwise_distances(self) -> np.ndarray:
        """Condensed pairwise distances, pairs ordered lexicographically."""
        return pdist(self.as_array()) if len(self) > 1 else np.zeros(0)

    def diameter(self) -> float:
        distances = self.pairwise_distances()
        return float(distances.max()) if len(distances) else 0.0

    def min_pairwise_distance(self) -> float:
        distances = self.pairwise_distances()
        return float(distances.min()) if len(distances) else math.inf

    def subset(self, indices: Iterable[int], label: Optional[str] = None) -> "PointSet":
        return PointSet([self.points[i] for i in indices], dimension=self.dimension,
                        label=self.label if label is None else label)

    def with_point(self, point: Sequence, label: Optional[str] = None) -> "PointSet":
        return PointSet(self.points + (tuple(point),), dimension=self.dimension,
                        label=self.label if label is None else label)

    @classmethod
    def from_array(cls, array, label: Optional[str] = "") -> "PointSet":
        array = np.atleast_2d(np.asarray(array, dtype=float))
        return cls([tuple(float(c) for c in row) for row in array], dimension=array.shape[1], label=label)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([[format_coordinate(c) for c in p] for p in self.points],
                            columns=["x{}".format(i + 1) for i in range(self.dimension)])

    def to_csv(self, path: Optional[str] = None) -> str:
        """One point per line, comma separated, preceded by a ``#`` comment with the label."""
        header = "# {} (n={}, d={})\n".format(self.label or "points", len(self), self.dimension)
        body = self.to_frame().to_csv(index=False, header=False, lineterminator="\n")
        text = header + body
        if path:
            with open(path, "w", encoding="utf-8") as f:
                f.write(text)
        return text

    @classmethod
    def from_csv(cls, path: str, exact: Optional[bool] = False, label: Optional[str] = None) -> "PointSet":
        """
        Load a point set file: one point per line, ``d`` comma-separated
        coordinates, ``#`` comment lines allowed.

        Args:
            path (:obj:`str`): the file.
            exact (:obj:`bool`, optional): parse coordinates as exact rationals (``p`` or ``p/q``).
            label (:obj:`str`, optional): label; defaults to the file name.
        """
        label = os.path.basename(path) if label is None else label
        try:
            frame = pd.read_csv(path, header=None, comment="#", dtype=str, skipinitialspace=True)
        except pd.errors.EmptyDataError:
            raise ValueError("point set file '{}' contains no points".format(path))
        except pd.errors.ParserError as e:
            raise ValueError("malformed point set file '{}': {}".format(path, e))
        if frame.isnull().values.any():
            raise ValueError("malformed point set file '{}': rows have differing numbers of coordinates".format(path))
        try:
            points = [tuple(parse_coordinate(token, exact) for token in row) for row in frame.itertuples(index=False)]
        except ValueError as e:
            raise ValueError("malformed point set file '{}': {}".format(path, e))
        return cls(points, dimension=frame.shape[1], label=label)
