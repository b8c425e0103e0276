from dataclasses import dataclass, field, asdict
from typing import *

from openspectral.domains import ZeroSetDescription, BallZeroSet, default_ball_tolerance
from openspectral.ortho import PointSet
from openspectral.utils import logger, DimensionMismatchError, HorizonError, dump_json
from .summary import distinct_distances, DEFAULT_CLUSTER_TOL


@dataclass
class RootMatchReport(object):
    """
    Whether every distinct distance of a point set is a root radius.

    ``available_roots`` counts the root radii up to the diameter, the ceiling
    on ``distinct_count`` for a set that is orthogonal in the ball.
    """
    distinct_count: int
    matched_count: int
    unmatched: List[float] = field(default_factory=list)
    available_roots: Optional[int] = None
    ok: bool = True

    def to_dict(self) -> Dict:
        return asdict(self)

    def to_json(self) -> str:
        return dump_json(self.to_dict())


def verify_distances_are_roots(
    points: PointSet,
    d: int,
    zs: ZeroSetDescription,
    tol: Optional[float] = None,
) -> RootMatchReport:
    """
    Check ``f(|lambda - lambda'|) = 0`` distance by distance: each distinct
    distance, placed on the first axis, must lie in ``zs``.

    Args:
        points (:obj:`PointSet`): the candidate orthogonal set.
        d (:obj:`int`): the dimension, shared by ``points`` and ``zs``.
        zs (:obj:`ZeroSetDescription`): a zero set whose horizon covers the diameter.
        tol (:obj:`float`, optional): membership tolerance; ``None`` uses the zero set default.

    Returns:
        :obj:`RootMatchReport`
    """
    if points.dimension != d or zs.dimension != d:
        raise DimensionMismatchError("dimension {} does not match points ({}) and zero set ({})".format(
            d, points.dimension, zs.dimension))
    diameter = points.diameter()
    if zs.horizon < diameter:
        raise HorizonError("zero set horizon {:.6g} is below the diameter {:.6g}".format(zs.horizon, diameter))
    available = None
    if isinstance(zs, BallZeroSet):
        # a distance matched within tol of a root just past the diameter still counts
        available = zs.count_up_to(diameter, default_ball_tolerance(diameter) if tol is None else tol)
    if len(points) < 2:
        return RootMatchReport(distinct_count=0, matched_count=0, available_roots=available, ok=True)

    mode = "exact" if points.exact else "clustered"
    summary = distinct_distances(points, mode=mode, tol=DEFAULT_CLUSTER_TOL)
    unmatched = [rho for rho in summary.distances() if not zs.contains([rho] + [0.0] * (d - 1), tol)]
    report = RootMatchReport(
        distinct_count=summary.distinct_count,
        matched_count=summary.distinct_count - len(unmatched),
        unmatched=unmatched,
        available_roots=available,
        ok=not unmatched,
    )
    if unmatched:
        logger.info("{} of {} distinct distances are not root radii".format(len(unmatched), summary.distinct_count))
    return report
