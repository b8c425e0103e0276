import itertools
import math
from dataclasses import dataclass, field, asdict
from typing import *

from openspectral.domains import Domain, ZeroSetDescription, in_zero_set
from openspectral.utils import logger, DimensionMismatchError, HorizonError, dump_json
from .point_set import PointSet


class FailingPair(NamedTuple):
    i: int
    j: int
    distance: float
    zero_set_distance: float


@dataclass
class OrthoReport(object):
    """
    Outcome of the criterion ``Lambda - Lambda subset Z_D cup {0}``.

    Args:
        verdict (:obj:`bool`): whether every pair passes; true iff ``failing_pairs`` is empty.
        failing_pairs (:obj:`List[FailingPair]`): pairs whose difference misses the zero set, lexicographic.
        min_pairwise_distance (:obj:`float`): smallest distance between two points.
        separation_radius_used (:obj:`float`): the separation radius of the domain.
        pair_count (:obj:`int`): number of unordered pairs tested.
        domain (:obj:`str`): the domain token.
        tol (:obj:`float`, optional): the membership tolerance, ``None`` for the default rule.
    """
    verdict: bool
    failing_pairs: List[FailingPair] = field(default_factory=list)
    min_pairwise_distance: float = math.inf
    separation_radius_used: float = 0.0
    pair_count: int = 0
    domain: str = ""
    tol: Optional[float] = None

    def __post_init__(self):
        if self.verdict != (len(self.failing_pairs) == 0):
            raise ValueError("verdict {} contradicts {} failing pairs".format(self.verdict, len(self.failing_pairs)))

    def to_dict(self) -> Dict:
        payload = asdict(self)
        payload["failing_pairs"] = [pair._asdict() for pair in self.failing_pairs]
        return payload

    def to_json(self) -> str:
        return dump_json(self.to_dict())


def _difference(p: Sequence, q: Sequence) -> List:
    return [a - b for a, b in zip(p, q)]


def _horizon_for(lambda_set: PointSet) -> float:
    # pair distances are recomputed per pair, so leave a little room above the diameter
    diameter = lambda_set.diameter()
    return max(diameter * (1 + 1e-9) + 1e-12, 1e-12)


def check_orthogonal(
    domain: Domain,
    lambda_set: PointSet,
    tol: Optional[float] = None,
    zero_set: Optional[ZeroSetDescription] = None,
) -> OrthoReport:
    """
    Test whether ``{e_lambda : lambda in lambda_set}`` is orthogonal in ``L^2(domain)``.

    A pair passes iff its difference lies in ``Z_D``; every unordered pair is tested.

    Args:
        domain (:obj:`Domain`): the domain.
        lambda_set (:obj:`PointSet`): the frequencies.
        tol (:obj:`float`, optional): membership tolerance; ``None`` uses the zero set default
            (exact for rational cube input, ``1e-9 * max(1, |xi|)`` on the ball radius).
        zero_set (:obj:`ZeroSetDescription`, optional): a precomputed zero set; enumerated on demand otherwise.

    Returns:
        :obj:`OrthoReport`: the verdict with per-pair diagnostics.
    """
    if lambda_set.dimension != domain.dimension:
        raise DimensionMismatchError("point set of dimension {} checked against {}".format(
            lambda_set.dimension, domain.token))
    needed = lambda_set.diameter()
    if zero_set is None:
        zero_set = domain.zero_set(_horizon_for(lambda_set))
    elif zero_set.horizon < needed:
        raise HorizonError("zero set horizon {:.6g} is below the point set diameter {:.6g}".format(
            zero_set.horizon, needed))

    failing = []
    pair_count = 0
    for (i, p), (j, q) in itertools.combinations(enumerate(lambda_set.points), 2):
        pair_count += 1
        diff = _difference(p, q)
        if not in_zero_set(zero_set, diff, tol):
            distance = math.sqrt(sum(float(c) ** 2 for c in diff))
            failing.append(FailingPair(i, j, distance, zero_set.distance_to(diff)))

    report = OrthoReport(
        verdict=not failing,
        failing_pairs=failing,
        min_pairwise_distance=lambda_set.min_pairwise_distance(),
        separation_radius_used=domain.separation_radius(),
        pair_count=pair_count,
        domain=domain.token,
        tol=tol,
    )
    logger.info("{} on {}: {} pairs, {} failing".format(lambda_set.label or "point set", domain.token,
                                                         pair_count, len(failing)))
    return report


def separation_radius(domain: Domain) -> float:
    return domain.separation_radius()
