"""
Available against demanded distinct distances for a putative spectrum of the ball.

Differences of a ball spectrum in ``B(R)`` have length at most ``2R`` and
must be root radii, so at most ``zero_count(d/2, 2 pi * 2R)`` distances are
available, a number linear in ``R``. A spectrum has about ``R^d`` points in
``B(R)``, which forces about ``R^(3d/(3d-2))`` distinct distances. The ratio
of the two decays like ``R^(1 - 3d/(3d-2))``.
"""
import math
from dataclasses import dataclass, asdict
from typing import *

import pandas as pd

from openspectral.distances import spectrum_distance_demand
from openspectral.specfun import Order, zero_count
from openspectral.utils import logger, growth_metrics

COLUMNS = ["R", "available_distances", "demanded_distances", "ratio"]


@dataclass
class ContradictionRow(object):
    R: float
    available_distances: int
    demanded_distances: float
    ratio: float


def contradiction_row(d: int, R: float, density_constant: Optional[float] = 1.0,
                      zero_options: Optional[dict] = None) -> ContradictionRow:
    available = zero_count(Order.from_dimension(d), 2 * math.pi * 2 * R, **(zero_options or {}))
    demanded = spectrum_distance_demand(d, R, density_constant)
    return ContradictionRow(R=float(R), available_distances=available, demanded_distances=demanded,
                            ratio=available / demanded)


def contradiction_table(
    d: int,
    R_list: Sequence[float],
    density_constant: Optional[float] = 1.0,
    zero_options: Optional[dict] = None,
) -> pd.DataFrame:
    """
    One :obj:`ContradictionRow` per radius.

    Args:
        d (:obj:`int`): dimension, at least 2.
        R_list (:obj:`Sequence[float]`): strictly ascending positive radii.
        density_constant (:obj:`float`, optional): the ``c`` in ``c R^d`` points. Defaults to 1.
        zero_options (:obj:`dict`, optional): keyword arguments for the zero enumeration.

    Returns:
        :obj:`pandas.DataFrame`: columns ``R, available_distances, demanded_distances, ratio``.
    """
    if d < 2:
        raise ValueError("'{}' is not a valid dimension: the contradiction needs d >= 2".format(d))
    R_list = [float(R) for R in R_list]
    if any(b <= a for a, b in zip(R_list, R_list[1:])):
        raise ValueError("R values must be strictly ascending, got {}".format(R_list))
    rows = [asdict(contradiction_row(d, R, density_constant, zero_options)) for R in R_list]
    return pd.DataFrame(rows, columns=COLUMNS)


def contradiction_summary(table: pd.DataFrame, d: int) -> Dict[str, Any]:
    """
    Growth statistics of a contradiction table: the fitted slope of
    ``available_distances`` against ``R``, the log-log slope of the ratio and
    whether the ratio strictly decreases. Slopes need at least two rows.
    """
    summary = {"dimension": d, "rows": len(table), "expected_ratio_exponent": 1 - 3 * d / (3 * d - 2)}
    if len(table) >= 2:
        summary["available_slope"] = growth_metrics(table["R"], table["available_distances"], "slope")
        summary["ratio_loglog_slope"] = growth_metrics(table["R"], table["ratio"], "loglog_slope")
        summary["ratio_decreasing"] = bool(growth_metrics(table["R"], table["ratio"], "ratio_decreasing"))
        logger.info("available distances grow like {:.4g} R; ratio exponent {:.4g} (expected {:.4g})".format(
            summary["available_slope"], summary["ratio_loglog_slope"], summary["expected_ratio_exponent"]))
    return summary
