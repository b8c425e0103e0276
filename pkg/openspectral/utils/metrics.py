from sklearn.linear_model import LinearRegression
from typing import *
import numpy as np
from .log import logger

def growth_metrics(xs: Sequence[float],
                   ys: Sequence[float],
                   metric: Optional[str] = "slope",
                  ) -> float:
    """growth-rate metrics for tables indexed by a radius or a point count.

    Args:
        xs (Sequence[float]): abscissae, e.g. the radii R
        ys (Sequence[float]): measured values, e.g. distinct-distance counts
        metric (str, optional): type of metric, support 'slope', 'intercept', 'loglog_slope', 'ratio_decreasing'. Defaults to "slope".

    Returns:
        score (float): the metric value ('ratio_decreasing' returns 1.0 or 0.0)
    """
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if xs.shape != ys.shape:
        raise ValueError("xs and ys differ in length: {} vs {}".format(len(xs), len(ys)))

    if metric in ("slope", "intercept", "loglog_slope"):
        if len(xs) < 2:
            raise ValueError("'{}' needs at least two rows, got {}".format(metric, len(xs)))
        if metric == "loglog_slope":
            if np.any(xs <= 0) or np.any(ys <= 0):
                raise ValueError("'loglog_slope' needs positive values")
            xs, ys = np.log(xs), np.log(ys)
        model = LinearRegression().fit(xs.reshape(-1, 1), ys)
        score = float(model.intercept_) if metric == "intercept" else float(model.coef_[0])
    elif metric == "ratio_decreasing":
        score = float(bool(np.all(np.diff(ys) < 0)))
    else:
        raise ValueError("'{}' is not a valid growth metric".format(metric))
    logger.debug("{} over {} rows: {}".format(metric, len(xs), score))
    return score


def slope_stability(xs: Sequence[float], ys: Sequence[float], pieces: Optional[int] = 2) -> float:
    """Largest relative deviation between the slope fitted on each of ``pieces``
    consecutive subranges and the slope fitted on the whole range."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    overall = growth_metrics(xs, ys, "slope")
    deviations = []
    for chunk_x, chunk_y in zip(np.array_split(xs, pieces), np.array_split(ys, pieces)):
        if len(chunk_x) < 2:
            continue
        deviations.append(abs(growth_metrics(chunk_x, chunk_y, "slope") - overall) / abs(overall))
    return max(deviations) if deviations else 0.0
