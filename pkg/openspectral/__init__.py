from . import utils
from .utils import logger, result_visualizer

from . import specfun
from .specfun import Order, ZeroTable, bessel_j, bessel_zeros, zero_count

from . import domains
from .domains import Domain, UnitCube, UnitBall, load_domain, parse_domain

from . import ortho
from .ortho import PointSet, OrthoReport, check_orthogonal

from . import distances
from .distances import DistanceSummary, distinct_distances

from . import search
from .search import OrthogonalityGraph, SearchResult, load_strategy

from .contradiction import contradiction_table
