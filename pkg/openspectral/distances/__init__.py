from .summary import DistanceSummary, distinct_distances, distinct_distances_naive, DEFAULT_CLUSTER_TOL
from .bounds import (
    LOWER_BOUNDS, lower_bound, erdos_bound, erdos_planar_bound, moser_bound, clarkson_bound,
    dimension_exponent, required_exponent, spectrum_distance_demand,
)
from .roots import RootMatchReport, verify_distances_are_roots
from .generators import (
    Generator, RegularPolygon, GridSubsets, GENERATORS, load_generator, MinDistinctResult, min_distinct_search,
)
