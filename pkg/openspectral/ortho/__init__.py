from .point_set import PointSet, parse_coordinate, format_coordinate
from .checker import OrthoReport, FailingPair, check_orthogonal, separation_radius
from .packing import (
    PackingReport, packing_bound, packing_bound_check, max_gap_radius, density_profile, integer_lattice_points,
)
