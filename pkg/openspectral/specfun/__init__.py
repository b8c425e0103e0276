from .bessel import Order, bessel_j, bessel_j_array, bessel_j_series, spherical_closed_form, series_cutoff
from .zeros import ZeroTable, bessel_zeros, zero_count, first_zero, mcmahon_zero
