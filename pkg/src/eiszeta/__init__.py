"""Eisenstein polynomials of the genus-1 group H1 and their Duursma zeta polynomials."""
from .enumerator import (
    FormalWeightEnumerator,
    eisenstein_closed_form,
    load_enumerator,
    min_distance,
    normalize,
    normalized_eisenstein,
    normalized_weight_enumerator,
    store_enumerator,
)
from .group import closure, h1_generators, h1_group, reynolds_power
from .theta import th_map, theta_constant
from .zeta import (
    exact_roots,
    interlace_check,
    rha_check_numeric,
    rha_check_structural,
    zeta_closed_form,
    zeta_expanded_form,
    zeta_via_linear_system,
    zeta_via_series,
)

__version__ = "0.1.0"
