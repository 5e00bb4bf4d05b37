"""Binary Kloosterman sums over GF(2^m) and their residues modulo 24."""

__version__ = "0.1.0"

from .char_sums import (
    LPolynomial,
    SparsePoly,
    SumKind,
    char_sum,
    closed_char_sum,
    lpoly_build,
    lpoly_power_sum,
)
from .cubic import count_irreducible_cubics, curve_point_count, verify_theorem4
from .value_distribution import (
    CountGrid,
    DistTable,
    Mode,
    count_grid_closed,
    count_grid_direct,
    distribution,
    image_counts,
)
from .eq_solver import count_solutions, enumerate_solutions, quartic_preimage
from .errors import *  # noqa: F401,F403
from .field import FieldContext, chi, make_field, power_residue_root, trace
from .kloosterman import (
    Case,
    Classification,
    classify24,
    congruence_mod3,
    congruence_mod8,
    kloosterman_all,
    kloosterman_direct,
    spectrum,
)
