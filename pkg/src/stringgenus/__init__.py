"""Exact computations around the Witten genus and its secondary invariants."""

from .errors import (
    InconsistentBound,
    InsufficientPrecision,
    InternalError,
    InvalidSeries,
    InvalidWeight,
    NonIntegral,
    NonIntegralPairing,
    NotAUnit,
    StringGenusError,
    WeightMismatch,
)
from .qseries import QSeries, bernoulli, divisor_power_sum, eisenstein_G
from .modforms import (
    ModularBasis,
    delta,
    dim_modular,
    eisenstein_normalized,
    is_modular,
    miller_basis,
    tate_curve,
    weierstrass_invariants,
)
from .tgroup import TClass, localize, order, reduce
from .genera import (
    GradedPPoly,
    multiplicative_sequence,
    newton_polynomial,
    phi_tilde,
    phi_witten,
    theta_witten,
    to_powersum_basis,
)
from .invariants import (
    CharNumbers,
    RelCharNumbers,
    b_geom,
    d_invariant,
    nu_delta_detect,
    nu_delta_polynomial,
    sigma_and_canonical,
    witten_genus,
)

__version__ = "0.1.0"
