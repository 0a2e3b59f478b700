"""Rank of X0(49) over quadratic fields: theta series, half-integral weight
operators, the CM newform of level 49 and an executable rank criterion."""

from fractions import Fraction

from ._x49 import (
    InvalidForm,
    ap,
    c_factor,
    coefficients,
    companion,
    enumerate_candidates,
    fundamental_discriminant,
    kronecker,
    l_value,
    lemma_matrix,
    level_and_character,
    predict,
    representation_count,
    run_cli,
    sturm_bound,
    theta_series,
    verify,
)
from . import _x49


def _fractions(pairs):
    return [Fraction(int(n), int(d)) for n, d in pairs]


def fixture(name):
    """Stored q-expansion coefficients (index = exponent) as Fractions."""
    return _fractions(_x49.fixture_pairs(name))


def extend_fixture(name, limit):
    """f1, f2, f3 or g1 through q^limit from its theta decomposition."""
    return _fractions(_x49.extend_fixture_pairs(name, limit))


def shimura_lift(name, t, limit):
    """Sh_t of f1, f2, f3 or g1 through q^limit."""
    return _fractions(_x49.shimura_lift_pairs(name, t, limit))


__all__ = [
    "InvalidForm", "ap", "c_factor", "coefficients", "companion", "enumerate_candidates", "extend_fixture",
    "fixture", "fundamental_discriminant", "kronecker", "l_value", "lemma_matrix", "level_and_character",
    "predict", "representation_count", "run_cli", "shimura_lift", "sturm_bound", "theta_series", "verify",
]
