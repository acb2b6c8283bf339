"""Exact weight-spectrum analysis for linear and affine codes over prime fields."""

from specktral.codes import (
    AffineCode,
    LinearCode,
    WeightDistribution,
    affine,
    alpha,
    dual,
    from_generators,
    weight_distribution,
)
from specktral.fourier import DenseFunction
from specktral.limits import GuardError, Limits

__all__ = [
    "AffineCode",
    "DenseFunction",
    "GuardError",
    "Limits",
    "LinearCode",
    "WeightDistribution",
    "affine",
    "alpha",
    "dual",
    "from_generators",
    "weight_distribution",
]
