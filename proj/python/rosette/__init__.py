"""Rosette harmonic mappings: series, boundary features, figures and verification."""

import json as _json

from . import _core

from ._core import (
    DomainError,
    IoError,
    NoConvergence,
    NonCanonicalBeta,
    ParseError,
    RosetteError,
    SingularPoint,
    boundary_point,
    endpoint_values,
    eval_series,
    f,
    gamma,
    jacobian,
    parse_beta,
    reduce_beta,
    render_svg,
    run_cli,
)


def features(n, beta):
    """Feature report for f_beta with n cusps, as a dict."""
    return _json.loads(_core.features_json(n, beta))


__all__ = [
    "DomainError",
    "IoError",
    "NoConvergence",
    "NonCanonicalBeta",
    "ParseError",
    "RosetteError",
    "SingularPoint",
    "boundary_point",
    "endpoint_values",
    "eval_series",
    "f",
    "features",
    "gamma",
    "jacobian",
    "parse_beta",
    "reduce_beta",
    "render_svg",
    "run_cli",
]
