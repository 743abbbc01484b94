"""Verification of curvature identities for real hypersurfaces in the complex quadric."""

import json

from ._core import (
    QuadricError,
    ambient_curvature,
    check_names,
    classify_normal,
    commutator_norm,
    jacobi_rx,
    normal_jacobi,
    principal_curvatures,
    structure_jacobi,
    tube,
)
from . import _core

__all__ = [
    "QuadricError",
    "ambient_curvature",
    "check_names",
    "classify_normal",
    "commutator_norm",
    "jacobi_rx",
    "normal_jacobi",
    "principal_curvatures",
    "run_suite",
    "structure_jacobi",
    "tube",
]


def run_suite(
    m=(3, 4, 5),
    mode="both",
    u=("1/2", "1", "2"),
    r=(),
    seeds=(42,),
    suite=(),
    trials=50,
    tolerance=None,
    perturb_lambda="0",
):
    """Run the check suite and return the structured report as a dict."""
    text = _core.run_suite_json(
        list(m),
        mode,
        [str(x) for x in u],
        list(r),
        list(seeds),
        list(suite),
        trials,
        tolerance,
        str(perturb_lambda),
    )
    return json.loads(text)
