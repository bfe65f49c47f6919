"""Regular hyperbolic polygon perimeters and the filling-pair length bound."""

import json

from ._core import (
    DomainError,
    HypothesisError,
    NoSignChangeError,
    ParameterError,
    area_from_angle,
    brute_force_min,
    enumerate_partition_shapes,
    h_n,
    interior_angle,
    merge_margins,
    mg,
    perim_continuous,
    perim_regular,
    phi_tilde,
    phi_tilde_root,
    systole_lower_bound,
    threshold_angle,
)
from . import _core


def verify(lemma, pieces=None, seed=0, **overrides):
    """Run one verification and return its report as a dict.

    Keyword overrides use the command-line flag names with underscores,
    e.g. ``verify("L4_3", x=0.1, t_lo=2.2, t_hi=4.0)``. ``pieces`` is a list
    of ``(m, area)`` pairs for ``MAIN_THEOREM``.
    """
    values = {k.replace("_", "-"): float(v) for k, v in overrides.items()}
    text = ",".join(f"{m}:{a!r}" for m, a in pieces) if pieces else ""
    return json.loads(_core._verify_json(lemma, values, text, seed))


def certify(genus=2, k_max=3, samples=50, seed=0, grid=64):
    lo, hi = (genus, genus) if isinstance(genus, int) else genus
    return json.loads(_core._certify_json(lo, hi, k_max, samples, seed, grid))


__all__ = [
    "DomainError",
    "HypothesisError",
    "NoSignChangeError",
    "ParameterError",
    "area_from_angle",
    "brute_force_min",
    "certify",
    "enumerate_partition_shapes",
    "h_n",
    "interior_angle",
    "merge_margins",
    "mg",
    "perim_continuous",
    "perim_regular",
    "phi_tilde",
    "phi_tilde_root",
    "systole_lower_bound",
    "threshold_angle",
    "verify",
]
