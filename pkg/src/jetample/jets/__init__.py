"""Seshadri constants, threshold calculators and jet certificates."""

from .blowup import (
    SELF_INTERSECTION_BOUND,
    BlowupModel,
    InvalidBlowup,
    NoPositiveCurves,
    SeshadriValue,
    seshadri,
    seshadri_bounds,
)
from .certify import (
    BOUNDARY,
    CERTIFIED,
    INCONCLUSIVE,
    OBSTRUCTIONS,
    Certificate,
    HypothesisError,
    MissingBlowupModel,
    NonCartierAdjoint,
    NonCartierOnNonGorenstein,
    adjunction_genus,
    certify_jets,
    prop44_search,
)
from .obstructions import (
    MODES,
    EmptyModel,
    NotNef,
    ObstructionCandidate,
    enumerate_obstructions,
    mode_checks,
)
from .thresholds import (
    COR42_ASSUMPTIONS,
    COR43_ASSUMPTIONS,
    prop41_check,
    threshold_cor42,
    threshold_cor43,
)

__all__ = [
    "BOUNDARY",
    "BlowupModel",
    "CERTIFIED",
    "COR42_ASSUMPTIONS",
    "COR43_ASSUMPTIONS",
    "Certificate",
    "EmptyModel",
    "HypothesisError",
    "INCONCLUSIVE",
    "InvalidBlowup",
    "MODES",
    "MissingBlowupModel",
    "NoPositiveCurves",
    "NonCartierAdjoint",
    "NonCartierOnNonGorenstein",
    "NotNef",
    "OBSTRUCTIONS",
    "ObstructionCandidate",
    "SELF_INTERSECTION_BOUND",
    "SeshadriValue",
    "adjunction_genus",
    "certify_jets",
    "enumerate_obstructions",
    "mode_checks",
    "prop41_check",
    "prop44_search",
    "seshadri",
    "seshadri_bounds",
    "threshold_cor42",
    "threshold_cor43",
]
