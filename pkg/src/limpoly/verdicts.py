"""Verdict record shared by every claim checker.

A checker evaluates each hypothesis and the conclusion of one claim on
one concrete instance, records a signed margin for every inequality
(positive = strictly satisfied, measured as bound minus attained value
for upper bounds), and classifies the instance.  COUNTEREXAMPLE is only
emitted when every hypothesis margin clears the noise boundary and the
conclusion margin fails beyond it, so boundary ties never count as
counterexamples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

__all__ = [
    "ClaimId",
    "ClaimVerdict",
    "Classification",
    "ConclusionCheck",
    "HypothesisCheck",
    "build_verdict",
    "classify",
    "conclusion_check",
    "hypothesis_check",
]


class ClaimId(str, Enum):
    REAL_CASE = "REAL_CASE"
    BASIC_INEQUALITY = "BASIC_INEQUALITY"
    SQUEEZE = "SQUEEZE"
    PERM_SUM_BOUND = "PERM_SUM_BOUND"
    DERIV_SUM_BOUND = "DERIV_SUM_BOUND"
    INDEX_BOUND = "INDEX_BOUND"
    PRODUCT_PROP = "PRODUCT_PROP"


class Classification(str, Enum):
    HYPOTHESES_NOT_MET = "HYPOTHESES_NOT_MET"
    CONFIRMED = "CONFIRMED"
    COUNTEREXAMPLE = "COUNTEREXAMPLE"


@dataclass(frozen=True)
class HypothesisCheck:
    name: str
    met: bool
    margin: float
    boundary: float = 0.0  # noise gap at this margin's scale


@dataclass(frozen=True)
class ConclusionCheck:
    holds: bool
    margin: float
    boundary: float = 0.0


@dataclass(frozen=True)
class ClaimVerdict:
    claim_id: ClaimId
    hypotheses: tuple[HypothesisCheck, ...]
    conclusion: ConclusionCheck
    classification: Classification
    details: dict = field(default_factory=dict)


def hypothesis_check(name: str, margin: float, boundary: float = 0.0) -> HypothesisCheck:
    return HypothesisCheck(name=name, met=margin > 0.0, margin=margin, boundary=boundary)


def conclusion_check(margin: float, boundary: float = 0.0) -> ConclusionCheck:
    return ConclusionCheck(holds=margin > 0.0, margin=margin, boundary=boundary)


def classify(hypotheses: tuple[HypothesisCheck, ...], concl: ConclusionCheck) -> Classification:
    if not all(h.met for h in hypotheses):
        return Classification.HYPOTHESES_NOT_MET
    if concl.holds:
        return Classification.CONFIRMED
    clear_hypotheses = all(h.margin > h.boundary for h in hypotheses)
    clear_failure = concl.margin < -concl.boundary
    if clear_hypotheses and clear_failure:
        return Classification.COUNTEREXAMPLE
    # Conclusion failed only within noise of the boundary: not a counterexample.
    return Classification.CONFIRMED


def build_verdict(
    claim_id: ClaimId,
    hypotheses: tuple[HypothesisCheck, ...],
    concl: ConclusionCheck,
    **details,
) -> ClaimVerdict:
    return ClaimVerdict(
        claim_id=claim_id,
        hypotheses=hypotheses,
        conclusion=concl,
        classification=classify(hypotheses, concl),
        details=details,
    )
