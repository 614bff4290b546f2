from __future__ import annotations

import logging

from gdconj_classify.affine import affine_params, classify_affine
from gdconj_classify.errors import NoTheoremApplies
from gdconj_classify.lf import LFSystemSpec, classify_lf
from gdconj_classify.nonlinear import classify_nonlinear
from gdconj_classify.verdict import Verdict, VerdictKind
from gdconj_systems import SystemPair, is_dyadic

logger = logging.getLogger(__name__)


def classify_pair(pair: SystemPair) -> Verdict:
    """Pick the criterion that covers the pair: affine, then linear fractional, then Lipschitz."""
    pair.require_valid()
    if pair.coincide:
        verdict = Verdict(
            kind=VerdictKind.IDENTITY,
            theorem="coincident systems",
            evidence="f and g agree map by map, so both conjugacies are the identity",
        )
    elif pair.f.is_affine and pair.g.is_affine:
        verdict = classify_affine(affine_params(pair))
    elif is_dyadic(pair.f) and pair.g.is_projective:
        verdict = classify_lf(LFSystemSpec.from_system(pair.g))
    elif is_dyadic(pair.f):
        verdict = classify_nonlinear(pair)
    else:
        raise NoTheoremApplies(
            f"no criterion covers {pair.label or 'this pair'}: f must be affine with affine g, or dyadic"
        )
    logger.info("Classified pair", extra={"pair": pair.label, "verdict": verdict.kind.value, "theorem": verdict.theorem})
    return verdict
