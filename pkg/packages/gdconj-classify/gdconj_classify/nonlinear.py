from __future__ import annotations

import logging
from fractions import Fraction

from gdconj_classify.errors import ClassificationError
from gdconj_classify.verdict import Verdict, VerdictKind
from gdconj_maps import MapError, Number
from gdconj_systems import VERTICES, SystemPair, is_dyadic

logger = logging.getLogger(__name__)

THEOREM = "non-linear Lipschitz criterion"

# phi is singular once the four Lipschitz norms of g multiply below this.
SINGULAR_PRODUCT = Fraction(1, 16)


def classify_nonlinear(pair: SystemPair) -> Verdict:
    pair.require_valid()
    if not is_dyadic(pair.f):
        raise ClassificationError("the Lipschitz criterion needs the dyadic f-system")

    norms: dict[str, Number] = {}
    estimated: list[str] = []
    for i in VERTICES:
        for j in VERTICES:
            try:
                norm = pair.g.map(i, j).lipschitz()
            except MapError as exc:
                raise ClassificationError(f"no Lipschitz norm for g[{i}][{j}]: {exc}") from exc
            norms[f"{i}{j}"] = norm.value
            if norm.estimated:
                estimated.append(f"{i}{j}")

    product: Number = Fraction(1)
    for value in norms.values():
        product = product * value
    details = {"lipschitz": norms, "product": product, "estimated": estimated}
    if estimated:
        logger.info("Lipschitz product uses grid estimates", extra={"edges": estimated})

    if product < SINGULAR_PRODUCT:
        return Verdict(
            kind=VerdictKind.SINGULAR,
            theorem=THEOREM,
            evidence=f"product of Lipschitz norms {product} < 1/16",
            details=details,
        )
    return Verdict(
        kind=VerdictKind.UNKNOWN,
        theorem=THEOREM,
        evidence=f"product of Lipschitz norms {product} >= 1/16; the criterion is inconclusive",
        details=details,
    )
