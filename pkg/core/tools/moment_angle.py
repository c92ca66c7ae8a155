# core/tools/moment_angle.py
"""
Cohomology of the moment-angle complex Z_Δ from Tor^S(k[Δ], k).

A Tor class of homological degree j sitting in squarefree multidegree of
support size s contributes to H^{2s - j}(Z_Δ).
"""

import logging
from collections import defaultdict
from typing import Dict, Optional, Sequence

from core.models.complex import FieldConfig
from core.models.job import MomentAngleReport
from core.models.monomial import Face
from core.tools.errors import InternalConsistencyError, NoNonFaceError
from core.tools.resolution import tor_betti_via_taylor
from core.tools.simplicial import hochster_ranks, stanley_reisner_ideal

logger = logging.getLogger(__name__)


def moment_angle_ranks(
    facets: Sequence[Face],
    m: int,
    field: Optional[FieldConfig] = None,
    threads: int = 1,
) -> MomentAngleReport:
    """
    H*(Z_Δ; k) via Tor of the Stanley-Reisner ring.

    Args:
        facets: facets of Δ on vertices 1..m
        m: number of vertices
        field: coefficient field
        threads: worker threads for the strand jobs

    Returns:
        MomentAngleReport: ranks keyed by cohomological degree, the Stanley-Reisner
        generators and whether Hochster's formula agrees
    """
    try:
        ideal = stanley_reisner_ideal(facets, m)
    except NoNonFaceError:
        logger.info("full simplex: Z_Δ is contractible")
        return MomentAngleReport(m=m, stanley_reisner=[], ranks={0: 1}, hochster_agrees=True)

    table = tor_betti_via_taylor(ideal, field, threads)
    ranks: Dict[int, int] = defaultdict(int)
    from_taylor = {}
    for rec in table.records:
        if any(e > 1 for e in rec.exponents):
            raise InternalConsistencyError(f"Tor class in non-squarefree degree {rec.multidegree}")
        support = tuple(i + 1 for i, e in enumerate(rec.exponents) if e)
        ranks[2 * len(support) - rec.j] += rec.rank
        from_taylor[(support, rec.j)] = rec.rank

    from_hochster = {(w, j): rank for w, j, rank in hochster_ranks(facets, m, field)}
    agrees = from_taylor == from_hochster
    if not agrees:
        logger.warning(f"Hochster ranks disagree with the Taylor strands: {from_hochster} vs {from_taylor}")
    logger.info(f"moment-angle cohomology ranks: {dict(sorted(ranks.items()))}")
    return MomentAngleReport(
        m=m, stanley_reisner=ideal.generator_texts(), ranks=dict(sorted(ranks.items())), hochster_agrees=agrees,
    )
