# core/tools/series.py
"""
Poincaré series of R = S/I.

The Serre bound (1+t)^m / (1 − Σ_{j≥1} β_j t^{j+1}) is expanded exactly.
Tor^R_j(k, k) is computed independently from the normalized bar complex of
R, one multidegree at a time. A multidegree strand is finite and exact, so
the only truncation is the internal-degree cap; dims are reported for the
caps and checked against caps + 1 and caps + 2.
"""

import logging
from collections import defaultdict
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from core.models.complex import FieldConfig
from core.models.monomial import Exps, MonomialIdeal
from core.models.series import BarComplexSlice, BarTorResult, CoefficientComparison, PoincareReport, PowerSeries
from core.tools.config import get_guard_config
from core.tools.errors import InputError, check_guard
from core.tools.linalg import FieldLinalg
from core.tools.monomial_core import divides_exps, mul_exps
from core.tools.parallel import map_ordered
from core.tools.resolution import tor_betti_via_taylor

logger = logging.getLogger(__name__)

t = sympy.Symbol("t")

BarWord = Tuple[Exps, ...]


# =============================================================================
# Serre bound
# =============================================================================

def golod_bound_series(betti: Sequence[int], m: int, N: int) -> PowerSeries:
    """
    (1+t)^m / (1 − t(Σ_j β_j t^j − 1)) truncated at t^N.

    Args:
        betti: total Betti numbers β_0..β_p of S/I, with β_0 = 1
        m: number of variables
        N: truncation order

    Returns:
        PowerSeries: N + 1 integer coefficients with the closed form as text

    Raises:
        InputError: β_0 ≠ 1 or N < 0
    """
    if not betti or betti[0] != 1:
        raise InputError(f"Betti sequence must start with 1, got {list(betti)}")
    if N < 0:
        raise InputError("truncation order must be non-negative")
    numerator = sympy.expand((1 + t) ** m)
    denominator = 1 - sum(b * t ** (j + 1) for j, b in enumerate(betti) if j >= 1)
    num = [int(c) for c in sympy.Poly(numerator, t).all_coeffs()[::-1]]
    coeffs: List[int] = []
    for k in range(N + 1):
        c = num[k] if k < len(num) else 0
        for j in range(1, len(betti)):
            if k - j - 1 >= 0:
                c += betti[j] * coeffs[k - j - 1]
        coeffs.append(c)
    return PowerSeries(coefficients=coeffs, order=N, numerator=str(numerator), denominator=str(denominator))


# =============================================================================
# Bar complex oracle
# =============================================================================

def _in_ideal(ideal: MonomialIdeal, e: Exps) -> bool:
    return any(divides_exps(g, e) for g in ideal.gens())


def standard_monomials(ideal: MonomialIdeal, cap: int) -> List[Exps]:
    """Monomials of degree 1..cap that are non-zero in R, by degree."""
    m = ideal.m
    units = [tuple(1 if i == k else 0 for i in range(m)) for k in range(m)]
    level = sorted({u for u in units if not _in_ideal(ideal, u)}, reverse=True)
    out: List[Exps] = []
    for _ in range(cap):
        if not level:
            break
        out.extend(level)
        grown = {mul_exps(e, u) for e in level for u in units}
        level = sorted((e for e in grown if not _in_ideal(ideal, e)), reverse=True)
    return out


def bar_slices(ideal: MonomialIdeal, j: int, cap: int, limit: Optional[int] = None) -> Dict[Exps, BarComplexSlice]:
    """Words f_1 ⊗ ... ⊗ f_j of standard monomials with total degree ≤ cap, grouped by multidegree."""
    limit = limit if limit is not None else get_guard_config().bar_basis
    stds = standard_monomials(ideal, cap)
    words: Dict[Exps, List[BarWord]] = defaultdict(list)
    count = 0

    def walk(prefix: BarWord, total: Exps, budget: int):
        nonlocal count
        if len(prefix) == j:
            count += 1
            check_guard("bar_basis", limit, count)
            words[total].append(prefix)
            return
        slots_after = j - len(prefix) - 1
        for f in stds:
            deg = sum(f)
            if deg + slots_after > budget:
                continue
            walk(prefix + (f,), mul_exps(total, f), budget - deg)

    walk((), (0,) * ideal.m, cap)
    return {mu: BarComplexSlice(j=j, multidegree=mu, basis=ws) for mu, ws in words.items()}


def _bar_rank(ideal: MonomialIdeal, la: FieldLinalg, source: List[BarWord], target: List[BarWord]) -> int:
    """Rank of b(f_1 ⊗ ... ⊗ f_j) = Σ_{i=1}^{j-1} (−1)^i f_1 ⊗ ... ⊗ f_i f_{i+1} ⊗ ... ⊗ f_j."""
    if not source or not target:
        return 0
    index = {w: k for k, w in enumerate(target)}
    rows = [[0] * len(source) for _ in target]
    for c, word in enumerate(source):
        for i in range(1, len(word)):
            merged = mul_exps(word[i - 1], word[i])
            if _in_ideal(ideal, merged):
                continue
            rows[index[word[:i - 1] + (merged,) + word[i + 1:]]][c] += -1 if i % 2 else 1
    return la.rank(rows, len(source))


def default_caps(ideal: MonomialIdeal, j_max: int) -> List[int]:
    step = max(max(sum(g) for g in ideal.gens()) - 1, 1)
    return [j * step + 1 for j in range(j_max + 1)]


def bar_tor_dims(
    ideal: MonomialIdeal,
    j_max: Optional[int] = None,
    caps: Optional[Sequence[int]] = None,
    field: Optional[FieldConfig] = None,
    threads: int = 1,
) -> BarTorResult:
    """
    dim Tor^R_j(k, k) from the normalized bar complex of R = S/I.

    Args:
        ideal: monomial ideal defining R
        j_max: largest homological degree, the configured default when omitted
        caps: internal degree cap per homological degree (len ≥ j_max + 1)
        field: coefficient field
        threads: worker threads for the per-degree rank jobs

    Returns:
        BarTorResult: dims per degree and whether raising each cap by two changed it

    Raises:
        InputError: too few caps
        GuardExceededError: a bar slice has more basis words than allowed
    """
    j_max = j_max if j_max is not None else get_guard_config().default_jmax
    caps = list(caps) if caps is not None else default_caps(ideal, j_max)
    if len(caps) < j_max + 1:
        raise InputError(f"need {j_max + 1} internal degree caps, got {len(caps)}")
    la = FieldLinalg(field)
    # B_l feeds H_{l-1}, H_l and H_{l+1}; every strand is taken up to cap + 2 for the stabilization check
    budget = {l: max(caps[max(l - 1, 0):min(l + 1, j_max) + 1]) + 2 for l in range(1, j_max + 2)}
    slices = {l: bar_slices(ideal, l, budget[l]) for l in range(1, j_max + 2)}

    def words(l: int, mu: Exps) -> List[BarWord]:
        sl = slices.get(l, {}).get(mu)
        return sl.basis if sl else []

    def strand_homology(job: Tuple[int, Exps]) -> int:
        j, mu = job
        here = words(j, mu)
        if not here:
            return 0
        rank_out = _bar_rank(ideal, la, here, words(j - 1, mu)) if j >= 2 else 0
        rank_in = _bar_rank(ideal, la, words(j + 1, mu), here)
        return len(here) - rank_out - rank_in

    jobs = [(j, mu) for j in range(1, j_max + 1) for mu in sorted(slices[j]) if sum(mu) <= caps[j] + 2]
    ranks = map_ordered(strand_homology, jobs, threads)
    by_degree: Dict[int, Dict[int, int]] = defaultdict(lambda: defaultdict(int))
    for (j, mu), h in zip(jobs, ranks):
        by_degree[j][sum(mu)] += h

    dims, stabilized = [1], [True]
    for j in range(1, j_max + 1):
        totals = [sum(h for d, h in by_degree[j].items() if d <= caps[j] + extra) for extra in (0, 1, 2)]
        dims.append(totals[0])
        stabilized.append(totals[0] == totals[1] == totals[2])
        if not stabilized[-1]:
            logger.warning(f"bar oracle for Tor_{j} not stabilized at cap {caps[j]}: {totals}")
    logger.info(f"bar oracle dims {dims} (caps {caps[:j_max + 1]})")
    return BarTorResult(dims=dims, caps=caps[:j_max + 1], stabilized=stabilized)


# =============================================================================
# Report
# =============================================================================

def poincare_report(
    ideal: MonomialIdeal,
    N: int,
    field: Optional[FieldConfig] = None,
    caps: Optional[Sequence[int]] = None,
    threads: int = 1,
) -> PoincareReport:
    """
    Compare the Serre bound with the bar-complex oracle coefficient by coefficient.

    Args:
        ideal: monomial ideal defining R
        N: truncation order of both series
        field: coefficient field
        caps: internal degree caps handed to the oracle
        threads: worker threads

    Returns:
        PoincareReport: both series, per-coefficient relations, equality flag and
        the first degree where the oracle drops below the bound
    """
    betti = tor_betti_via_taylor(ideal, field, threads).totals
    bound = golod_bound_series(betti, ideal.m, N)
    oracle = bar_tor_dims(ideal, N, caps, field, threads)
    comparisons = []
    for j in range(N + 1):
        b, o = bound.coefficients[j], oracle.dims[j]
        relation = "=" if o == b else ("<" if o < b else ">")
        comparisons.append(CoefficientComparison(j=j, bound=b, oracle=o, relation=relation,
                                                 stabilized=oracle.stabilized[j]))
    strict = next((c.j for c in comparisons if c.relation == "<"), None)
    report = PoincareReport(
        betti=betti, bound=bound, oracle=oracle, comparisons=comparisons,
        serre_inequality=all(c.relation != ">" for c in comparisons),
        equality=all(c.relation == "=" for c in comparisons),
        strict_at=strict,
    )
    if not report.serre_inequality:
        logger.warning("bar oracle exceeds the Serre bound; check the caps or the input")
    return report
