# core/tools/golod.py
"""
Golod criteria for rooted monomial rings:

    gcd condition  <=>  product on Tor^S(R, k) vanishes  <=>  every μ_n is minimal

Each criterion is computed on its own; the verdict is their consensus and a
disagreement is an internal error.
"""

import logging
from itertools import combinations
from typing import Optional

from core.models.complex import FieldConfig
from core.models.golod import CriterionResult, GolodReport, MinimalityWitness, MuMinimalityReport
from core.models.monomial import MonomialIdeal
from core.models.rooting import RootingMap, TotalOrder
from core.tools.ainfty import TransferDiagram, basis_tensors, transfer_diagram
from core.tools.errors import InternalConsistencyError, NotRootedPresentationError
from core.tools.massey import HomologyBasis, MasseyCalculator, homology_basis
from core.tools.monomial_core import divides_exps, gcd_exps, is_unit, lcm_exps
from core.tools.parallel import map_ordered
from core.tools.resolution import is_minimal

logger = logging.getLogger(__name__)


def _coprime_pairs(ideal: MonomialIdeal):
    for i, j in combinations(range(1, ideal.r + 1), 2):
        if is_unit(gcd_exps(ideal.gen(i), ideal.gen(j))):
            yield i, j


def gcd_condition(ideal: MonomialIdeal) -> CriterionResult:
    """Every coprime pair m_i, m_j has a third generator dividing lcm(m_i, m_j)."""
    texts = ideal.generator_texts()
    for i, j in _coprime_pairs(ideal):
        top = lcm_exps(ideal.gen(i), ideal.gen(j))
        if not any(divides_exps(ideal.gen(k), top) for k in range(1, ideal.r + 1) if k not in (i, j)):
            return CriterionResult(criterion="gcd", holds=False, witness=[[i, j]],
                                   witness_text=f"{texts[i - 1]}, {texts[j - 1]}")
    return CriterionResult(criterion="gcd", holds=True)


def pi_gcd(ideal: MonomialIdeal, pi: RootingMap) -> CriterionResult:
    """π(lcm(m_i, m_j)) ∉ {i, j} for every coprime pair."""
    texts = ideal.generator_texts()
    for i, j in _coprime_pairs(ideal):
        if pi(lcm_exps(ideal.gen(i), ideal.gen(j))) in (i, j):
            return CriterionResult(criterion="pi_gcd", holds=False, witness=[[i, j]],
                                   witness_text=f"{texts[i - 1]}, {texts[j - 1]}")
    return CriterionResult(criterion="pi_gcd", holds=True)


def mu_minimality_report(D: TransferDiagram, n_max: Optional[int] = None) -> MuMinimalityReport:
    """Every coefficient of every μ_n on positive-degree basis tensors lies in (x_1, ..., x_m)."""
    n_max = n_max or D.arity_bound()
    checked = 0
    for n in range(2, n_max + 1):
        for args in basis_tensors(D.basis(), n, D.top_degree + 2 - n):
            checked += 1
            value = D.mu_n(args)
            units = value.unit_terms()
            if units:
                w = MinimalityWitness(n=n, args=[list(a) for a in args], face=list(units[0][0]),
                                      value=value.to_text(D.ideal.ctx))
                logger.info(f"μ_{n}{w.args} has a unit coefficient on u_{w.face}")
                return MuMinimalityReport(minimal=False, n_max=n_max, tensors_checked=checked, witness=w)
    return MuMinimalityReport(minimal=True, n_max=n_max, tensors_checked=checked)


def product_vanishes(D: TransferDiagram) -> CriterionResult:
    """μ_2 ⊗ 1 = 0 on positive-degree basis pairs of F."""
    for args in basis_tensors(D.basis(), 2, D.top_degree):
        value = D.mu_n(args)
        if value.unit_terms():
            return CriterionResult(criterion="product", holds=False, witness=[list(a) for a in args],
                                   witness_text=f"μ2{[list(a) for a in args]} = {value.to_text(D.ideal.ctx)}")
    return CriterionResult(criterion="product", holds=True)


def product_vanishes_homology(basis: HomologyBasis) -> CriterionResult:
    """The product of any two positive-degree classes of H(T⊗k) is zero."""
    calc = MasseyCalculator(basis)
    positive = basis.positive_classes()
    for a in positive:
        for b in positive:
            res = calc.product((a, b))
            if not res.contains_zero:
                return CriterionResult(criterion="product_homology", holds=False, witness=[[a], [b]],
                                       witness_text=f"class {a} · class {b} = {res.representative}")
    return CriterionResult(criterion="product_homology", holds=True)


def golod_verdict(
    ideal: MonomialIdeal,
    pi: Optional[RootingMap] = None,
    order: Optional[TotalOrder] = None,
    field: Optional[FieldConfig] = None,
    n_max: Optional[int] = None,
    threads: int = 1,
) -> GolodReport:
    """
    Decide whether S/I is Golod from a minimal rooted presentation.

    The gcd condition, the π-gcd criterion, μ-minimality and vanishing of the
    product (chain level and homology level) are computed independently; they
    must agree for a rooted ring.

    Args:
        ideal: minimally generated monomial ideal
        pi: rooting map; the Lyubeznik rooting of `order` when omitted
        order: total order on generators, identity when omitted
        field: coefficient field for the homology-level checks
        n_max: arity bound for μ-minimality, derived from the top degree when omitted
        threads: worker threads for strand jobs

    Returns:
        GolodReport: verdict, one CriterionResult per criterion, warnings

    Raises:
        NotRootedPresentationError: the rooted complex is not minimal
        InternalConsistencyError: the criteria disagree
    """
    D = transfer_diagram(ideal, order=order, pi=pi)
    minimal = is_minimal(D.F)
    if not minimal.verdict:
        raise NotRootedPresentationError(
            f"the rooted resolution is not minimal (u_{minimal.witness_face} -> u_{minimal.witness_facet}); "
            "the rooted Golod criteria do not apply"
        )
    warnings = []
    if ideal.min_generator_degree() <= 1:
        warnings.append("a generator has degree 1: the ideal is not inside the square of the maximal ideal")
        logger.warning(warnings[-1])

    jobs = [
        lambda: gcd_condition(ideal),
        lambda: pi_gcd(ideal, D.pi),
        lambda: product_vanishes(D),
        lambda: product_vanishes_homology(homology_basis(ideal, field)),
        lambda: mu_minimality_report(D, n_max),
    ]
    gcd, pig, prod, prod_h, mu = map_ordered(lambda job: job(), jobs, threads)
    report = GolodReport(
        verdict="Golod" if gcd.holds else "NotGolod", order=D.pi.order,
        gcd_condition=gcd, pi_gcd=pig, product_vanishes=prod, product_vanishes_homology=prod_h,
        mu_minimality=mu, warnings=warnings,
    )
    if len(set(report.criteria())) != 1:
        report.verdict = "Inconsistent"
        logger.error(f"Golod criteria disagree: {report.criteria()}")
        raise InternalConsistencyError("Golod criteria disagree on a rooted ring", report=report)
    logger.info(f"verdict: {report.verdict}")
    return report
