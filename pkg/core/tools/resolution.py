# core/tools/resolution.py
"""
The chain complex F_Δ over S, the Taylor resolution and its dga product,
minimality, and multigraded Betti numbers from the strands of T⊗k.
"""

import logging
from collections import defaultdict
from typing import Dict, List, Optional, Sequence, Tuple

from core.models.complex import FieldConfig, LabeledComplex
from core.models.element import TaylorElement
from core.models.monomial import Exps, Face, MonomialIdeal
from core.models.resolution import BettiRecord, BettiTable, ComplexKind, FreeComplex, MinimalityVerdict
from core.tools.errors import InputError, InternalConsistencyError
from core.tools.linalg import FieldLinalg
from core.tools.monomial_core import gcd_exps
from core.tools.parallel import map_ordered
from core.tools.simplicial import full_simplex

logger = logging.getLogger(__name__)


# =============================================================================
# Signs
# =============================================================================

def merge_sign(a: Face, b: Face) -> int:
    """
    Sign of the shuffle sorting a·b into increasing order, 0 if a and b meet.
    Both faces must already be increasing.
    """
    inversions = 0
    j = 0
    nb = len(b)
    for x in a:
        while j < nb and b[j] < x:
            j += 1
        if j < nb and b[j] == x:
            return 0
        inversions += j
    return -1 if inversions % 2 else 1


def merge(a: Face, b: Face) -> Face:
    return tuple(sorted(a + b))


# =============================================================================
# Complexes
# =============================================================================

def build_chain_complex(
    cx: LabeledComplex,
    ideal: MonomialIdeal,
    kind: ComplexKind = "custom",
    order: Optional[Sequence[int]] = None,
) -> FreeComplex:
    """Assemble d(u_J) = Σ (-1)^(i+1) (m_J / m_{J^i}) u_{J^i} and verify d∘d = 0."""
    if cx.r != ideal.r:
        raise InputError(f"complex on {cx.r} vertices, ideal with {ideal.r} generators")
    if not cx.is_subset_closed():
        raise InputError("complex is not closed under taking subsets")
    for face, lab in zip(cx.faces, cx.labels):
        if lab != ideal.label(face):
            raise InputError(f"label of face {list(face)} is not the lcm of its generators")
    fc = FreeComplex(ideal=ideal, complex=cx, kind=kind, order=list(order) if order else None)
    for face in cx.faces:
        if len(face) >= 2:
            dd = differential(fc, differential(fc, TaylorElement.basis(face, ideal.m)))
            if dd:
                raise InternalConsistencyError(f"d∘d ≠ 0 on u_{list(face)}: {dd!r}")
    logger.info(f"built {kind} complex: ranks {fc.ranks()}")
    return fc


def taylor_resolution(ideal: MonomialIdeal, guard: Optional[int] = None) -> FreeComplex:
    return build_chain_complex(full_simplex(ideal, guard), ideal, kind="taylor")


def differential(fc: FreeComplex, u: TaylorElement) -> TaylorElement:
    out = TaylorElement()
    for coeff, face, c in u:
        for sign, step, target in fc.incidences(face):
            out.add_term(tuple(a + b for a, b in zip(coeff, step)), target, sign * c)
    return out


def taylor_differential(ideal: MonomialIdeal, u: TaylorElement) -> TaylorElement:
    """d on the full Taylor complex without materializing it."""
    out = TaylorElement()
    cache: Dict[Face, Exps] = {}

    def lab(f: Face) -> Exps:
        if f not in cache:
            cache[f] = ideal.label(f)
        return cache[f]

    for coeff, face, c in u:
        top = lab(face)
        for i in range(len(face)):
            sub = face[:i] + face[i + 1:]
            step = tuple(a - b for a, b in zip(top, lab(sub)))
            out.add_term(tuple(a + b for a, b in zip(coeff, step)), sub, c if i % 2 == 0 else -c)
    return out


def simplicial_boundary(u: TaylorElement) -> TaylorElement:
    """∂: the coefficient-free simplicial boundary, applied termwise."""
    out = TaylorElement()
    for coeff, face, c in u:
        for i in range(len(face)):
            out.add_term(coeff, face[:i] + face[i + 1:], c if i % 2 == 0 else -c)
    return out


# =============================================================================
# Products
# =============================================================================

def taylor_product(ideal: MonomialIdeal, a: TaylorElement, b: TaylorElement) -> TaylorElement:
    """u_I u_J = sgn(I,J) (m_I m_J / m_{I∪J}) u_{I∪J}, extended bilinearly."""
    out = TaylorElement()
    labels: Dict[Face, Exps] = {}

    def lab(f: Face) -> Exps:
        if f not in labels:
            labels[f] = ideal.label(f)
        return labels[f]

    for ca, fa, sa in a:
        la = lab(fa)
        for cb, fb, sb in b:
            sign = merge_sign(fa, fb)
            if not sign:
                continue
            g = gcd_exps(la, lab(fb))
            coeff = tuple(x + y + z for x, y, z in zip(ca, cb, g))
            out.add_term(coeff, merge(fa, fb), sign * sa * sb)
    return out


def exterior_product(a: TaylorElement, b: TaylorElement) -> TaylorElement:
    """Product of the exterior algebra on the u_i: the Taylor sign rule with no coefficient."""
    out = TaylorElement()
    for ca, fa, sa in a:
        for cb, fb, sb in b:
            sign = merge_sign(fa, fb)
            if sign:
                out.add_term(tuple(x + y for x, y in zip(ca, cb)), merge(fa, fb), sign * sa * sb)
    return out


# =============================================================================
# Minimality and Betti numbers
# =============================================================================

def is_minimal(fc: FreeComplex) -> MinimalityVerdict:
    for face in fc.faces:
        for _, step, target in fc.incidences(face):
            if not any(step):
                return MinimalityVerdict(verdict=False, witness_face=list(face), witness_facet=list(target))
    return MinimalityVerdict(verdict=True)


def taylor_strands(ideal: MonomialIdeal, guard: Optional[int] = None) -> Dict[Exps, Dict[int, List[Face]]]:
    """Faces of the full simplex grouped by label, then by cardinality (basis order)."""
    cx = full_simplex(ideal, guard)
    strands: Dict[Exps, Dict[int, List[Face]]] = defaultdict(lambda: defaultdict(list))
    for face, lab in zip(cx.faces, cx.labels):
        strands[lab][len(face)].append(face)
    return {lab: dict(by_size) for lab, by_size in strands.items()}


def strand_boundary(faces_hi: List[Face], faces_lo: List[Face]) -> List[List[int]]:
    """
    d⊗k restricted to one strand: J -> J^i survives exactly when both share the label,
    which holds iff J^i lies in the same strand.
    """
    index = {f: k for k, f in enumerate(faces_lo)}
    rows = [[0] * len(faces_hi) for _ in faces_lo]
    for c, face in enumerate(faces_hi):
        for i in range(len(face)):
            sub = face[:i] + face[i + 1:]
            k = index.get(sub)
            if k is not None:
                rows[k][c] += 1 if i % 2 == 0 else -1
    return rows


def strand_ranks(by_size: Dict[int, List[Face]], field: Optional[FieldConfig] = None) -> Dict[int, int]:
    la = FieldLinalg(field)
    sizes = sorted(by_size)
    d_rank: Dict[int, int] = {}
    for j in sizes:
        lo = by_size.get(j - 1, [])
        if lo:
            d_rank[j] = la.rank(strand_boundary(by_size[j], lo), len(by_size[j]))
    out = {}
    for j in sizes:
        h = len(by_size[j]) - d_rank.get(j, 0) - d_rank.get(j + 1, 0)
        if h:
            out[j] = h
    return out


def multidegree_key(exps: Exps) -> Tuple[int, Exps]:
    return (sum(exps), tuple(-e for e in exps))


def tor_betti_via_taylor(
    ideal: MonomialIdeal,
    field: Optional[FieldConfig] = None,
    threads: int = 1,
    guard: Optional[int] = None,
) -> BettiTable:
    """Tor^S(S/I, k) = H(T⊗k), computed strand by strand."""
    field = field or FieldConfig()
    strands = taylor_strands(ideal, guard)
    labels = sorted(strands, key=multidegree_key)
    results = map_ordered(lambda lab: strand_ranks(strands[lab], field), labels, threads)
    records: List[BettiRecord] = []
    totals: Dict[int, int] = defaultdict(int)
    for lab, ranks in zip(labels, results):
        for j in sorted(ranks):
            records.append(BettiRecord(
                multidegree=ideal.ctx.format(lab), exponents=list(lab), j=j, rank=ranks[j],
            ))
            totals[j] += ranks[j]
    top = max(totals) if totals else 0
    table = BettiTable(records=records, totals=[totals.get(j, 0) for j in range(top + 1)], field=field.tag())
    logger.info(f"Betti numbers over {field.tag()}: {table.totals}")
    return table


# =============================================================================
# Export
# =============================================================================

def differential_matrix(fc: FreeComplex, j: int) -> List[List[str]]:
    """d_j as a dense matrix of monomial strings: rows F_{j-1}, columns F_j, basis order."""
    ctx = fc.ideal.ctx
    rows_f = fc.basis(j - 1)
    cols_f = fc.basis(j)
    index = {f: k for k, f in enumerate(rows_f)}
    grid = [["0"] * len(cols_f) for _ in rows_f]
    for c, face in enumerate(cols_f):
        for sign, step, target in fc.incidences(face):
            text = ctx.format(step)
            grid[index[target]][c] = text if sign > 0 else f"-{text}"
    return grid


def render_matrix(grid: List[List[str]]) -> str:
    if not grid:
        return "[]"
    width = max(len(x) for row in grid for x in row) if grid and grid[0] else 1
    lines = ["[" + " ".join(x.rjust(width) for x in row) + "]" for row in grid]
    return "\n".join(lines)
