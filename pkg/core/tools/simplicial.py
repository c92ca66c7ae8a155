# core/tools/simplicial.py
"""
Simplicial complexes on generator indices: construction, restriction to a
multidegree, reduced homology over a field, the acyclicity test for
simplicial resolutions, and Stanley-Reisner translation (with Hochster's
formula as an independent Tor oracle).
"""

import logging
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from core.models.complex import FieldConfig, LabeledComplex, SupportVerdict, face_key
from core.models.monomial import Exps, Face, Monomial, MonomialIdeal, VariableContext
from core.tools.config import get_guard_config
from core.tools.errors import InputError, NoNonFaceError, check_guard
from core.tools.linalg import FieldLinalg
from core.tools.monomial_core import build_lcm_lattice, divides_exps, lcm_exps
from core.tools.parallel import map_ordered

logger = logging.getLogger(__name__)


# =============================================================================
# Construction
# =============================================================================

def complex_from_faces(ideal: MonomialIdeal, faces: Iterable[Face]) -> LabeledComplex:
    """Label the given faces by m_J; the subset closure is taken."""
    closed: Set[Face] = {()}
    for f in faces:
        f = tuple(sorted(f))
        for i in f:
            if i < 1 or i > ideal.r:
                raise InputError(f"face {list(f)} uses vertex {i} outside 1..{ideal.r}")
        for k in range(len(f) + 1):
            closed.update(combinations(f, k))
    ordered = sorted(closed, key=face_key)
    return LabeledComplex(r=ideal.r, faces=ordered, labels=[ideal.label(f) for f in ordered])


def full_simplex(ideal: MonomialIdeal, guard: Optional[int] = None) -> LabeledComplex:
    limit = guard if guard is not None else get_guard_config().subsets
    check_guard("subsets", limit, ideal.r)
    faces: List[Face] = [()]
    labels: List[Exps] = [(0,) * ideal.m]
    # grow by appending larger vertices so each label is one lcm away from its parent
    frontier = [((), (0,) * ideal.m)]
    while frontier:
        nxt = []
        for face, lab in frontier:
            start = face[-1] + 1 if face else 1
            for v in range(start, ideal.r + 1):
                f2 = face + (v,)
                l2 = lcm_exps(lab, ideal.gen(v))
                faces.append(f2)
                labels.append(l2)
                nxt.append((f2, l2))
        frontier = nxt
    logger.debug(f"full simplex on {ideal.r} vertices: {len(faces)} faces")
    return LabeledComplex(r=ideal.r, faces=faces, labels=labels)


def plain_complex(faces: Iterable[Face], n: int) -> LabeledComplex:
    """Unlabeled complex on [n]; each face carries its squarefree indicator vector."""
    closed: Set[Face] = {()}
    for f in faces:
        f = tuple(sorted(f))
        for k in range(len(f) + 1):
            closed.update(combinations(f, k))
    ordered = sorted(closed, key=face_key)
    labels = [tuple(1 if v + 1 in f else 0 for v in range(n)) for f in ordered]
    return LabeledComplex(r=n, faces=ordered, labels=labels)


def restrict_to_multidegree(cx: LabeledComplex, mu: Exps) -> LabeledComplex:
    """Δ_μ = {J ∈ Δ : m_J divides μ}."""
    keep = [k for k, lab in enumerate(cx.labels) if divides_exps(lab, mu)]
    return LabeledComplex(r=cx.r, faces=[cx.faces[k] for k in keep], labels=[cx.labels[k] for k in keep])


def restrict_to_vertices(cx: LabeledComplex, vertices: Sequence[int]) -> LabeledComplex:
    vs = set(vertices)
    keep = [k for k, f in enumerate(cx.faces) if vs.issuperset(f)]
    return LabeledComplex(r=cx.r, faces=[cx.faces[k] for k in keep], labels=[cx.labels[k] for k in keep])


# =============================================================================
# Homology
# =============================================================================

def boundary_rows(cx: LabeledComplex, size: int) -> Tuple[List[List[int]], int]:
    """
    Matrix of ∂ from faces of `size` to faces of `size - 1`, one row per
    target face, sign (-1)^(i+1) on the i-th deletion (1-based).
    """
    sources = cx.faces_of_size(size)
    targets = cx.faces_of_size(size - 1)
    t_index = {f: k for k, f in enumerate(targets)}
    rows = [[0] * len(sources) for _ in targets]
    for c, face in enumerate(sources):
        for i in range(len(face)):
            sub = face[:i] + face[i + 1:]
            if sub in t_index:
                rows[t_index[sub]][c] += -1 if i % 2 else 1
    return rows, len(sources)


def reduced_homology_ranks(cx: LabeledComplex, field: Optional[FieldConfig] = None) -> List[int]:
    """Ranks of H̃_i for i = -1 .. dim Δ."""
    la = FieldLinalg(field)
    top = cx.top_size
    if top < 0:
        return []
    ranks_d: Dict[int, int] = {}
    for size in range(1, top + 1):
        rows, ncols = boundary_rows(cx, size)
        ranks_d[size] = la.rank(rows, ncols)
    counts = cx.face_counts()
    out = []
    for size in range(0, top + 1):
        out.append(counts[size] - ranks_d.get(size, 0) - ranks_d.get(size + 1, 0))
    return out


def euler_characteristic(cx: LabeledComplex) -> int:
    """Reduced Euler characteristic Σ (-1)^i f_i over i = -1 .. dim."""
    return sum((-1) ** (len(f) - 1) for f in cx.faces)


def _check_multidegree(args):
    cx, mu, field = args
    sub = restrict_to_multidegree(cx, mu)
    if sub.top_size <= 0:
        return None
    ranks = reduced_homology_ranks(sub, field)
    if any(ranks):
        return ranks
    return None


def is_supporting_resolution(
    cx: LabeledComplex,
    ideal: MonomialIdeal,
    field: Optional[FieldConfig] = None,
    threads: int = 1,
) -> SupportVerdict:
    """F_Δ resolves S/I iff every Δ_μ, μ in L(I), is empty or acyclic."""
    if cx.r != ideal.r:
        raise InputError(f"complex has {cx.r} vertices but the ideal has {ideal.r} generators")
    lattice = build_lcm_lattice(ideal)
    mus = lattice.proper_elements()
    results = map_ordered(_check_multidegree, [(cx, mu, field) for mu in mus], threads)
    for mu, ranks in zip(mus, results):
        if ranks is not None:
            logger.info(f"complex does not support a resolution: Δ_μ not acyclic at {ideal.ctx.format(mu)}")
            return SupportVerdict(verdict=False, witness=mu, witness_text=ideal.ctx.format(mu), ranks=ranks)
    return SupportVerdict(verdict=True)


# =============================================================================
# Stanley-Reisner rings
# =============================================================================

def facet_closure(facets: Sequence[Face], m: int) -> Set[Face]:
    faces: Set[Face] = {()}
    for f in facets:
        f = tuple(sorted(set(f)))
        for v in f:
            if v < 1 or v > m:
                raise InputError(f"facet {list(f)} has vertex {v} outside 1..{m}")
        for k in range(len(f) + 1):
            faces.update(combinations(f, k))
    return faces


def minimal_nonfaces(facets: Sequence[Face], m: int) -> List[Face]:
    faces = facet_closure(facets, m)
    found: Set[Face] = set()
    for f in faces:
        for v in range(1, m + 1):
            if v in f:
                continue
            cand = tuple(sorted(f + (v,)))
            if cand in faces or cand in found:
                continue
            if all(cand[:i] + cand[i + 1:] in faces for i in range(len(cand))):
                found.add(cand)
    return sorted(found, key=face_key)


def default_context(m: int) -> VariableContext:
    return VariableContext(names=tuple(f"x{i}" for i in range(1, m + 1)))


def stanley_reisner_ideal(facets: Sequence[Face], m: int, ctx: Optional[VariableContext] = None) -> MonomialIdeal:
    """Ideal of minimal non-faces x_{i1}...x_{ik} of the complex generated by the facets."""
    ctx = ctx or default_context(m)
    if ctx.m != m:
        raise InputError(f"context has {ctx.m} variables, complex has {m} vertices")
    nonfaces = minimal_nonfaces(facets, m)
    if not nonfaces:
        raise NoNonFaceError("the complex is a full simplex: its Stanley-Reisner ideal is zero")
    gens = tuple(
        Monomial(exponents=tuple(1 if v + 1 in nf else 0 for v in range(m)))
        for nf in nonfaces
    )
    logger.info(f"Stanley-Reisner ideal: {len(gens)} minimal non-faces on {m} vertices")
    return MonomialIdeal(ctx=ctx, generators=gens)


def hochster_ranks(
    facets: Sequence[Face],
    m: int,
    field: Optional[FieldConfig] = None,
    guard: Optional[int] = None,
) -> List[Tuple[Face, int, int]]:
    """
    Tor_j(k[Δ], k) at squarefree degree W from H̃_{|W|-j-1}(Δ|_W).
    Returns (W, j, rank) with rank > 0, sorted by (|W|, W, j).
    """
    limit = guard if guard is not None else get_guard_config().subsets
    check_guard("subsets", limit, m)
    cx = plain_complex(facet_closure(facets, m), m)
    out = []
    for size in range(0, m + 1):
        for w in combinations(range(1, m + 1), size):
            sub = restrict_to_vertices(cx, w)
            ranks = reduced_homology_ranks(sub, field)
            for pos, rank in enumerate(ranks):
                if rank:
                    i = pos - 1
                    out.append((w, size - i - 1, rank))
    out.sort(key=lambda t: (len(t[0]), t[0], t[1]))
    return out
