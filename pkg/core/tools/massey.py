# core/tools/massey.py
"""
Massey products on Tor^S(R, k) computed directly in the dga T⊗k.

Defining systems are solved level by level. Every a_ij is homogeneous: its
multidegree is the product of the class multidegrees it spans and its
homological degree is Σ deg α + (j − i − 1). At level ℓ ≥ 3 the cycle
variations of the level ℓ−1 entries enter the equations linearly, so each
level is a single exact linear system.
"""

import logging
import random
from dataclasses import dataclass, field
from itertools import product as tuples
from typing import Any, Dict, Hashable, List, Optional, Sequence, Tuple

from core.models.complex import FieldConfig
from core.models.massey import BrReport, ChainTerm, CrossCheckReport, HomologyClass, MasseyResult
from core.models.monomial import Exps, Face, MonomialIdeal
from core.tools.ainfty import TransferDiagram, basis_tensors
from core.tools.config import get_guard_config
from core.tools.errors import InternalConsistencyError, NotRootedPresentationError, check_guard
from core.tools.linalg import FieldLinalg
from core.tools.monomial_core import gcd_exps, is_unit
from core.tools.parallel import map_ordered
from core.tools.resolution import is_minimal, merge, merge_sign, strand_boundary, taylor_strands

logger = logging.getLogger(__name__)

Vector = Dict[Face, Any]
Key = Tuple[int, Face]


# =============================================================================
# T ⊗ k
# =============================================================================

class KoszulModel:
    """T⊗k: the full simplex with d and the Taylor product reduced mod (x_1, ..., x_m)."""

    def __init__(self, ideal: MonomialIdeal, field: Optional[FieldConfig] = None, guard: Optional[int] = None):
        self.ideal = ideal
        self.la = FieldLinalg(field)
        self.K = self.la.K
        self.strands = taylor_strands(ideal, guard)
        self._labels: Dict[Face, Exps] = {}

    def label(self, face: Face) -> Exps:
        lab = self._labels.get(face)
        if lab is None:
            lab = self._labels.setdefault(face, self.ideal.label(face))
        return lab

    def faces(self, label: Exps, size: int) -> List[Face]:
        return self.strands.get(label, {}).get(size, [])

    def axpy(self, out: Vector, v: Vector, factor: Any = 1) -> Vector:
        for f, c in v.items():
            x = out.get(f, self.K.zero) + factor * c
            if self.K.is_zero(x):
                out.pop(f, None)
            else:
                out[f] = x
        return out

    def d(self, v: Vector) -> Vector:
        out: Vector = {}
        for face, c in v.items():
            lab = self.label(face)
            for i in range(len(face)):
                sub = face[:i] + face[i + 1:]
                if self.label(sub) == lab:
                    self.axpy(out, {sub: c}, 1 if i % 2 == 0 else -1)
        return out

    def product(self, a: Vector, b: Vector) -> Vector:
        out: Vector = {}
        for fa, ca in a.items():
            la = self.label(fa)
            for fb, cb in b.items():
                sign = merge_sign(fa, fb)
                if sign and is_unit(gcd_exps(la, self.label(fb))):
                    self.axpy(out, {merge(fa, fb): ca * cb}, sign)
        return out

    @staticmethod
    def bar_sign(degree: int) -> int:
        """ā = (−1)^(deg a + 1) a"""
        return 1 if degree % 2 else -1

    def dense(self, v: Vector, faces: Sequence[Face]) -> List:
        return [v.get(f, self.K.zero) for f in faces]

    def sparse(self, vec: Sequence, faces: Sequence[Face]) -> Vector:
        return {f: self.la.elem(c) for f, c in zip(faces, vec) if not self.K.is_zero(self.la.elem(c))}

    def text(self, x) -> str:
        return str(self.la.to_sympy(x))


# =============================================================================
# Homology basis
# =============================================================================

@dataclass
class StrandHomology:
    faces: List[Face]
    cycles: List[List]
    boundaries: List[List]
    representatives: List[List]
    class_ids: List[int] = field(default_factory=list)


@dataclass
class Cycle:
    key: Hashable
    label: Exps
    degree: int
    vector: Vector


class HomologyBasis:
    """Cycle representatives modulo boundaries, strand by strand."""

    def __init__(self, model: KoszulModel, threads: int = 1):
        self.model = model
        self._strands: Dict[Tuple[Exps, int], StrandHomology] = {}
        keys = [(lab, j) for lab, by_size in model.strands.items() for j in by_size]
        keys.sort(key=lambda k: (k[1], model.faces(*k)[0]))
        results = map_ordered(self._compute, keys, threads)
        self.classes: List[Cycle] = []
        for key, sh in zip(keys, results):
            self._strands[key] = sh
            for vec in sh.representatives:
                idx = len(self.classes)
                sh.class_ids.append(idx)
                self.classes.append(Cycle(key=idx, label=key[0], degree=key[1],
                                          vector=model.sparse(vec, sh.faces)))
        logger.info(f"homology basis: dims {self.dims()}")

    def _compute(self, key: Tuple[Exps, int]) -> StrandHomology:
        label, j = key
        la = self.model.la
        faces = self.model.faces(label, j)
        lo = self.model.faces(label, j - 1)
        hi = self.model.faces(label, j + 1)
        if lo:
            cycles = la.nullspace(strand_boundary(faces, lo), len(faces))
        else:
            cycles = [[la.K.one if i == k else la.K.zero for i in range(len(faces))] for k in range(len(faces))]
        boundaries: List[List] = []
        if hi:
            boundaries = la.independent_rows(la.transpose(strand_boundary(hi, faces), len(hi)))
        picks = la.extend_basis(boundaries, cycles)
        return StrandHomology(faces=faces, cycles=cycles, boundaries=boundaries,
                              representatives=[cycles[i] for i in picks])

    def strand(self, label: Exps, size: int) -> StrandHomology:
        sh = self._strands.get((label, size))
        if sh is None:
            sh = self._strands.setdefault((label, size), self._compute((label, size)))
        return sh

    def dims(self) -> List[int]:
        top = max((c.degree for c in self.classes), default=0)
        out = [0] * (top + 1)
        for c in self.classes:
            out[c.degree] += 1
        return out

    def positive_classes(self) -> List[int]:
        return [i for i, c in enumerate(self.classes) if c.degree > 0]

    def coordinates(self, label: Exps, size: int, v: Vector) -> Optional[List]:
        """Coordinates of [v] in the class basis of its strand, None if v is not a cycle there."""
        sh = self.strand(label, size)
        if not sh.faces:
            return [] if not v else None
        coords = self.model.la.span_coordinates(sh.representatives + sh.boundaries, self.model.dense(v, sh.faces))
        return None if coords is None else coords[:len(sh.representatives)]

    def export(self) -> List[HomologyClass]:
        ctx = self.model.ideal.ctx
        return [
            HomologyClass(
                index=i, multidegree=ctx.format(c.label), exponents=list(c.label), degree=c.degree,
                representative=[ChainTerm(face=list(f), coeff=self.model.text(x)) for f, x in sorted(c.vector.items())],
            )
            for i, c in enumerate(self.classes)
        ]


def homology_basis(ideal: MonomialIdeal, field: Optional[FieldConfig] = None, threads: int = 1) -> HomologyBasis:
    return HomologyBasis(KoszulModel(ideal, field), threads)


# =============================================================================
# Defining systems
# =============================================================================

@dataclass
class _Outcome:
    result: MasseyResult
    value: Optional[Vector] = None
    columns: Optional[List[Dict[Key, Any]]] = None


class MasseyCalculator:
    """
    Evaluates ⟨α_1, ..., α_n⟩ for cycles of T⊗k. Results are cached by the
    tuple of cycle keys; sub-products are evaluated through the same cache.
    """

    def __init__(self, basis: HomologyBasis, assume_unique: bool = False, seed: Optional[int] = None):
        self.basis = basis
        self.model = basis.model
        self.assume_unique = assume_unique
        self.rng = random.Random(seed) if seed is not None else None
        self.k_guard = get_guard_config().massey_k
        self._cache: Dict[Tuple[Hashable, ...], _Outcome] = {}

    # ------------------------------------------------------------------

    def _solve(self, columns: List[Dict[Key, Any]], rhs: Dict[Key, Any]) -> Optional[List]:
        la = self.model.la
        keys = sorted(set(rhs).union(*columns)) if columns else sorted(rhs)
        row = {k: i for i, k in enumerate(keys)}
        rows = [[0] * len(columns) for _ in keys]
        for c, col in enumerate(columns):
            for k, x in col.items():
                rows[row[k]][c] = x
        x = la.solve(rows, len(columns), [rhs.get(k, 0) for k in keys])
        if x is not None and self.rng is not None and keys and columns:
            for v in la.nullspace(rows, len(columns)):
                t = self.rng.randint(-2, 2)
                x = [a + t * b for a, b in zip(x, v)]
        return x

    def _trivial_strand(self, label: Exps, size: int) -> bool:
        return not self.basis.strand(label, size).representatives

    def _result(self, cycles: Sequence[Cycle], defined: Optional[bool], **extra) -> MasseyResult:
        label = tuple(map(sum, zip(*(c.label for c in cycles))))
        keys = [list(k) if isinstance(k, tuple) else [k] for k in (c.key for c in cycles)]
        return MasseyResult(
            classes=keys, n=len(cycles), defined=defined,
            multidegree=self.model.ideal.ctx.format(label),
            degree=sum(c.degree for c in cycles) + len(cycles) - 2, **extra,
        )

    def outcome(self, cycles: Sequence[Cycle]) -> _Outcome:
        key = tuple(c.key for c in cycles)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        return self._cache.setdefault(key, self._evaluate(list(cycles)))

    def product(self, indices: Sequence[int]) -> MasseyResult:
        return self.outcome([self.basis.classes[i] for i in indices]).result

    # ------------------------------------------------------------------

    def _evaluate(self, cycles: List[Cycle]) -> _Outcome:
        n = len(cycles)
        if n < 2:
            raise ValueError("Massey products need at least two classes")
        check_guard("massey_k", self.k_guard, n)
        model = self.model
        undecided = False
        if n >= 3:
            for sub in (cycles[:-1], cycles[1:]):
                r = self.outcome(sub).result
                if r.defined is False or r.contains_zero is False:
                    return _Outcome(self._result(cycles, False, note=f"sub-product {r.classes} is not trivial"))
                if r.defined is None or r.contains_zero is None:
                    undecided = True

        def span_label(i: int, j: int) -> Exps:
            return tuple(map(sum, zip(*(c.label for c in cycles[i:j]))))

        def span_degree(i: int, j: int) -> int:
            return sum(c.degree for c in cycles[i:j]) + (j - i - 1)

        value_label, value_degree = span_label(0, n), span_degree(0, n) - 1
        exact = n <= 3 or self.assume_unique
        if exact and not undecided and self._trivial_strand(value_label, value_degree):
            return _Outcome(self._result(cycles, True, contains_zero=True, representative=[], indeterminacy_dim=0))

        a: Dict[Tuple[int, int], Vector] = {(i, i + 1): dict(c.vector) for i, c in enumerate(cycles)}
        for level in range(2, n + 1):
            eqs = range(0, n - level + 1)
            rhs: Dict[Key, Any] = {}
            rhs_vectors: Dict[int, Vector] = {}
            for i in eqs:
                j = i + level
                acc: Vector = {}
                for k in range(i + 1, j):
                    model.axpy(acc, model.product(a[(i, k)], a[(k, j)]), model.bar_sign(span_degree(i, k)))
                rhs_vectors[i] = acc
                rhs.update({(i, f): x for f, x in acc.items()})

            columns: List[Dict[Key, Any]] = []
            unknowns: List[Tuple[str, Tuple[int, int], Any]] = []
            for i in eqs:
                j = i + level
                for face in model.faces(span_label(i, j), span_degree(i, j)):
                    img = model.d({face: model.K.one})
                    columns.append({(i, f): x for f, x in img.items()})
                    unknowns.append(("entry", (i, j), face))
            variation_start = len(columns)
            if level >= 3:
                for k in range(0, n - level + 2):
                    e = (k, k + level - 1)
                    sh = self.basis.strand(span_label(*e), span_degree(*e))
                    for z in sh.cycles:
                        zv = model.sparse(z, sh.faces)
                        col: Dict[Key, Any] = {}
                        if 0 <= k - 1 <= n - level:
                            left = a[(k - 1, k)]
                            prod = model.product(left, zv)
                            sign = -model.bar_sign(span_degree(k - 1, k))
                            col.update({(k - 1, f): sign * x for f, x in prod.items()})
                        if k <= n - level:
                            prod = model.product(zv, a[(k + level - 1, k + level)])
                            sign = -model.bar_sign(span_degree(*e))
                            for f, x in prod.items():
                                col[(k, f)] = col.get((k, f), model.K.zero) + sign * x
                        columns.append(col)
                        unknowns.append(("variation", e, zv))

            solution = self._solve(columns, rhs)
            if level == n:
                return self._finish(cycles, rhs_vectors[0], value_label, value_degree,
                                    columns, variation_start, solution, undecided)
            if solution is None:
                if n == 3:
                    raise InternalConsistencyError(f"no defining system for classes {[c.key for c in cycles]} "
                                                   "although both products vanish")
                logger.debug(f"level {level} unsolvable for {[c.key for c in cycles]}")
                return _Outcome(self._result(cycles, None, note=f"no defining system found at level {level}"))
            for i in eqs:
                a[(i, i + level)] = {}
            for (kind, e, payload), coef in zip(unknowns, solution):
                if model.K.is_zero(model.la.elem(coef)):
                    continue
                if kind == "entry":
                    model.axpy(a[e], {payload: model.la.elem(coef)})
                else:
                    model.axpy(a[e], payload, model.la.elem(coef))
        raise AssertionError("unreachable")

    def _finish(self, cycles, value: Vector, label: Exps, degree: int, columns, variation_start: int,
                solution, undecided: bool) -> _Outcome:
        n = len(cycles)
        coords = self.basis.coordinates(label, degree, value)
        if coords is None:
            raise InternalConsistencyError(f"Massey value of {[c.key for c in cycles]} is not a cycle")
        feasible = solution is not None
        exact = (n <= 3 or self.assume_unique) and not undecided
        indeterminacy: Optional[int] = None
        if n == 2:
            indeterminacy = 0
        elif n == 3:
            indeterminacy = self._indeterminacy(label, degree, columns[variation_start:])
        elif self.assume_unique:
            indeterminacy = 0
        if feasible:
            contains_zero: Optional[bool] = True
        else:
            contains_zero = False if exact else None
        result = self._result(
            cycles, True, contains_zero=contains_zero, indeterminacy_dim=indeterminacy,
            representative=[self.model.text(self.model.la.elem(x)) for x in coords],
        )
        return _Outcome(result, value=value, columns=columns)

    def _indeterminacy(self, label: Exps, degree: int, variations: List[Dict[Key, Any]]) -> int:
        sh = self.basis.strand(label, degree)
        if not sh.faces or not variations:
            return 0
        la = self.model.la
        vectors = [[col.get((0, f), la.K.zero) for f in sh.faces] for col in variations]
        base = la.rank(sh.boundaries, len(sh.faces)) if sh.boundaries else 0
        return la.rank(sh.boundaries + vectors, len(sh.faces)) - base

    def contains(self, outcome: _Outcome, target: Vector) -> Optional[bool]:
        """target ∈ ⟨α⟩: value − target is a boundary up to variations of the last level."""
        if outcome.columns is None:
            return None
        rhs = dict(outcome.value)
        self.model.axpy(rhs, target, -1)
        return self._solve(outcome.columns, {(0, f): x for f, x in rhs.items()}) is not None


def massey_product(basis: HomologyBasis, indices: Sequence[int], seed: Optional[int] = None) -> MasseyResult:
    """
    ⟨α_1, ..., α_n⟩ for basis classes of H(T⊗k).

    Args:
        basis: homology basis of the Koszul model
        indices: class indices into basis.classes, n ≥ 2
        seed: randomizes the particular solution picked at each level; the
            verdict does not depend on it

    Returns:
        MasseyResult: defined / contains_zero (None when undecided), one value and
        the indeterminacy dimension
    """
    return MasseyCalculator(basis, seed=seed).product(indices)


# =============================================================================
# (B_r) and the μ cross-check
# =============================================================================

def br_condition(ideal: MonomialIdeal, r_max: int, field: Optional[FieldConfig] = None,
                 basis: Optional[HomologyBasis] = None) -> BrReport:
    """All k-ary Massey products of positive-degree classes, k ≤ r_max, defined and equal to {0}."""
    guards = get_guard_config()
    basis = basis or homology_basis(ideal, field)
    positive = basis.positive_classes()
    check_guard("tor_dim", guards.tor_dim, len(positive))
    check_guard("massey_k", guards.massey_k, r_max)
    # the checks run by increasing arity, so (B_{k-1}) holds whenever arity k is reached
    calc = MasseyCalculator(basis, assume_unique=True)
    checked = 0
    for k in range(2, r_max + 1):
        for combo in tuples(positive, repeat=k):
            checked += 1
            res = calc.product(combo)
            if not res.only_zero:
                logger.info(f"(B_{r_max}) fails at arity {k}: classes {list(combo)}")
                return BrReport(r_max=r_max, holds=False, tuples_checked=checked, failed_arity=k, failure=res)
    return BrReport(r_max=r_max, holds=True, tuples_checked=checked)


def cross_check_mu(D: TransferDiagram, field: Optional[FieldConfig] = None, n_max: int = 3,
                   basis: Optional[HomologyBasis] = None, seed: Optional[int] = None) -> CrossCheckReport:
    """
    For F-faces J_1..J_n the classes [u_J] form a basis of H(T⊗k). Checks that
    ±(μ_n ⊗ 1)(u_J1, ..., u_Jn) lies in ⟨[u_J1], ..., [u_Jn]⟩ whenever the latter is defined.
    """
    if not is_minimal(D.F).verdict:
        raise NotRootedPresentationError("cross-check needs a minimal rooted resolution")
    basis = basis or homology_basis(D.ideal, field)
    model = basis.model
    calc = MasseyCalculator(basis, seed=seed)
    checked = defined = 0
    for n in range(2, n_max + 1):
        for args in basis_tensors(D.basis(), n, D.top_degree + 2 - n):
            checked += 1
            cycles = [Cycle(key=a, label=D.label(a), degree=len(a), vector={a: model.K.one}) for a in args]
            out = calc.outcome(cycles)
            if out.result.defined is not True:
                continue
            defined += 1
            mu = {f: model.la.elem(c) for f, c in D.mu_n(args).mod_variables().items()}
            if out.columns is None:
                ok = not mu and out.result.contains_zero is True
            else:
                ok = bool(calc.contains(out, mu)) or bool(calc.contains(out, {f: -c for f, c in mu.items()}))
            if not ok:
                logger.warning(f"μ_{n}{[list(a) for a in args]} ⊗ 1 is outside its Massey coset")
                return CrossCheckReport(n_max=n_max, tuples_checked=checked, defined_tuples=defined,
                                        passed=False, failure=out.result)
    return CrossCheckReport(n_max=n_max, tuples_checked=checked, defined_tuples=defined, passed=True)
