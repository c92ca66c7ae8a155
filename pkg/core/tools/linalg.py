# core/tools/linalg.py
"""
Exact linear algebra over QQ or GF(p), backed by sympy's DomainMatrix.

Matrices are passed as dense row lists of Python ints (or domain elements);
vectors come back as lists of domain elements.
"""

import logging
from typing import List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from core.models.complex import FieldConfig

logger = logging.getLogger(__name__)


class FieldLinalg:
    """Row reduction helpers bound to one coefficient field."""

    def __init__(self, field: Optional[FieldConfig] = None):
        self.field = field or FieldConfig()
        self.K = self.field.domain()

    # ------------------------------------------------------------------
    # conversions
    # ------------------------------------------------------------------

    def elem(self, x):
        return self.K.convert(x)

    def to_sympy(self, x):
        return self.K.to_sympy(x)

    def is_zero_vector(self, v: Sequence) -> bool:
        return all(self.K.is_zero(self.elem(x)) for x in v)

    def _matrix(self, rows: Sequence[Sequence], ncols: int) -> DomainMatrix:
        data = [[self.elem(x) for x in row] for row in rows]
        return DomainMatrix(data, (len(data), ncols), self.K)

    def _rref(self, rows: Sequence[Sequence], ncols: int) -> Tuple[List[List], Tuple[int, ...]]:
        if not rows or ncols == 0:
            return [list(map(self.elem, r)) for r in rows], ()
        reduced, pivots = self._matrix(rows, ncols).rref()
        return reduced.to_list(), tuple(pivots)

    # ------------------------------------------------------------------
    # queries
    # ------------------------------------------------------------------

    def rank(self, rows: Sequence[Sequence], ncols: int) -> int:
        if not rows or ncols == 0:
            return 0
        _, pivots = self._rref(rows, ncols)
        return len(pivots)

    def nullspace(self, rows: Sequence[Sequence], ncols: int) -> List[List]:
        """Basis of {x : A x = 0}, one vector per free column."""
        zero, one = self.K.zero, self.K.one
        if not rows:
            return [[one if i == j else zero for i in range(ncols)] for j in range(ncols)]
        reduced, pivots = self._rref(rows, ncols)
        pivot_set = set(pivots)
        basis = []
        for free in range(ncols):
            if free in pivot_set:
                continue
            v = [zero] * ncols
            v[free] = one
            for row_idx, col in enumerate(pivots):
                v[col] = -reduced[row_idx][free]
            basis.append(v)
        return basis

    def solve(self, rows: Sequence[Sequence], ncols: int, rhs: Sequence) -> Optional[List]:
        """One solution of A x = b, or None when the system is inconsistent."""
        zero = self.K.zero
        b = [self.elem(x) for x in rhs]
        if not rows:
            return [zero] * ncols if all(self.K.is_zero(x) for x in b) else None
        augmented = [list(row) + [b[i]] for i, row in enumerate(rows)]
        reduced, pivots = self._rref(augmented, ncols + 1)
        if ncols in pivots:
            return None
        x = [zero] * ncols
        for row_idx, col in enumerate(pivots):
            x[col] = reduced[row_idx][ncols]
        return x

    def transpose(self, rows: Sequence[Sequence], ncols: int) -> List[List]:
        return [[rows[i][j] for i in range(len(rows))] for j in range(ncols)]

    def span_coordinates(self, basis: Sequence[Sequence], target: Sequence) -> Optional[List]:
        """Coefficients c with sum c_k basis_k = target, or None if target is outside the span."""
        n = len(target)
        if not basis:
            return [] if self.is_zero_vector(target) else None
        return self.solve(self.transpose(basis, n), len(basis), target)

    def in_span(self, basis: Sequence[Sequence], target: Sequence) -> bool:
        return self.span_coordinates(basis, target) is not None

    def extend_basis(self, base: Sequence[Sequence], candidates: Sequence[Sequence]) -> List[int]:
        """Indices of candidates that extend span(base) independently, chosen greedily in order."""
        chosen: List[int] = []
        current = [list(v) for v in base]
        if not candidates:
            return chosen
        n = len(candidates[0])
        rank = self.rank(current, n) if current else 0
        for idx, v in enumerate(candidates):
            trial = current + [list(v)]
            new_rank = self.rank(trial, n)
            if new_rank > rank:
                chosen.append(idx)
                current = trial
                rank = new_rank
        return chosen

    def independent_rows(self, vectors: Sequence[Sequence]) -> List[List]:
        """A basis of span(vectors) taken from the nonzero rows of the reduced form."""
        if not vectors:
            return []
        n = len(vectors[0])
        reduced, pivots = self._rref(vectors, n)
        return [reduced[i] for i in range(len(pivots))]
