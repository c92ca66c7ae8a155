# core/tools/ainfty.py
"""
Transfer diagram from the Taylor resolution T onto a rooted resolution F,
and the A-infinity structure it induces on F.

    p′(u_J)  = Σ_σ sgn(σ) π(u_{σI_1}) ∧ ... ∧ π(u_{σI_k})
    φ′(u_J)  = π(u_J) ∧ (u_J − φ′(∂u_J)),     φ′ = 0 in degrees 0 and 1
    p(u_J)   = m_J [p′(u_J)],   φ(u_J) = m_J [φ′(u_J)],   [u_K] = u_K / m_K

The pair (p, φ) satisfies p∘i = 1_F and 1 − i∘p = dφ + φd. With this φ the
operations

    λ_2 = Taylor product
    λ_n = Σ_{s+t=n} (−1)^{s+1} λ_2(φλ_s ⊗ φλ_t),   φλ_1 = −id
    μ_n = p ∘ λ_n ∘ i^{⊗n},  μ_1 = d

satisfy Σ (−1)^{r+st} μ_u(1^r ⊗ μ_s ⊗ 1^t) = 0, Koszul signs included.
"""

import logging
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from core.models.ainfty import (
    IdentityFailure,
    LemmaReport,
    MuRecord,
    SideConditionReport,
    StasheffReport,
    TransferReport,
    UnitalityReport,
)
from core.models.element import TaylorElement
from core.models.monomial import Exps, Face, LcmLattice, MonomialIdeal
from core.models.resolution import FreeComplex
from core.models.rooting import RootingMap, TotalOrder
from core.tools.config import get_guard_config
from core.tools.errors import InternalConsistencyError, check_guard
from core.tools.monomial_core import build_lcm_lattice, gcd_exps, is_unit
from core.tools.resolution import (
    merge_sign,
    simplicial_boundary,
    taylor_differential,
    taylor_product,
)
from core.tools.rooting import lyubeznik_rooting, rooted_resolution
from core.tools.simplicial import full_simplex

logger = logging.getLogger(__name__)

Tensor = Tuple[Face, ...]


def _wedge_left(g: int, u: TaylorElement) -> TaylorElement:
    """u_g ∧ u."""
    out = TaylorElement()
    for coeff, face, c in u:
        if g in face:
            continue
        below = sum(1 for x in face if x < g)
        out.add_term(coeff, tuple(sorted(face + (g,))), -c if below % 2 else c)
    return out


class TransferDiagram:
    """
    (F, T, i, p, φ) for a valid rooting map. Caches are write-once maps, so
    concurrent readers may populate them without coordination.
    """

    def __init__(self, ideal: MonomialIdeal, pi: RootingMap, resolution: Optional[FreeComplex] = None,
                 lattice: Optional[LcmLattice] = None, psi1_sign: int = -1, perm_guard: Optional[int] = None):
        self.ideal = ideal
        self.m = ideal.m
        self.pi = pi
        self.lattice = lattice or build_lcm_lattice(ideal)
        self.F = resolution or rooted_resolution(ideal, pi, self.lattice)
        self.psi1_sign = psi1_sign
        self.perm_guard = perm_guard if perm_guard is not None else get_guard_config().perms
        self.zero = (0,) * self.m
        self._labels: Dict[Face, Exps] = {}
        self._roots: Dict[Face, int] = {}
        self._p_prime: Dict[Face, TaylorElement] = {}
        self._phi_prime: Dict[Face, TaylorElement] = {}
        self._p: Dict[Face, TaylorElement] = {}
        self._phi: Dict[Face, TaylorElement] = {}
        self._lambda: Dict[Tensor, TaylorElement] = {}
        self._phi_lambda: Dict[Tensor, TaylorElement] = {}
        self._mu: Dict[Tensor, TaylorElement] = {}
        self.f_faces = set(self.F.faces)

    # ------------------------------------------------------------------
    # labels and roots
    # ------------------------------------------------------------------

    def label(self, face: Face) -> Exps:
        lab = self._labels.get(face)
        if lab is None:
            lab = self._labels.setdefault(face, self.ideal.label(face))
        return lab

    def root(self, face: Face) -> int:
        """π(u_J): the generator index π assigns to m_J."""
        g = self._roots.get(face)
        if g is None:
            g = self._roots.setdefault(face, self.pi.assignment[self.label(face)])
        return g

    @property
    def top_degree(self) -> int:
        return self.F.top_degree

    def basis(self, positive: bool = True) -> List[Face]:
        return [f for f in self.F.faces if f or not positive]

    # ------------------------------------------------------------------
    # bracket and scaling
    # ------------------------------------------------------------------

    def bracket(self, u: TaylorElement) -> TaylorElement:
        """[α u_K] = (α / m_K) u_K."""
        out = TaylorElement()
        for coeff, face, c in u:
            lab = self.label(face)
            out.add_term(tuple(a - b for a, b in zip(coeff, lab)), face, c)
        return out

    def _rescale(self, face: Face, u: TaylorElement, what: str) -> TaylorElement:
        out = self.bracket(u).shifted(self.label(face))
        if not out.is_effective():
            raise InternalConsistencyError(f"{what}(u_{list(face)}) has a negative exponent: {out!r}")
        return out

    # ------------------------------------------------------------------
    # p′ and φ′ (coefficient-free)
    # ------------------------------------------------------------------

    def p_prime(self, face: Face) -> TaylorElement:
        cached = self._p_prime.get(face)
        if cached is not None:
            return cached
        check_guard("perms", self.perm_guard, len(face))
        out = TaylorElement()

        def walk(chosen: Face, remaining: Tuple[int, ...], parity: int, wedge: Face, sign: int):
            if not remaining:
                out.add_term(self.zero, wedge, -sign if parity else sign)
                return
            for idx, x in enumerate(remaining):
                grown = tuple(sorted(chosen + (x,)))
                g = self.root(grown)
                if g in wedge:
                    continue
                above = sum(1 for w in wedge if w > g)
                walk(grown, remaining[:idx] + remaining[idx + 1:], (parity + idx) % 2,
                     tuple(sorted(wedge + (g,))), -sign if above % 2 else sign)

        walk((), tuple(face), 0, (), 1)
        for f in out.faces():
            if f not in self.f_faces:
                raise InternalConsistencyError(f"p′(u_{list(face)}) leaves F at face {list(f)}")
        return self._p_prime.setdefault(face, out)

    def p_prime_map(self, u: TaylorElement) -> TaylorElement:
        out = TaylorElement()
        for coeff, face, c in u:
            out.iadd(self.p_prime(face).shifted(coeff), c)
        return out

    def phi_prime(self, face: Face) -> TaylorElement:
        cached = self._phi_prime.get(face)
        if cached is not None:
            return cached
        if len(face) <= 1:
            return self._phi_prime.setdefault(face, TaylorElement())
        check_guard("perms", self.perm_guard, len(face))
        inner = TaylorElement.basis(face, self.m)
        for i in range(len(face)):
            sub = face[:i] + face[i + 1:]
            inner.iadd(self.phi_prime(sub), -1 if i % 2 == 0 else 1)
        return self._phi_prime.setdefault(face, _wedge_left(self.root(face), inner))

    # ------------------------------------------------------------------
    # p and φ over S
    # ------------------------------------------------------------------

    def p_basis(self, face: Face) -> TaylorElement:
        cached = self._p.get(face)
        if cached is None:
            cached = self._p.setdefault(face, self._rescale(face, self.p_prime(face), "p"))
        return cached

    def phi_basis(self, face: Face) -> TaylorElement:
        cached = self._phi.get(face)
        if cached is None:
            cached = self._phi.setdefault(face, self._rescale(face, self.phi_prime(face), "φ"))
        return cached

    def p_map(self, u: TaylorElement) -> TaylorElement:
        out = TaylorElement()
        for coeff, face, c in u:
            out.iadd(self.p_basis(face).shifted(coeff), c)
        return out

    def phi_map(self, u: TaylorElement) -> TaylorElement:
        out = TaylorElement()
        for coeff, face, c in u:
            out.iadd(self.phi_basis(face).shifted(coeff), c)
        return out

    def d(self, u: TaylorElement) -> TaylorElement:
        return taylor_differential(self.ideal, u)

    def product(self, a: TaylorElement, b: TaylorElement) -> TaylorElement:
        return taylor_product(self.ideal, a, b)

    # ------------------------------------------------------------------
    # Merkulov operations
    # ------------------------------------------------------------------

    def _psi(self, args: Tensor) -> TaylorElement:
        """φλ_k on a basis tensor, with φλ_1 = psi1_sign · id."""
        if len(args) == 1:
            return TaylorElement.basis(args[0], self.m, self.psi1_sign)
        cached = self._phi_lambda.get(args)
        if cached is None:
            cached = self._phi_lambda.setdefault(args, self.phi_map(self.lambda_n(args)))
        return cached

    def lambda_n(self, args: Sequence[Face]) -> TaylorElement:
        args = tuple(tuple(a) for a in args)
        n = len(args)
        if n < 2:
            raise ValueError("λ_n needs n ≥ 2")
        cached = self._lambda.get(args)
        if cached is not None:
            return cached
        total = sum(len(a) for a in args)
        if total + n - 2 > self.ideal.r:
            return self._lambda.setdefault(args, TaylorElement())
        if n == 2:
            out = self.product(TaylorElement.basis(args[0], self.m), TaylorElement.basis(args[1], self.m))
            return self._lambda.setdefault(args, out)
        out = TaylorElement()
        left_degree = 0
        for s in range(1, n):
            t = n - s
            left_degree += len(args[s - 1])
            left = self._psi(args[:s])
            if not left:
                continue
            right = self._psi(args[s:])
            if not right:
                continue
            sign = (-1 if s % 2 == 0 else 1) * (-1 if ((t - 1) * left_degree) % 2 else 1)
            out.iadd(self.product(left, right), sign)
        return self._lambda.setdefault(args, out)

    def mu_n(self, args: Sequence[Face]) -> TaylorElement:
        """μ_n on basis elements of F (μ_1 = d)."""
        args = tuple(tuple(a) for a in args)
        if len(args) == 1:
            return self.d(TaylorElement.basis(args[0], self.m))
        cached = self._mu.get(args)
        if cached is not None:
            return cached
        total = sum(len(a) for a in args)
        if total + len(args) - 2 > self.top_degree:
            return self._mu.setdefault(args, TaylorElement())
        value = self.p_map(self.lambda_n(args))
        return self._mu.setdefault(args, value)

    def mu_on(self, args: Sequence[TaylorElement]) -> TaylorElement:
        """Multilinear extension of μ_n over S to elements of F."""
        out = TaylorElement()

        def expand(pos: int, faces: Tuple[Face, ...], coeff: Exps, scalar: int):
            if pos == len(args):
                out.iadd(self.mu_n(faces).shifted(coeff), scalar)
                return
            for c2, face, s in args[pos]:
                expand(pos + 1, faces + (face,), tuple(a + b for a, b in zip(coeff, c2)), scalar * s)

        expand(0, (), self.zero, 1)
        return out

    def arity_bound(self) -> int:
        """Largest n for which μ_n can be non-zero on positive-degree inputs (2n - 2 ≤ top degree)."""
        return max(2, self.top_degree // 2 + 1)


def transfer_diagram(ideal: MonomialIdeal, order: Optional[TotalOrder] = None,
                     pi: Optional[RootingMap] = None, psi1_sign: int = -1) -> TransferDiagram:
    lattice = build_lcm_lattice(ideal)
    if pi is None:
        pi = lyubeznik_rooting(ideal, order or TotalOrder.identity(ideal.r), lattice)
    return TransferDiagram(ideal, pi, lattice=lattice, psi1_sign=psi1_sign)


# =============================================================================
# Identity checks
# =============================================================================

def _fail(ctx, name: str, args: Sequence[Face], residue: TaylorElement) -> IdentityFailure:
    return IdentityFailure(identity=name, args=[list(a) for a in args], residue=residue.to_text(ctx))


def verify_transfer_identities(D: TransferDiagram, max_failures: int = 5) -> TransferReport:
    """
    On every Taylor basis face: p i = 1_F, 1 − ip = dφ + φd, dp = pd,
    ∂p′ = p′∂ and π(u) ∧ p′(∂u) = p′(u).
    """
    ctx = D.ideal.ctx
    names = ["p∘i = id", "1 - i∘p = dφ + φd", "d∘p = p∘d", "∂p′ = p′∂", "π(u)·p′(∂u) = p′(u)"]
    failures: List[IdentityFailure] = []
    faces = full_simplex(D.ideal).faces
    for face in faces:
        u = TaylorElement.basis(face, D.m)
        checks = []
        if face in D.f_faces:
            checks.append((names[0], D.p_map(u) - u))
        lhs = u - D.p_map(u)
        rhs = D.d(D.phi_map(u)) + D.phi_map(D.d(u))
        checks.append((names[1], lhs - rhs))
        checks.append((names[2], D.d(D.p_map(u)) - D.p_map(D.d(u))))
        checks.append((names[3], simplicial_boundary(D.p_prime(face)) - D.p_prime_map(simplicial_boundary(u))))
        if face:
            g = D.root(face)
            checks.append((names[4], _wedge_left(g, D.p_prime_map(simplicial_boundary(u))) - D.p_prime(face)))
        for name, residue in checks:
            if residue:
                failures.append(_fail(ctx, name, [face], residue))
        if len(failures) >= max_failures:
            break
    report = TransferReport(faces_checked=len(faces), identities=names, passed=not failures, failures=failures)
    logger.info(f"transfer identities on {len(faces)} faces: {'pass' if report.passed else 'FAIL'}")
    return report


def side_conditions(D: TransferDiagram) -> SideConditionReport:
    ctx = D.ideal.ctx
    flags = {"φφ": True, "pφ": True, "φi": True}
    witnesses: List[IdentityFailure] = []
    for face in full_simplex(D.ideal).faces:
        phi_u = D.phi_basis(face)
        for name, value, applies in (
            ("φφ", D.phi_map(phi_u), True),
            ("pφ", D.p_map(phi_u), True),
            ("φi", phi_u, face in D.f_faces),
        ):
            if applies and flags[name] and value:
                flags[name] = False
                witnesses.append(_fail(ctx, f"{name} = 0", [face], value))
    return SideConditionReport(
        phi_squared_zero=flags["φφ"], p_phi_zero=flags["pφ"], phi_i_zero=flags["φi"], witnesses=witnesses,
    )


def basis_tensors(faces: Sequence[Face], n: int, max_total: int) -> Iterator[Tensor]:
    """n-tuples of basis faces with Σ|a_i| ≤ max_total, in lexicographic basis order."""

    def walk(prefix: Tensor, budget: int):
        if len(prefix) == n:
            yield prefix
            return
        slots_left = n - len(prefix) - 1
        for f in faces:
            if len(f) + slots_left * min((len(g) for g in faces), default=0) > budget:
                continue
            yield from walk(prefix + (f,), budget - len(f))

    yield from walk((), max_total)


def stasheff_residue(D: TransferDiagram, args: Tensor) -> TaylorElement:
    """Σ_{r+s+t=n} (−1)^{r+st} μ_u(1^r ⊗ μ_s ⊗ 1^t)(args), Koszul signs included."""
    n = len(args)
    out = TaylorElement()
    prefix_degree = [0]
    for a in args:
        prefix_degree.append(prefix_degree[-1] + len(a))
    for s in range(1, n + 1):
        for r in range(0, n - s + 1):
            t = n - r - s
            sign = (-1) ** ((r + s * t) + s * prefix_degree[r])
            inner = D.mu_n(args[r:r + s])
            if not inner:
                continue
            if r == 0 and t == 0:
                out.iadd(D.d(inner), sign)
                continue
            pieces = [TaylorElement.basis(a, D.m) for a in args[:r]] + [inner] + \
                     [TaylorElement.basis(a, D.m) for a in args[r + s:]]
            out.iadd(D.mu_on(pieces), sign)
    return out


def verify_stasheff(D: TransferDiagram, n_max: Optional[int] = None, include_unit: bool = False) -> StasheffReport:
    top = D.top_degree
    if n_max is None:
        n_max = max(2, (top + 3) // 2)
    check_guard("max_n", get_guard_config().max_n, n_max)
    faces = D.basis(positive=not include_unit)
    checked = 0
    convention = "minus-identity" if D.psi1_sign < 0 else "plus-identity"
    for n in range(2, n_max + 1):
        # every term has degree Σ|a| + n − 3, so larger tensors vanish identically
        for args in basis_tensors(faces, n, top + 3 - n):
            checked += 1
            residue = stasheff_residue(D, args)
            if residue:
                failure = _fail(D.ideal.ctx, f"stasheff n={n}", args, residue)
                logger.warning(f"Stasheff identity fails at n={n} on {failure.args}")
                return StasheffReport(n_max=n_max, tensors_checked=checked, passed=False,
                                      convention=convention, failure=failure)
    logger.info(f"Stasheff identities hold up to n={n_max} ({checked} tensors)")
    return StasheffReport(n_max=n_max, tensors_checked=checked, passed=True, convention=convention)


def unitality(D: TransferDiagram, n_max: Optional[int] = None) -> UnitalityReport:
    """Whether u_∅ is a strict unit: μ_2(1, a) = a = μ_2(a, 1) and μ_n(..., 1, ...) = 0 for n ≥ 3."""
    ctx = D.ideal.ctx
    n_max = n_max or max(3, D.arity_bound())
    unit = ()
    for a in D.basis(positive=False):
        ua = TaylorElement.basis(a, D.m)
        for args in ((unit, a), (a, unit)):
            residue = D.mu_n(args) - ua
            if residue:
                return UnitalityReport(unit_for_mu2=False, higher_vanish_on_unit=False, n_max=n_max,
                                       witness=_fail(ctx, "μ2 unit", args, residue))
    faces = D.basis(positive=False)
    for n in range(3, n_max + 1):
        for args in basis_tensors(faces, n, D.top_degree + 2 - n):
            if unit not in args:
                continue
            value = D.mu_n(args)
            if value:
                return UnitalityReport(unit_for_mu2=True, higher_vanish_on_unit=False, n_max=n_max,
                                       witness=_fail(ctx, f"μ{n} on unit", args, value))
    return UnitalityReport(unit_for_mu2=True, higher_vanish_on_unit=True, n_max=n_max)



def check_plambda2_lemma(D: TransferDiagram) -> LemmaReport:
    """p(λ₂(u_I, u_J)) ∈ (x)F for all Taylor faces with gcd(m_I, m_J) ≠ 1."""
    faces = [f for f in full_simplex(D.ideal).faces if f]
    checked = 0
    for a in faces:
        for b in faces:
            if not merge_sign(a, b) or is_unit(gcd_exps(D.label(a), D.label(b))):
                continue
            checked += 1
            value = D.p_map(D.lambda_n((a, b)))
            if value.unit_terms():
                return LemmaReport(holds=False, pairs_checked=checked,
                                   witness=_fail(D.ideal.ctx, "pλ2 minimal", (a, b), value))
    return LemmaReport(holds=True, pairs_checked=checked)


def mu_table(D: TransferDiagram, n_max: Optional[int] = None) -> List[MuRecord]:
    """All non-zero μ_n on positive-degree basis tensors, 2 ≤ n ≤ n_max."""
    n_max = n_max or D.arity_bound()
    records = []
    for n in range(2, n_max + 1):
        for args in basis_tensors(D.basis(), n, D.top_degree + 2 - n):
            value = D.mu_n(args)
            if value:
                records.append(MuRecord(n=n, args=[list(a) for a in args], value=value.to_records(D.ideal.ctx)))
    return records
