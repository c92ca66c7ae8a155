# core/tools/rooting.py
"""
Rooting maps: validation against both axioms, the Lyubeznik rooting of a
total order, the rooted complex RC(L, π) and a search over orders for one
whose rooted resolution is minimal.
"""

import logging
from typing import Any, Dict, Iterator, List, Literal, Optional, Sequence, Set, Tuple

from pydantic import ValidationError

from core.models.complex import LabeledComplex, face_key
from core.models.monomial import Exps, Face, LcmLattice, MonomialIdeal
from core.models.resolution import FreeComplex
from core.models.rooting import RootedCertificate, RootingMap, RootingValidation, RootingViolation, TotalOrder
from core.tools.config import get_guard_config
from core.tools.errors import InputError, check_guard
from core.tools.monomial_core import build_lcm_lattice, divides_exps, parse_monomial
from core.tools.resolution import build_chain_complex

logger = logging.getLogger(__name__)


# =============================================================================
# Rooting maps
# =============================================================================

def lyubeznik_rooting(ideal: MonomialIdeal, order: TotalOrder, lattice: Optional[LcmLattice] = None) -> RootingMap:
    """π(m) = the ≺-least generator dividing m."""
    if len(order.sequence) != ideal.r:
        raise InputError(f"order has {len(order.sequence)} entries, ideal has {ideal.r} generators")
    lattice = lattice or build_lcm_lattice(ideal)
    rank = order.rank()
    assignment = {
        e: min(lattice.generator_tags(e), key=rank.__getitem__)
        for e in lattice.proper_elements()
    }
    return RootingMap(assignment=assignment, source="lyubeznik", order=list(order.sequence))


def validate_rooting_map(pi: RootingMap, lattice: LcmLattice, ideal: MonomialIdeal) -> RootingValidation:
    fmt = ideal.ctx.format
    elements = lattice.proper_elements()
    for e in elements:
        g = pi.assignment.get(e)
        if g is None:
            return RootingValidation(valid=False, violation=RootingViolation(
                axiom=0, element=fmt(e), detail="π undefined on this lattice element"))
        if g < 1 or g > ideal.r or not divides_exps(ideal.gen(g), e):
            return RootingValidation(valid=False, violation=RootingViolation(
                axiom=1, element=fmt(e), detail=f"generator {g} does not divide the element"))
    for m in elements:
        root = ideal.gen(pi.assignment[m])
        for n in elements:
            if n != m and divides_exps(root, n) and divides_exps(n, m) and pi.assignment[n] != pi.assignment[m]:
                return RootingValidation(valid=False, violation=RootingViolation(
                    axiom=2, element=fmt(m), other=fmt(n),
                    detail=f"π({fmt(m)}) = {pi.assignment[m]} divides {fmt(n)} but π({fmt(n)}) = {pi.assignment[n]}"))
    return RootingValidation(valid=True)


def rooting_from_dict(data: Dict[str, Any], ideal: MonomialIdeal) -> RootingMap:
    """User π: {"x*y*z": 1, ...}; keys are lattice elements in monomial notation."""
    if not isinstance(data, dict):
        raise InputError("rooting map must be an object mapping multidegrees to generator indices")
    assignment = {}
    for key, value in data.items():
        assignment[parse_monomial(key, ideal.ctx).exponents] = int(value)
    return RootingMap(assignment=assignment, source="user")


def rooting_to_dict(pi: RootingMap, ideal: MonomialIdeal) -> Dict[str, int]:
    items = sorted(pi.assignment.items(), key=lambda kv: (sum(kv[0]), kv[0]))
    return {ideal.ctx.format(e): g for e, g in items}


# =============================================================================
# Rooted complex
# =============================================================================

def _rooted_faces(ideal: MonomialIdeal, root: Dict[Exps, int]) -> Tuple[List[Face], List[Exps]]:
    m = ideal.m
    faces: List[Face] = [()]
    labels: List[Exps] = [(0,) * m]
    present: Set[Face] = {()}
    level: List[Tuple[Face, Exps]] = [((), (0,) * m)]
    while level:
        nxt = []
        for face, lab in level:
            start = face[-1] + 1 if face else 1
            for v in range(start, ideal.r + 1):
                cand = face + (v,)
                if any(cand[:i] + cand[i + 1:] not in present for i in range(len(cand) - 1)):
                    continue
                g = ideal.gen(v)
                clab = tuple(a if a >= b else b for a, b in zip(lab, g))
                if root[clab] not in cand:
                    continue
                nxt.append((cand, clab))
        for cand, clab in nxt:
            present.add(cand)
            faces.append(cand)
            labels.append(clab)
        level = nxt
    return faces, labels


def rooted_complex(ideal: MonomialIdeal, pi: RootingMap, lattice: Optional[LcmLattice] = None,
                   validate: bool = True) -> LabeledComplex:
    """RC(L, π): faces all of whose non-empty subsets contain the π-image of their lcm."""
    if validate:
        lattice = lattice or build_lcm_lattice(ideal)
        check = validate_rooting_map(pi, lattice, ideal)
        if not check.valid:
            v = check.violation
            raise InputError(f"invalid rooting map (axiom {v.axiom}) at {v.element}: {v.detail}")
    faces, labels = _rooted_faces(ideal, pi.assignment)
    return LabeledComplex(r=ideal.r, faces=faces, labels=labels)


def rooted_resolution(ideal: MonomialIdeal, pi: RootingMap, lattice: Optional[LcmLattice] = None) -> FreeComplex:
    cx = rooted_complex(ideal, pi, lattice)
    kind = "lyubeznik" if pi.source == "lyubeznik" else "rooted"
    return build_chain_complex(cx, ideal, kind=kind, order=pi.order)


def lyubeznik_resolution(ideal: MonomialIdeal, order: Optional[TotalOrder] = None) -> FreeComplex:
    order = order or TotalOrder.identity(ideal.r)
    lattice = build_lcm_lattice(ideal)
    return rooted_resolution(ideal, lyubeznik_rooting(ideal, order, lattice), lattice)


def _minimal_faces(faces: Sequence[Face], labels: Sequence[Exps]) -> bool:
    lab = dict(zip(faces, labels))
    for face, l in lab.items():
        for i in range(len(face)):
            if lab[face[:i] + face[i + 1:]] == l:
                return False
    return True


# =============================================================================
# Order search
# =============================================================================

def _distinct_orders(lattice: LcmLattice, r: int) -> Iterator[List[int]]:
    """
    Orders up to equivalence of their Lyubeznik rooting. A generator that would
    decide no undecided lattice element is pushed to the end: its position
    cannot change π.
    """
    elements = lattice.proper_elements()
    tags = [lattice.generator_tags(e) for e in elements]

    def walk(prefix: List[int], undecided: Set[int], remaining: List[int]):
        alive = [g for g in remaining if any(g in tags[k] for k in undecided)]
        if not alive:
            yield prefix + remaining
            return
        for g in alive:
            decided = {k for k in undecided if g in tags[k]}
            yield from walk(prefix + [g], undecided - decided, [x for x in remaining if x != g])

    yield from walk([], set(range(len(elements))), list(range(1, r + 1)))


def certify_rooted_ring(
    ideal: MonomialIdeal,
    strategy: Literal["exhaustive-orders", "user-supplied"] = "exhaustive-orders",
    pi: Optional[RootingMap] = None,
    guard: Optional[int] = None,
) -> RootedCertificate:
    """
    Look for a rooting whose rooted complex supports the minimal resolution.

    Args:
        ideal: minimally generated monomial ideal
        strategy: "exhaustive-orders" walks the Lyubeznik orders that give distinct
            rootings; "user-supplied" only tests `pi`
        pi: rooting map for the user-supplied strategy
        guard: largest r for the exhaustive search, the orders guard when omitted

    Returns:
        RootedCertificate: rooted is True with the order and faces found, False when
        no Lyubeznik order works, None when a user map is not minimal

    Raises:
        GuardExceededError: r is above the search guard
        InputError: user-supplied strategy without a map, or an invalid map
    """
    lattice = build_lcm_lattice(ideal)
    if strategy == "user-supplied":
        if pi is None:
            raise InputError("user-supplied strategy needs a rooting map")
        cx = rooted_complex(ideal, pi, lattice)
        if _minimal_faces(cx.faces, cx.labels):
            return RootedCertificate(
                rooted=True, lyubeznik=pi.source == "lyubeznik", order=pi.order,
                rooted_faces=[list(f) for f in cx.faces if f], orders_examined=1, strategy=strategy,
            )
        return RootedCertificate(
            rooted=None, lyubeznik=False, orders_examined=1, strategy=strategy,
            note="the supplied rooting map gives a non-minimal resolution",
        )

    limit = guard if guard is not None else get_guard_config().orders
    check_guard("orders", limit, ideal.r)
    seen: Set[Tuple[int, ...]] = set()
    examined = 0
    for seq in _distinct_orders(lattice, ideal.r):
        order = TotalOrder(sequence=seq)
        cand = lyubeznik_rooting(ideal, order, lattice)
        fingerprint = tuple(cand.assignment[e] for e in lattice.proper_elements())
        if fingerprint in seen:
            continue
        seen.add(fingerprint)
        examined += 1
        faces, labels = _rooted_faces(ideal, cand.assignment)
        if _minimal_faces(faces, labels):
            logger.info(f"order {seq} gives a minimal Lyubeznik resolution ({examined} rootings examined)")
            ordered = sorted((f for f in faces if f), key=face_key)
            return RootedCertificate(
                rooted=True, lyubeznik=True, order=seq,
                rooted_faces=[list(f) for f in ordered], orders_examined=examined,
            )
    logger.info(f"no Lyubeznik order is minimal after {examined} distinct rootings")
    return RootedCertificate(
        rooted=None, lyubeznik=False, orders_examined=examined,
        note="no total order yields a minimal rooted resolution; other rooting maps were not searched",
    )


def parse_order(text: Optional[str], r: int) -> TotalOrder:
    if not text:
        return TotalOrder.identity(r)
    try:
        order = TotalOrder.parse(text)
    except (ValueError, ValidationError) as e:
        raise InputError(str(e))
    if len(order.sequence) != r:
        raise InputError(f"order {order.sequence} does not list all {r} generators")
    return order
