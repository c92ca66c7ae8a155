# core/tools/monomial_core.py
"""
Exact monomial arithmetic on exponent vectors, ideal construction and the lcm lattice.
"""

import logging
import re
from typing import Any, Dict, Iterable, List, NamedTuple, Optional, Sequence

from pydantic import ValidationError

from core.models.monomial import MAX_EXPONENT, Exps, LcmLattice, Monomial, MonomialIdeal, VariableContext
from core.tools.config import get_guard_config
from core.tools.errors import InputError, check_guard

logger = logging.getLogger(__name__)

_TERM = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\^\s*([0-9]+))?\s*$")


# =============================================================================
# Exponent-vector helpers (hot path, plain tuples)
# =============================================================================

def lcm_exps(a: Exps, b: Exps) -> Exps:
    return tuple(x if x >= y else y for x, y in zip(a, b))


def gcd_exps(a: Exps, b: Exps) -> Exps:
    return tuple(x if x <= y else y for x, y in zip(a, b))


def divides_exps(a: Exps, b: Exps) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mul_exps(a: Exps, b: Exps) -> Exps:
    out = tuple(x + y for x, y in zip(a, b))
    if any(e > MAX_EXPONENT for e in out):
        raise InputError(f"product exponent overflows capacity {MAX_EXPONENT}")
    return out


def div_exps(a: Exps, b: Exps) -> Exps:
    """a / b as a Laurent exponent vector (entries may go negative)."""
    return tuple(x - y for x, y in zip(a, b))


def is_unit(a: Exps) -> bool:
    return not any(a)


def lcm_of(gens: Sequence[Exps], m: int) -> Exps:
    out = (0,) * m
    for g in gens:
        out = lcm_exps(out, g)
    return out


# =============================================================================
# Parsing
# =============================================================================

def parse_monomial(text: str, ctx: VariableContext) -> Monomial:
    """
    Parse `term ("*" term)*` with term = var | var "^" positive-integer.
    The literal `1` is accepted as the unit monomial.
    """
    if text is None or not str(text).strip():
        raise InputError("empty monomial text")
    text = str(text).strip()
    exps = [0] * ctx.m
    if text == "1":
        return Monomial(exponents=tuple(exps))
    for raw in text.split("*"):
        match = _TERM.match(raw)
        if not match:
            raise InputError(f"malformed monomial term {raw!r} in {text!r}")
        name, power = match.group(1), match.group(2)
        try:
            k = ctx.index(name)
        except KeyError:
            raise InputError(f"unknown variable {name!r} in {text!r}; known: {list(ctx.names)}")
        e = 1 if power is None else int(power)
        if power is not None and e <= 0:
            raise InputError(f"exponent must be positive in {raw!r}")
        exps[k] += e
        if exps[k] > MAX_EXPONENT:
            raise InputError(f"exponent of {name} overflows capacity {MAX_EXPONENT}")
    return Monomial(exponents=tuple(exps))


def format_monomial(mono: Monomial, ctx: VariableContext) -> str:
    return ctx.format(mono.exponents)


# =============================================================================
# Arithmetic
# =============================================================================

class MonomialArith(NamedTuple):
    lcm: Monomial
    gcd: Monomial
    a_divides_b: bool


def _same_context(a: Monomial, b: Monomial) -> None:
    if len(a.exponents) != len(b.exponents):
        raise InputError(f"context mismatch: {len(a.exponents)} vs {len(b.exponents)} variables")


def monomial_arith(a: Monomial, b: Monomial) -> MonomialArith:
    _same_context(a, b)
    return MonomialArith(
        lcm=Monomial(exponents=lcm_exps(a.exponents, b.exponents)),
        gcd=Monomial(exponents=gcd_exps(a.exponents, b.exponents)),
        a_divides_b=divides_exps(a.exponents, b.exponents),
    )


def minimalize_generators(gens: Sequence[Monomial], ctx: VariableContext) -> MonomialIdeal:
    """Drop duplicates and every monomial divisible by another; survivors keep their order."""
    if not gens:
        raise InputError("cannot build an ideal from an empty generator list")
    for g in gens:
        if len(g.exponents) != ctx.m:
            raise InputError(f"context mismatch: monomial with {len(g.exponents)} exponents, {ctx.m} variables")
    seen = set()
    unique: List[Exps] = []
    for g in gens:
        if g.exponents not in seen:
            seen.add(g.exponents)
            unique.append(g.exponents)
    kept = [
        a for a in unique
        if not any(b != a and divides_exps(b, a) for b in unique)
    ]
    if len(kept) < len(gens):
        logger.debug(f"minimalized {len(gens)} generators to {len(kept)}")
    return MonomialIdeal(ctx=ctx, generators=tuple(Monomial(exponents=a) for a in kept))


def ideal_from_texts(names: Sequence[str], generators: Iterable[str], minimalize: bool = True) -> MonomialIdeal:
    try:
        ctx = VariableContext(names=tuple(names))
    except ValidationError as e:
        raise InputError(f"invalid variable list: {e}")
    monos = [parse_monomial(t, ctx) for t in generators]
    if minimalize:
        return minimalize_generators(monos, ctx)
    try:
        return MonomialIdeal(ctx=ctx, generators=tuple(monos))
    except ValidationError as e:
        raise InputError(f"invalid ideal: {e}")


def ideal_from_dict(data: Dict[str, Any]) -> MonomialIdeal:
    """`{"vars": [...], "generators": ["x*y", ...]}`"""
    if not isinstance(data, dict) or "vars" not in data or "generators" not in data:
        raise InputError("ideal input needs 'vars' and 'generators'")
    return ideal_from_texts(data["vars"], data["generators"])


def ideal_to_dict(ideal: MonomialIdeal) -> Dict[str, Any]:
    return {"vars": list(ideal.ctx.names), "generators": ideal.generator_texts()}


# =============================================================================
# Lcm lattice
# =============================================================================

def build_lcm_lattice(ideal: MonomialIdeal, guard: Optional[int] = None) -> LcmLattice:
    """Close the generator set under lcm; tags record which generators divide each element."""
    limit = guard if guard is not None else get_guard_config().subsets
    check_guard("subsets", limit, ideal.r)
    gens = ideal.gens()
    bottom = (0,) * ideal.m
    found = {bottom}
    frontier = set(gens)
    found |= frontier
    while frontier:
        fresh = set()
        for a in frontier:
            for g in gens:
                c = lcm_exps(a, g)
                if c not in found:
                    fresh.add(c)
        found |= fresh
        frontier = fresh
    elements = sorted(found, key=lambda e: (sum(e), e))
    tags = [
        frozenset(i + 1 for i, g in enumerate(gens) if divides_exps(g, e))
        for e in elements
    ]
    logger.info(f"lcm lattice: r={ideal.r}, |L|={len(elements)}")
    return LcmLattice(elements=elements, tags=tags)
