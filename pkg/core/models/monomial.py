# core/models/monomial.py
# Monomials, monomial ideals and the lcm lattice.

from typing import Dict, FrozenSet, List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator, model_validator

MAX_EXPONENT = 2**31 - 1

Exps = Tuple[int, ...]
Face = Tuple[int, ...]

# =============================================================================
# Variables and monomials
# =============================================================================

class VariableContext(BaseModel):
    """Ordered variable names of S = k[x_1, ..., x_m]"""
    model_config = ConfigDict(frozen=True)

    names: Tuple[str, ...] = Field(..., description="Distinct variable identifiers; position is the variable index")

    @field_validator("names")
    @classmethod
    def _distinct(cls, v):
        if len(v) == 0:
            raise ValueError("variable list must be non-empty")
        if len(set(v)) != len(v):
            raise ValueError(f"variable names must be distinct: {list(v)}")
        for name in v:
            if not name or not (name[0].isalpha() or name[0] == "_") or not all(c.isalnum() or c == "_" for c in name):
                raise ValueError(f"invalid variable name: {name!r}")
        return v

    @property
    def m(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(name)

    def format(self, exps: Sequence[int]) -> str:
        """Render an exponent vector as `x*y^2`; the unit renders as `1`."""
        parts = []
        for name, e in zip(self.names, exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def format_laurent(self, exps: Sequence[int]) -> str:
        parts = []
        for name, e in zip(self.names, exps):
            if e == 1:
                parts.append(name)
            elif e != 0:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


class Monomial(BaseModel):
    """A monomial x^a given by its exponent vector"""
    model_config = ConfigDict(frozen=True)

    exponents: Exps = Field(..., description="Exponent counts, one per variable, each in [0, 2^31-1]")

    @field_validator("exponents")
    @classmethod
    def _bounded(cls, v):
        for e in v:
            if e < 0:
                raise ValueError(f"negative exponent in {list(v)}")
            if e > MAX_EXPONENT:
                raise ValueError(f"exponent {e} exceeds capacity {MAX_EXPONENT}")
        return v

    @classmethod
    def one(cls, m: int) -> "Monomial":
        return cls(exponents=(0,) * m)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def is_one(self) -> bool:
        return not any(self.exponents)

    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exponents) if e)

    def to_text(self, ctx: VariableContext) -> str:
        return ctx.format(self.exponents)


# =============================================================================
# Ideals
# =============================================================================

class MonomialIdeal(BaseModel):
    """I = (m_1, ..., m_r), minimally generated; generator i is addressed by index i (1-based)"""
    model_config = ConfigDict(frozen=True)

    ctx: VariableContext
    generators: Tuple[Monomial, ...] = Field(..., description="Minimal generators in their declared order")

    @model_validator(mode="after")
    def _minimal(self):
        gens = [g.exponents for g in self.generators]
        if not gens:
            raise ValueError("an ideal needs at least one generator")
        m = self.ctx.m
        for g in gens:
            if len(g) != m:
                raise ValueError(f"generator {list(g)} has {len(g)} exponents, context has {m} variables")
        if len(set(gens)) != len(gens):
            raise ValueError("duplicate generators")
        for i, a in enumerate(gens):
            for j, b in enumerate(gens):
                if i != j and all(x <= y for x, y in zip(a, b)):
                    raise ValueError(
                        f"generator {j + 1} ({self.ctx.format(b)}) is divisible by generator {i + 1} ({self.ctx.format(a)})"
                    )
        return self

    @property
    def r(self) -> int:
        return len(self.generators)

    @property
    def m(self) -> int:
        return self.ctx.m

    def gens(self) -> List[Exps]:
        return [g.exponents for g in self.generators]

    def gen(self, i: int) -> Exps:
        """Exponent vector of generator i (1-based)."""
        return self.generators[i - 1].exponents

    def label(self, face: Sequence[int]) -> Exps:
        """m_J = lcm of the generators in J; the empty face has label 1."""
        out = [0] * self.m
        for i in face:
            for k, e in enumerate(self.generators[i - 1].exponents):
                if e > out[k]:
                    out[k] = e
        return tuple(out)

    def generator_texts(self) -> List[str]:
        return [self.ctx.format(g.exponents) for g in self.generators]

    def min_generator_degree(self) -> int:
        return min(g.degree for g in self.generators)


# =============================================================================
# Lcm lattice
# =============================================================================

class LcmLattice(BaseModel):
    """L(I): all lcms of generator subsets, bottom 0̂ = 1, ordered by divisibility"""

    elements: List[Exps] = Field(..., description="Lattice elements sorted by (degree, exponents); 0̂ first")
    tags: List[FrozenSet[int]] = Field(..., description="Generator indices dividing each element")

    _index: Dict[Exps, int] = PrivateAttr(default_factory=dict)

    def model_post_init(self, __context) -> None:
        self._index = {e: k for k, e in enumerate(self.elements)}

    def __contains__(self, exps: Exps) -> bool:
        return exps in self._index

    def __len__(self) -> int:
        return len(self.elements)

    def generator_tags(self, exps: Exps) -> FrozenSet[int]:
        return self.tags[self._index[exps]]

    @property
    def bottom(self) -> Exps:
        return self.elements[0]

    @property
    def top(self) -> Exps:
        return self.elements[-1]

    def proper_elements(self) -> List[Exps]:
        """L minus 0̂."""
        return self.elements[1:]
