# core/models/element.py
# Elements of the Taylor complex with (Laurent) monomial coefficients.

from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from pydantic import BaseModel, Field

from core.models.monomial import Exps, Face, VariableContext

Key = Tuple[Exps, Face]


class TaylorElement:
    """
    Finite sum of scalar * x^a * u_J, stored as {(a, J): scalar}.

    Exponent vectors may go negative while a bracket [u] is in flight; public
    results of the tools are checked to be effective. Zero scalars are never
    stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Key, int]] = None):
        self.terms: Dict[Key, int] = {}
        if terms:
            for key, c in terms.items():
                if c:
                    self.terms[key] = c

    @classmethod
    def basis(cls, face: Face, m: int, scalar: int = 1) -> "TaylorElement":
        return cls({((0,) * m, tuple(face)): scalar})

    @classmethod
    def zero(cls) -> "TaylorElement":
        return cls()

    def add_term(self, coeff: Exps, face: Face, scalar: int) -> None:
        if not scalar:
            return
        key = (coeff, face)
        c = self.terms.get(key, 0) + scalar
        if c:
            self.terms[key] = c
        else:
            self.terms.pop(key, None)

    def iadd(self, other: "TaylorElement", factor: int = 1) -> "TaylorElement":
        for (coeff, face), c in other.terms.items():
            self.add_term(coeff, face, factor * c)
        return self

    def __add__(self, other: "TaylorElement") -> "TaylorElement":
        return self.copy().iadd(other)

    def __sub__(self, other: "TaylorElement") -> "TaylorElement":
        return self.copy().iadd(other, -1)

    def __neg__(self) -> "TaylorElement":
        return TaylorElement({k: -c for k, c in self.terms.items()})

    def scaled(self, factor: int) -> "TaylorElement":
        if not factor:
            return TaylorElement()
        return TaylorElement({k: factor * c for k, c in self.terms.items()})

    def shifted(self, exps: Exps) -> "TaylorElement":
        """Multiply every coefficient by x^exps."""
        out = TaylorElement()
        for (coeff, face), c in self.terms.items():
            out.terms[(tuple(a + b for a, b in zip(coeff, exps)), face)] = c
        return out

    def copy(self) -> "TaylorElement":
        return TaylorElement(dict(self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TaylorElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __iter__(self) -> Iterator[Tuple[Exps, Face, int]]:
        for (coeff, face), c in self.terms.items():
            yield coeff, face, c

    def __len__(self) -> int:
        return len(self.terms)

    def faces(self) -> List[Face]:
        return sorted({face for _, face in self.terms})

    def is_effective(self) -> bool:
        return all(e >= 0 for coeff, _ in self.terms for e in coeff)

    def degrees(self) -> List[int]:
        return sorted({len(face) for _, face in self.terms})

    def mod_variables(self) -> Dict[Face, int]:
        """Image in T⊗k: keep only terms whose coefficient is the unit monomial."""
        out: Dict[Face, int] = {}
        for (coeff, face), c in self.terms.items():
            if not any(coeff):
                out[face] = out.get(face, 0) + c
        return {f: c for f, c in out.items() if c}

    def unit_terms(self) -> List[Tuple[Face, int]]:
        return sorted(self.mod_variables().items())

    def sorted_terms(self) -> List[Tuple[Exps, Face, int]]:
        return sorted(((coeff, face, c) for (coeff, face), c in self.terms.items()),
                      key=lambda t: (len(t[1]), t[1], t[0]))

    def to_text(self, ctx: VariableContext) -> str:
        if not self.terms:
            return "0"
        text = ""
        for coeff, face, c in self.sorted_terms():
            basis = "u" + ("_" + ",".join(str(i) for i in face) if face else "_0")
            mono = ctx.format_laurent(coeff)
            body = basis if mono == "1" else f"{mono}*{basis}"
            if abs(c) != 1:
                body = f"{abs(c)}*{body}"
            if not text:
                text = ("-" if c < 0 else "") + body
            else:
                text += (" - " if c < 0 else " + ") + body
        return text

    def to_records(self, ctx: VariableContext) -> List["TermRecord"]:
        return [
            TermRecord(coeff=ctx.format_laurent(coeff), face=list(face), sign=1 if c > 0 else -1, scalar=abs(c))
            for coeff, face, c in self.sorted_terms()
        ]

    def __repr__(self) -> str:
        return f"TaylorElement({self.sorted_terms()!r})"


# Elements of F_Δ / T over S use the same carrier with effective coefficients.
SElement = TaylorElement


class TermRecord(BaseModel):
    """One term of an exported element"""
    coeff: str = Field(..., description="Monomial coefficient in variable notation, 1 for the unit")
    face: List[int] = Field(..., description="Basis face u_J as its index list")
    sign: int = Field(..., description="+1 or -1")
    scalar: int = Field(1, description="Absolute value of the integer scalar")


def element_from_pairs(pairs: Iterable[Tuple[Exps, Face, int]]) -> TaylorElement:
    out = TaylorElement()
    for coeff, face, c in pairs:
        out.add_term(tuple(coeff), tuple(face), c)
    return out
