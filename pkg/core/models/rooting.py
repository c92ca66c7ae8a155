# core/models/rooting.py
# Rooting maps on the lcm lattice and rootedness certificates.

from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field, field_validator

from core.models.monomial import Exps


class TotalOrder(BaseModel):
    """Generator indices listed by precedence: sequence[0] ≺ sequence[1] ≺ ..."""
    sequence: List[int] = Field(..., description="A permutation of 1..r")

    @field_validator("sequence")
    @classmethod
    def _permutation(cls, v):
        if sorted(v) != list(range(1, len(v) + 1)):
            raise ValueError(f"order must be a permutation of 1..{len(v)}, got {v}")
        return v

    @classmethod
    def identity(cls, r: int) -> "TotalOrder":
        return cls(sequence=list(range(1, r + 1)))

    @classmethod
    def parse(cls, text: str) -> "TotalOrder":
        try:
            return cls(sequence=[int(t) for t in text.replace(" ", "").split(",") if t])
        except ValueError as e:
            raise ValueError(f"malformed order {text!r}: {e}")

    def rank(self) -> Dict[int, int]:
        return {g: pos for pos, g in enumerate(self.sequence)}


class RootingMap(BaseModel):
    """π: L(I) minus 0̂ -> generator index"""
    assignment: Dict[Exps, int] = Field(..., description="Lattice element (exponents) -> generator index")
    source: Literal["lyubeznik", "user"] = "user"
    order: Optional[List[int]] = None

    def __call__(self, exps: Exps) -> int:
        return self.assignment[exps]


class RootingViolation(BaseModel):
    axiom: Literal[0, 1, 2] = Field(..., description="0 = not total on the lattice, 1 = divisibility, 2 = coherence")
    element: str
    other: Optional[str] = Field(None, description="Second element of the axiom-2 witness pair")
    detail: str = ""


class RootingValidation(BaseModel):
    valid: bool
    violation: Optional[RootingViolation] = None


class RootedCertificate(BaseModel):
    """Serialized as {"order": [...], "rooted_faces": [[...], ...]}"""
    record: Literal["certificate"] = "certificate"
    rooted: Optional[bool] = Field(..., description="True, or None when rootedness stays undecided")
    lyubeznik: bool = Field(..., description="Some total order yields a minimal rooted resolution")
    order: Optional[List[int]] = None
    rooted_faces: Optional[List[List[int]]] = None
    orders_examined: int = 0
    strategy: Literal["exhaustive-orders", "user-supplied"] = "exhaustive-orders"
    note: str = ""
