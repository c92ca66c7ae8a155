# core/models/resolution.py
# Free chain complexes F_Δ over S and Betti tables.

from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, PrivateAttr

from core.models.complex import LabeledComplex
from core.models.monomial import Exps, Face, MonomialIdeal

ComplexKind = Literal["taylor", "lyubeznik", "rooted", "custom"]

# (sign, coefficient m_J / m_{J^i}, target face J^i)
Incidence = Tuple[int, Exps, Face]


class FreeComplex(BaseModel):
    """F_Δ: basis u_J for J ∈ Δ, homological degree |J|, differential with monomial coefficients"""

    ideal: MonomialIdeal
    complex: LabeledComplex
    kind: ComplexKind = "custom"
    order: Optional[List[int]] = Field(None, description="Total order used for a Lyubeznik complex")

    _incidences: Dict[Face, List[Incidence]] = PrivateAttr(default_factory=dict)

    def model_post_init(self, __context) -> None:
        cx = self.complex
        for face in cx.faces:
            lab = cx.label(face)
            inc = []
            for i in range(len(face)):
                sub = face[:i] + face[i + 1:]
                sub_lab = cx.label(sub)
                inc.append((1 if i % 2 == 0 else -1, tuple(a - b for a, b in zip(lab, sub_lab)), sub))
            self._incidences[face] = inc

    def incidences(self, face: Face) -> List[Incidence]:
        return self._incidences[face]

    @property
    def faces(self) -> List[Face]:
        return self.complex.faces

    def ranks(self) -> List[int]:
        return self.complex.face_counts()

    @property
    def top_degree(self) -> int:
        return self.complex.top_size

    def basis(self, degree: int) -> List[Face]:
        return self.complex.faces_of_size(degree)


class MinimalityVerdict(BaseModel):
    """Minimal iff no differential coefficient is a unit"""
    verdict: bool
    witness_face: Optional[List[int]] = Field(None, description="J with m_J = m_{J^i}")
    witness_facet: Optional[List[int]] = Field(None, description="The facet J^i")


class BettiRecord(BaseModel):
    """One strand of Tor^S(S/I, k)"""
    record: Literal["betti"] = "betti"
    multidegree: str = Field(..., description="Multidegree in variable notation")
    exponents: List[int]
    j: int = Field(..., description="Homological degree")
    rank: int


class BettiTable(BaseModel):
    record: Literal["betti_table"] = "betti_table"
    records: List[BettiRecord]
    totals: List[int] = Field(..., description="Total Betti numbers β_0, β_1, ...")
    field: str = "q"


class ResolutionRecord(BaseModel):
    """A complex F_Δ as exported by the resolve command"""
    record: Literal["resolution"] = "resolution"
    kind: ComplexKind
    order: Optional[List[int]] = None
    ranks: List[int]
    faces: List[List[int]] = Field(..., description="Basis faces in basis order")
    labels: List[str]
    minimal: MinimalityVerdict
    matrices: Optional[Dict[int, List[List[str]]]] = Field(
        None, description="d_j as monomial strings: rows F_{j-1}, columns F_j")
