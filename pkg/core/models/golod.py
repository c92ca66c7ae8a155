# core/models/golod.py
# Golod criteria and the consensus verdict for rooted rings.

from typing import List, Literal, Optional

from pydantic import BaseModel, Field


class CriterionResult(BaseModel):
    """One Golod criterion; the witness is given by index and in monomial notation"""
    criterion: str
    holds: bool
    witness: Optional[List[List[int]]] = Field(None, description="Generator pair, or basis faces / classes")
    witness_text: str = ""


class MinimalityWitness(BaseModel):
    n: int
    args: List[List[int]]
    face: List[int] = Field(..., description="Face carrying the unit coefficient")
    value: str = ""


class MuMinimalityReport(BaseModel):
    record: Literal["mu_minimality"] = "mu_minimality"
    minimal: bool
    n_max: int
    tensors_checked: int
    witness: Optional[MinimalityWitness] = None


class GolodReport(BaseModel):
    record: Literal["golod"] = "golod"
    verdict: Literal["Golod", "NotGolod", "Inconsistent"]
    order: Optional[List[int]] = None
    gcd_condition: CriterionResult
    pi_gcd: CriterionResult
    product_vanishes: CriterionResult
    product_vanishes_homology: CriterionResult
    mu_minimality: MuMinimalityReport
    warnings: List[str] = Field(default_factory=list)

    def criteria(self) -> List[bool]:
        return [
            self.gcd_condition.holds,
            self.pi_gcd.holds,
            self.product_vanishes.holds,
            self.product_vanishes_homology.holds,
            self.mu_minimality.minimal,
        ]
