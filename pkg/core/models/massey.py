# core/models/massey.py
# Koszul homology classes and Massey product reports on T⊗k.

from typing import List, Literal, Optional

from pydantic import BaseModel, Field


class ChainTerm(BaseModel):
    face: List[int]
    coeff: str = Field(..., description="Field element, printed exactly")


class HomologyClass(BaseModel):
    """One basis class of Tor^S(R, k) = H(T⊗k)"""
    record: Literal["homology_class"] = "homology_class"
    index: int = Field(..., description="Position in the homology basis, 0 is [u_0]")
    multidegree: str
    exponents: List[int]
    degree: int
    representative: List[ChainTerm]


class MasseyResult(BaseModel):
    """
    ⟨α_1, ..., α_n⟩ as representative + indeterminacy. defined / contains_zero
    are None when the level-wise search cannot decide them.
    """
    record: Literal["massey"] = "massey"
    classes: List[List[int]] = Field(..., description="Class indices, or basis faces for F-classes")
    n: int
    defined: Optional[bool]
    contains_zero: Optional[bool] = None
    multidegree: str = ""
    degree: int = 0
    representative: Optional[List[str]] = Field(
        None, description="Coordinates of one value in the homology basis of its strand")
    indeterminacy_dim: Optional[int] = None
    note: str = ""

    @property
    def only_zero(self) -> bool:
        return self.defined is True and self.contains_zero is True and self.indeterminacy_dim == 0


class BrReport(BaseModel):
    record: Literal["br_condition"] = "br_condition"
    r_max: int
    holds: Optional[bool]
    tuples_checked: int
    failed_arity: Optional[int] = None
    failure: Optional[MasseyResult] = None
    note: str = ""


class CrossCheckReport(BaseModel):
    """±(μ_n ⊗ 1)(u_J1, ..., u_Jn) against the Massey coset of the same classes"""
    record: Literal["massey_cross_check"] = "massey_cross_check"
    n_max: int
    tuples_checked: int
    defined_tuples: int
    passed: bool
    failure: Optional[MasseyResult] = None
