# core/models/ainfty.py
# Reports produced by the transfer diagram and the transferred A-infinity structure.

from typing import List, Literal, Optional

from pydantic import BaseModel, Field

from core.models.element import TermRecord


class IdentityFailure(BaseModel):
    identity: str = Field(..., description="Name of the identity that failed")
    args: List[List[int]] = Field(..., description="Basis faces the identity was evaluated on")
    residue: str = Field("", description="Non-zero difference, in variable notation")


class TransferReport(BaseModel):
    """Exact checks of the transfer diagram on every Taylor basis face"""
    record: Literal["transfer"] = "transfer"
    faces_checked: int
    identities: List[str]
    passed: bool
    failures: List[IdentityFailure] = Field(default_factory=list)


class StasheffReport(BaseModel):
    record: Literal["stasheff"] = "stasheff"
    n_max: int
    tensors_checked: int
    passed: bool
    convention: Literal["minus-identity", "plus-identity"] = "minus-identity"
    failure: Optional[IdentityFailure] = None


class SideConditionReport(BaseModel):
    """φ² = 0, pφ = 0, φi = 0; reported, never assumed"""
    record: Literal["side_conditions"] = "side_conditions"
    phi_squared_zero: bool
    p_phi_zero: bool
    phi_i_zero: bool
    witnesses: List[IdentityFailure] = Field(default_factory=list)


class UnitalityReport(BaseModel):
    record: Literal["unitality"] = "unitality"
    unit_for_mu2: bool
    higher_vanish_on_unit: bool
    n_max: int
    witness: Optional[IdentityFailure] = None


class MuRecord(BaseModel):
    """One entry of a μ-table: μ_n(args)"""
    record: Literal["mu"] = "mu"
    n: int
    args: List[List[int]]
    value: List[TermRecord]


class LemmaReport(BaseModel):
    """p(λ₂(u_I, u_J)) lies in (x)F whenever gcd(m_I, m_J) ≠ 1"""
    record: Literal["plambda2_lemma"] = "plambda2_lemma"
    holds: bool
    pairs_checked: int
    witness: Optional[IdentityFailure] = None
