# core/models/series.py
# Poincaré series: the Serre bound and the bar-complex oracle for Tor^R(k, k).

from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, model_validator


class PowerSeries(BaseModel):
    """Σ coefficients[j] t^j, truncated after t^order"""
    record: Literal["series"] = "series"
    coefficients: List[int]
    order: int = Field(..., ge=0)
    numerator: str = Field("", description="Closed form numerator in t")
    denominator: str = Field("", description="Closed form denominator in t")

    @model_validator(mode="after")
    def _length(self):
        if len(self.coefficients) != self.order + 1:
            raise ValueError(f"series truncated at t^{self.order} needs {self.order + 1} coefficients")
        return self


class BarComplexSlice(BaseModel):
    """Basis of the normalized bar complex in homological degree j and one multidegree"""
    j: int
    multidegree: Tuple[int, ...]
    basis: List[Tuple[Tuple[int, ...], ...]] = Field(
        ..., description="Tuples of j exponent vectors, each a non-zero monomial of R of positive degree")

    @property
    def internal_degree(self) -> int:
        return sum(self.multidegree)


class BarTorResult(BaseModel):
    record: Literal["bar_tor"] = "bar_tor"
    dims: List[int] = Field(..., description="dim Tor^R_j(k, k) for j = 0..j_max within the caps")
    caps: List[int] = Field(..., description="Internal degree cap used for each j")
    stabilized: List[bool] = Field(..., description="Unchanged with caps + 1 and caps + 2")
    heuristic: bool = True


class CoefficientComparison(BaseModel):
    record: Literal["coefficient"] = "coefficient"
    j: int
    bound: int
    oracle: int
    relation: Literal["=", "<", ">"]
    stabilized: bool


class PoincareReport(BaseModel):
    record: Literal["poincare"] = "poincare"
    betti: List[int]
    bound: PowerSeries
    oracle: BarTorResult
    comparisons: List[CoefficientComparison]
    serre_inequality: bool = Field(..., description="oracle ≤ bound on every compared coefficient")
    equality: bool = Field(..., description="oracle = bound on every compared coefficient")
    strict_at: Optional[int] = Field(None, description="First j with oracle < bound")
