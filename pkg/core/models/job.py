# core/models/job.py
# Job description for one CLI invocation and the summary record closing its output.

from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field, model_validator

Command = Literal["resolve", "golod", "ainfty", "massey", "tor", "poincare", "moment-angle", "search-order"]
OutputFormat = Literal["text", "json"]


class JobSpec(BaseModel):
    """Everything that determines a job's output; hashed into the job id"""
    command: Command
    ideal: Optional[Dict] = Field(None, description='{"vars": [...], "generators": [...]}')
    facets: Optional[Dict] = Field(None, description='{"m": int, "facets": [[...], ...]}')
    field: str = Field("q", description="q | f2 | fp:<p>")
    order: Optional[str] = Field(None, description="Total order on generators, e.g. 2,1,3")
    pi: Optional[Dict[str, int]] = Field(None, description="User rooting map: lattice element -> generator")
    kind: Literal["taylor", "lyubeznik", "rooted"] = "lyubeznik"
    emit_matrices: bool = False
    max_n: Optional[int] = None
    truncate: Optional[int] = Field(None, description="Series truncation order / bar oracle j_max")
    massey_k: int = Field(3, description="Largest Massey arity checked")
    guard_subsets: Optional[int] = None
    guard_perms: Optional[int] = None
    seed: Optional[int] = None
    threads: int = 1
    output: OutputFormat = "text"

    @model_validator(mode="after")
    def _one_input(self):
        if (self.ideal is None) == (self.facets is None):
            raise ValueError("exactly one of an ideal or a facet list must be given")
        if self.command == "moment-angle" and self.facets is None:
            raise ValueError("moment-angle needs a facet list input")
        return self


class JobSummary(BaseModel):
    record: Literal["summary"] = "summary"
    job_id: str
    command: Command
    records: int
    field: str
    headline: str = ""


class MomentAngleReport(BaseModel):
    """H*(Z_Δ; k) ranks by cohomological degree, with the Hochster cross-check"""
    record: Literal["moment_angle"] = "moment_angle"
    m: int
    stanley_reisner: List[str]
    ranks: Dict[int, int]
    hochster_agrees: bool
