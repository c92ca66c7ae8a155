# core/models/complex.py
# Base field configuration and labeled simplicial complexes on generator indices.

from typing import Dict, List, Literal, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, model_validator
from sympy import GF, QQ, isprime

from core.models.monomial import Exps, Face

# =============================================================================
# Field
# =============================================================================

class FieldConfig(BaseModel):
    """Coefficient field k: exact rationals or GF(p)"""
    model_config = ConfigDict(frozen=True)

    kind: Literal["rational", "prime"] = Field("rational", description="rational = QQ, prime = GF(p)")
    p: Optional[int] = Field(None, description="Characteristic when kind is prime")

    @model_validator(mode="after")
    def _check_prime(self):
        if self.kind == "prime":
            if self.p is None or not isprime(self.p):
                raise ValueError(f"prime field needs a prime modulus, got {self.p}")
        elif self.p is not None:
            raise ValueError("rational field takes no modulus")
        return self

    @classmethod
    def parse(cls, text: str) -> "FieldConfig":
        """`q`, `f2` or `fp:<p>`."""
        t = (text or "q").strip().lower()
        if t in ("q", "qq", "rational"):
            return cls(kind="rational")
        if t == "f2":
            return cls(kind="prime", p=2)
        if t.startswith("fp:"):
            try:
                p = int(t[3:])
            except ValueError:
                raise ValueError(f"malformed field spec {text!r}")
            return cls(kind="prime", p=p)
        raise ValueError(f"unknown field {text!r}; use q, f2 or fp:<p>")

    def domain(self):
        return QQ if self.kind == "rational" else GF(self.p)

    def tag(self) -> str:
        return "q" if self.kind == "rational" else f"fp:{self.p}"


# =============================================================================
# Labeled complexes
# =============================================================================

def face_key(face: Face) -> Tuple[int, Face]:
    """Global basis order: by cardinality, then lexicographic."""
    return (len(face), face)


class LabeledComplex(BaseModel):
    """Simplicial complex on {1..r} with multidegree labels m_J"""

    r: int = Field(..., description="Number of generators (vertex universe)")
    faces: List[Face] = Field(..., description="Faces in basis order, subset-closed, including the empty face")
    labels: List[Exps] = Field(..., description="m_J for each face, parallel to faces")

    _index: Dict[Face, int] = PrivateAttr(default_factory=dict)

    @model_validator(mode="after")
    def _parallel(self):
        if len(self.faces) != len(self.labels):
            raise ValueError("faces and labels must have equal length")
        return self

    def model_post_init(self, __context) -> None:
        order = sorted(range(len(self.faces)), key=lambda k: face_key(self.faces[k]))
        self.faces = [self.faces[k] for k in order]
        self.labels = [self.labels[k] for k in order]
        self._index = {f: k for k, f in enumerate(self.faces)}

    def __contains__(self, face: Face) -> bool:
        return face in self._index

    def __len__(self) -> int:
        return len(self.faces)

    def label(self, face: Face) -> Exps:
        return self.labels[self._index[face]]

    def faces_of_size(self, k: int) -> List[Face]:
        return [f for f in self.faces if len(f) == k]

    @property
    def top_size(self) -> int:
        return max((len(f) for f in self.faces), default=-1)

    @property
    def dim(self) -> int:
        return self.top_size - 1

    def vertices(self) -> List[int]:
        return [f[0] for f in self.faces if len(f) == 1]

    def face_counts(self) -> List[int]:
        counts = [0] * (self.top_size + 1)
        for f in self.faces:
            counts[len(f)] += 1
        return counts

    def is_subset_closed(self) -> bool:
        for f in self.faces:
            for i in range(len(f)):
                if f[:i] + f[i + 1:] not in self._index:
                    return False
        return True


class SupportVerdict(BaseModel):
    """Outcome of the acyclicity test over all lattice multidegrees"""
    verdict: bool
    witness: Optional[Exps] = Field(None, description="A multidegree whose restriction has reduced homology")
    witness_text: Optional[str] = None
    ranks: Optional[List[int]] = Field(None, description="Reduced homology ranks at the witness, from degree -1")


def faces_from_lists(lists: Sequence[Sequence[int]]) -> List[Face]:
    return [tuple(sorted(int(i) for i in f)) for f in lists]
