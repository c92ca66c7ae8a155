"""
Structured output schema management

Every record the CLI writes in json mode is one of the models below, tagged
by its "record" field. This module publishes their JSON schemas and parses
record lines back into models.
"""

import json
from typing import Any, Dict, List, Type

from pydantic import BaseModel

from core.models.ainfty import (
    LemmaReport,
    MuRecord,
    SideConditionReport,
    StasheffReport,
    TransferReport,
    UnitalityReport,
)
from core.models.golod import GolodReport, MuMinimalityReport
from core.models.job import JobSummary, MomentAngleReport
from core.models.massey import BrReport, CrossCheckReport, HomologyClass, MasseyResult
from core.models.resolution import BettiRecord, BettiTable, ResolutionRecord
from core.models.rooting import RootedCertificate
from core.models.series import BarTorResult, CoefficientComparison, PoincareReport, PowerSeries
from core.tools.errors import InputError

RECORD_MODELS: Dict[str, Type[BaseModel]] = {
    "resolution": ResolutionRecord,
    "betti": BettiRecord,
    "betti_table": BettiTable,
    "certificate": RootedCertificate,
    "transfer": TransferReport,
    "stasheff": StasheffReport,
    "side_conditions": SideConditionReport,
    "unitality": UnitalityReport,
    "mu": MuRecord,
    "plambda2_lemma": LemmaReport,
    "mu_minimality": MuMinimalityReport,
    "golod": GolodReport,
    "homology_class": HomologyClass,
    "massey": MasseyResult,
    "br_condition": BrReport,
    "massey_cross_check": CrossCheckReport,
    "series": PowerSeries,
    "bar_tor": BarTorResult,
    "coefficient": CoefficientComparison,
    "poincare": PoincareReport,
    "moment_angle": MomentAngleReport,
    "summary": JobSummary,
}


def _add_strict_properties(obj: Any) -> None:
    """Recursively mark every object schema with additionalProperties: false."""
    if isinstance(obj, dict):
        if obj.get("type") == "object" and "properties" in obj:
            obj["additionalProperties"] = False
        for value in obj.values():
            _add_strict_properties(value)
    elif isinstance(obj, list):
        for item in obj:
            _add_strict_properties(item)


def create_record_schema(model_class: Type[BaseModel], schema_name: str, strict: bool = False) -> Dict[str, Any]:
    schema = model_class.model_json_schema()
    if strict:
        _add_strict_properties(schema)
        schema["properties"]["id"] = {"type": "string"}
    return {"name": schema_name, "schema": schema, "strict": strict}


def get_record_schemas(strict: bool = False) -> List[Dict[str, Any]]:
    """One schema per record type, in a stable order."""
    return [create_record_schema(model, tag, strict) for tag, model in sorted(RECORD_MODELS.items())]


# =============================================================================
# Parsing
# =============================================================================

def parse_record(line: str) -> BaseModel:
    """Re-parse one json-mode output line under its published schema."""
    data = json.loads(line)
    tag = data.get("record") if isinstance(data, dict) else None
    model = RECORD_MODELS.get(tag)
    if model is None:
        raise InputError(f"unknown record type {tag!r}")
    data.pop("id", None)
    return model.model_validate(data)
