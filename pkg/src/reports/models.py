"""
JSON report models.

Every JSON document the tool writes is one of these pydantic models, so the
published schema (schema/report.schema.json) is generated from the same
classes that serialize the output.
"""

import json
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field
from pydantic.json_schema import models_json_schema

import config
from src.combinatorics.shapes import conjugate, dim_springer_fiber, dim_stabilizer, jordan_type_all_smooth
from src.geometry.classify import ComponentReport, ShapeClassification


class ReportModel(BaseModel):
    model_config = ConfigDict(extra='forbid')


class PatternModel(ReportModel):
    n: int = Field(ge=0)
    blocks: List[List[int]]


class SingularityModel(ReportModel):
    verdict: str = Field(pattern='^(singular|smooth|unknown)$')
    provenance: str
    witness: Optional[Dict[str, List[int]]] = None


class ComponentModel(ReportModel):
    tableau: List[List[int]]
    shape: List[int]
    dim: int = Field(ge=0)
    class_: List[str] = Field(alias='class')
    bc_composition: Optional[List[int]] = None
    richardson_composition: Optional[List[int]] = None
    gen_bc_pattern: Optional[PatternModel] = None
    singular: SingularityModel
    bundle_base: Optional[List[int]] = None

    model_config = ConfigDict(extra='forbid', populate_by_name=True)

    @classmethod
    def from_report(cls, report: ComponentReport) -> 'ComponentModel':
        return cls.model_validate(report.to_dict())


class SummaryModel(ReportModel):
    components: int = Field(ge=0)
    BC: int = Field(ge=0)
    R: int = Field(ge=0)
    genBC: int = Field(ge=0)
    genR: int = Field(ge=0)
    singular: int = Field(ge=0)
    smooth: int = Field(ge=0)
    unknown: int = Field(ge=0)
    exists_singular: bool


class AtlasRecord(ReportModel):
    """Classification of every component of one Jordan type."""
    shape: List[int]
    n: int = Field(ge=0)
    conjugate: List[int]
    springer_dim: int = Field(ge=0)
    stabilizer_dim: int = Field(ge=0)
    all_smooth: bool
    reports: List[ComponentModel]
    summary: SummaryModel
    tool_version: Optional[str] = None

    @classmethod
    def from_classification(cls, classification: ShapeClassification, stamp: bool = True) -> 'AtlasRecord':
        lam = classification.shape
        return cls(
            shape=lam.to_list(),
            n=lam.n,
            conjugate=conjugate(lam).to_list(),
            springer_dim=dim_springer_fiber(lam),
            stabilizer_dim=dim_stabilizer(lam),
            all_smooth=jordan_type_all_smooth(lam),
            reports=[ComponentModel.from_report(r) for r in classification.reports],
            summary=SummaryModel(**classification.summary),
            tool_version=version_stamp(stamp),
        )


class TableauReport(ComponentModel):
    """Output of the tableau command."""
    tool_version: Optional[str] = None


class CompositionReport(ReportModel):
    """Bala-Carter component of a composition and its Richardson dual."""
    composition: List[int]
    tableau: List[List[int]]
    singular: SingularityModel
    dual_tableau: List[List[int]]
    dual_bundle_base: List[int]
    dim: int = Field(ge=0)
    tool_version: Optional[str] = None


class OrbitModel(ReportModel):
    pattern: PatternModel
    stab_dim: int = Field(ge=0)
    orbit_dim: int = Field(ge=0)
    springer_dim: int = Field(ge=0)
    codimension: int = Field(ge=0)
    dense: bool


class PatternReport(ReportModel):
    """Arc-diagram data and Jordan orbit of one link pattern."""
    pattern: PatternModel
    jordan_type: List[int]
    arcs: List[List[int]]
    crossings: List[List[int]]
    nesting_violations: List[List[List[int]]]
    in_pi0: bool
    in_pi1: bool
    tableau: List[List[int]]
    orbit: OrbitModel
    tool_version: Optional[str] = None


class SuiteTotalsModel(ReportModel):
    suite: str
    shapes: int = Field(ge=0)
    checks: int = Field(ge=0)
    failures: int = Field(ge=0)


class VerificationReport(ReportModel):
    passed: bool
    first_counterexample: Optional[str] = None
    suites: List[SuiteTotalsModel]
    tool_version: Optional[str] = None


class IndexRow(ReportModel):
    file: str
    shape: str
    n: int = Field(ge=0)
    springer_dim: int = Field(ge=0)
    components: int = Field(ge=0)
    BC: int = Field(ge=0)
    R: int = Field(ge=0)
    genBC: int = Field(ge=0)
    genR: int = Field(ge=0)
    singular: int = Field(ge=0)
    smooth: int = Field(ge=0)
    unknown: int = Field(ge=0)
    exists_singular: bool


class AtlasIndex(ReportModel):
    """Contents of index.json."""
    max_n: int = Field(ge=0)
    shapes: List[IndexRow]
    tool_version: Optional[str] = None


class AtlasRunReport(ReportModel):
    """Output of the atlas command."""
    out_dir: str
    files: List[str]
    tool_version: Optional[str] = None


# Every document the tool writes; report_schema() accepts any one of them
REPORT_MODELS = (AtlasRecord, AtlasIndex, AtlasRunReport, CompositionReport,
                 PatternReport, TableauReport, VerificationReport)


def version_stamp(stamp: bool = True) -> Optional[str]:
    return f"{config.TOOL_NAME} {config.TOOL_VERSION}" if stamp else None


def to_json(data: Any) -> str:
    """Deterministic JSON: sorted keys, 2-space indent, trailing newline."""
    if isinstance(data, BaseModel):
        data = data.model_dump(mode='json', by_alias=True, exclude_none=False)
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + '\n'


def report_schema() -> Dict:
    """JSON schema covering every report model, one $defs entry each."""
    _, schema = models_json_schema([(model, 'validation') for model in REPORT_MODELS],
                                   title=f"{config.TOOL_NAME} reports")
    schema['anyOf'] = [{'$ref': f"#/$defs/{model.__name__}"} for model in REPORT_MODELS]
    return schema
