"""Structured reports emitted by the tools and the command line.

Every model carries ``schema_version``; JSON is produced with
``model_dump_json(indent=2)`` so identical runs give identical bytes.
"""

from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

from topology_engine.certify.angles import AngleSearch
from topology_engine.certify.norms import NormReport
from topology_engine.certify.table3 import Table3Check
from topology_engine.certify.tightness import TightnessCertificate
from topology_engine.normal.analysis import analyze_surface
from topology_engine.normal.canonical import is_one_quad_per_tet
from topology_engine.normal.coordinates import NormalSurfaceVector, euler_characteristic

SCHEMA_VERSION = "1"


class RunHeader(BaseModel):
    """Version, seed and limits of a run."""

    schema_version: str = SCHEMA_VERSION
    version: str
    seed: int
    limits: Dict[str, int | bool]

    def line(self) -> str:
        limits = " ".join(f"{k}={v}" for k, v in sorted(self.limits.items()))
        return f"# topology_engine {self.version} seed={self.seed} {limits}"


class TriangulationReport(BaseModel):
    schema_version: str = SCHEMA_VERSION
    family: str
    parameters: Dict[str, int] = Field(default_factory=dict)
    tet_count: int
    iso_signature: str
    gluing_table: str


class LinkSummary(BaseModel):
    vertex: int
    kind: str
    euler: int
    orientable: bool


class InvariantsReport(BaseModel):
    schema_version: str = SCHEMA_VERSION
    iso_signature: str
    tet_count: int
    orientable: bool
    h1: str
    h1_z2: str
    h2_z2_rank: int
    edge_degrees: List[int]
    vertices: List[LinkSummary]
    boundary_components: int


class SurfaceReport(BaseModel):
    """One normal surface; the geometric fields are filled for standard coordinates only."""

    schema_version: str = SCHEMA_VERSION
    coords: List[int]
    system: str
    euler: Optional[int] = None
    orientable: Optional[bool] = None
    closed: Optional[bool] = None
    components: Optional[int] = None
    vertex_linking: Optional[bool] = None
    one_quad_per_tet: bool

    @classmethod
    def from_vector(cls, v: NormalSurfaceVector) -> "SurfaceReport":
        if v.system != "standard":
            return cls(coords=list(v.coords), system=v.system, one_quad_per_tet=False)
        analysis = analyze_surface(v)
        return cls(
            coords=list(v.coords),
            system=v.system,
            euler=euler_characteristic(v),
            orientable=analysis.orientable,
            closed=analysis.closed,
            components=analysis.component_count,
            vertex_linking=all(c.vertex_linking for c in analysis.components),
            one_quad_per_tet=is_one_quad_per_tet(v),
        )


class EnumerationReport(BaseModel):
    schema_version: str = SCHEMA_VERSION
    iso_signature: str
    which: str
    system: str
    surface_filter: str
    count: int
    surfaces: List[SurfaceReport]

    @model_validator(mode="after")
    def _count_matches(self) -> "EnumerationReport":
        if self.count != len(self.surfaces):
            raise ValueError(f"count {self.count} disagrees with {len(self.surfaces)} surfaces")
        return self


class ClassEvidenceModel(BaseModel):
    labelling: str
    vector: Optional[List[int]]
    one_quad_per_tet: bool
    euler: Optional[int]


class CertificateReport(BaseModel):
    schema_version: str = SCHEMA_VERSION
    iso_signature: str
    tet_count: int
    h2_rank: int
    classes: List[ClassEvidenceModel]
    quad_partition: bool
    negative_euler_sum: Optional[int]
    verdict: bool
    caveat: str

    @classmethod
    def from_certificate(cls, c: TightnessCertificate) -> "CertificateReport":
        return cls(
            iso_signature=c.signature,
            tet_count=c.tet_count,
            h2_rank=c.h2_rank,
            classes=[
                ClassEvidenceModel(
                    labelling=e.labelling,
                    vector=list(e.vector) if e.vector is not None else None,
                    one_quad_per_tet=e.one_quad_per_tet,
                    euler=e.euler,
                )
                for e in c.classes
            ],
            quad_partition=c.quad_partition,
            negative_euler_sum=c.negative_euler_sum,
            verdict=c.verdict,
            caveat=c.caveat,
        )


class AngleReport(BaseModel):
    """Angles are exact rationals written as strings, in units of pi."""

    schema_version: str = SCHEMA_VERSION
    iso_signature: str
    feasible: bool
    slack: Optional[str]
    angles: Optional[List[List[str]]]
    certificate: str = ""

    @classmethod
    def from_search(cls, signature: str, search: AngleSearch) -> "AngleReport":
        return cls(
            iso_signature=signature,
            feasible=search.feasible,
            slack=None if search.slack is None else str(search.slack),
            angles=search.structure.as_strings() if search.feasible else None,
            certificate=search.certificate,
        )


class CandidateModel(BaseModel):
    weights: Dict[str, Tuple[int, int, int]]
    euler: int
    source: str
    extensions: Dict[str, Optional[int]]
    total: Optional[int]


class ClassNormModel(BaseModel):
    name: str
    norm: Optional[int]
    best: Optional[CandidateModel]
    candidates: List[CandidateModel]


class NormReportModel(BaseModel):
    schema_version: str = SCHEMA_VERSION
    k: int
    n: int
    norms: List[Optional[int]]
    strict_triangle: bool
    classes: List[ClassNormModel]
    assumptions: List[str]

    @classmethod
    def from_report(cls, report: NormReport) -> "NormReportModel":
        def candidate(r) -> CandidateModel:
            return CandidateModel(
                weights=r.candidate.weights,
                euler=r.candidate.euler,
                source=r.candidate.source,
                extensions=r.extensions,
                total=r.total,
            )

        return cls(
            k=report.k,
            n=report.n,
            norms=list(report.norms),
            strict_triangle=report.strict_triangle,
            classes=[
                ClassNormModel(
                    name=c.name,
                    norm=c.norm,
                    best=candidate(c.best) if c.best is not None else None,
                    candidates=[candidate(r) for r in c.results],
                )
                for c in report.classes
            ],
            assumptions=list(report.assumptions),
        )


class MismatchModel(BaseModel):
    k: int
    l: int
    column: str
    printed: int
    computed: int


class ClassCheckModel(BaseModel):
    number: int
    cases: int
    passed: bool
    mismatches: List[MismatchModel]


class Table3Report(BaseModel):
    schema_version: str = SCHEMA_VERSION
    passed: bool
    classes: List[ClassCheckModel]

    @classmethod
    def from_check(cls, check: Table3Check) -> "Table3Report":
        return cls(
            passed=check.passed,
            classes=[
                ClassCheckModel(
                    number=c.number,
                    cases=c.cases,
                    passed=c.passed,
                    mismatches=[MismatchModel(**vars(m)) for m in c.mismatches],
                )
                for c in check.classes
            ],
        )


class ScanRow(BaseModel):
    line: int
    text: str
    status: str = Field(..., description="ok, decode-error, skipped, timeout or error")
    tet_count: Optional[int] = None
    h2_rank: Optional[int] = None
    verdict: Optional[bool] = None
    detail: str = ""


class ScanSummary(BaseModel):
    rows: int
    decoded: int
    decode_failures: int
    hits: int
    misses: int
    skipped: int
    timeouts: int
    errors: int


class ScanReport(BaseModel):
    schema_version: str = SCHEMA_VERSION
    source: str
    rows: List[ScanRow]
    summary: ScanSummary

    @classmethod
    def from_rows(cls, source: str, rows: List[ScanRow]) -> "ScanReport":
        def count(status: str) -> int:
            return sum(r.status == status for r in rows)

        summary = ScanSummary(
            rows=len(rows),
            decoded=len(rows) - count("decode-error"),
            decode_failures=count("decode-error"),
            hits=sum(r.status == "ok" and r.verdict is True for r in rows),
            misses=sum(r.status == "ok" and r.verdict is False for r in rows),
            skipped=count("skipped"),
            timeouts=count("timeout"),
            errors=count("error"),
        )
        return cls(source=source, rows=rows, summary=summary)
