"""Pydantic schemas for every JSON document the CLI reads or writes."""
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field


# Graph documents
class VertexRecord(BaseModel):
    """A vertex and its color."""
    id: int
    color: int = 0


class EdgeRecord(BaseModel):
    """An edge and its color."""
    u: int
    v: int
    color: int = 0


class ColoredGraphDocument(BaseModel):
    """Colored graph: ``{vertices:[{id,color}], edges:[{u,v,color}], c, d}``."""
    vertices: List[VertexRecord]
    edges: List[EdgeRecord]
    c: int = Field(1, ge=1)
    d: int = Field(1, ge=1)


# Minor certificates
class MinorModelDocument(BaseModel):
    """Minor model; edge witnesses are keyed ``"u-v"`` by pattern edge."""
    pattern: ColoredGraphDocument
    host_ref: Optional[str] = None
    host: Optional[ColoredGraphDocument] = None
    branch_sets: Dict[str, List[int]]
    edge_witnesses: Dict[str, List[int]]
    route: Optional[str] = None


class SubdivisionDocument(BaseModel):
    """Subdivision witness: branch vertices and one host path per pattern edge."""
    pattern: ColoredGraphDocument
    branch_vertices: Dict[str, int]
    paths: Dict[str, List[int]]


class ExtractionCertificateDocument(BaseModel):
    """Certificate of an unavoidable minor with the proof route that produced it."""
    target: str
    route: str
    model: MinorModelDocument
    subdivision: Optional[SubdivisionDocument] = None


class VerificationReport(BaseModel):
    """Outcome of re-verifying any certificate."""
    valid: bool
    violations: List[str] = Field(default_factory=list)


# Decompositions
class TreeDocument(BaseModel):
    nodes: List[int]
    edges: List[List[int]]


class TreeDecompositionDocument(BaseModel):
    """Tree-decomposition, optionally carrying the Tutte annotations."""
    tree: TreeDocument
    bags: Dict[str, List[int]]
    torso_kind: Optional[Dict[str, str]] = None
    virtual_edges: Optional[Dict[str, List[List[int]]]] = None
    path_witnesses: Optional[Dict[str, List[int]]] = None


class DecompositionReportDocument(BaseModel):
    valid: bool
    width: int
    adhesion: int
    adhesion_sets_complete_in_g: bool
    violations: List[str] = Field(default_factory=list)


# Universal hosts
class PieceRecord(BaseModel):
    """One materialized piece of a host."""
    index: int
    tag: int = Field(..., description="n of the Delta_n copy this piece was drawn from")
    graph: ColoredGraphDocument
    glue: List[int] = Field(default_factory=list)
    parent: Optional[int] = None
    padding: bool = False


class HostStateDocument(BaseModel):
    """Persisted host state so a session can resume."""
    model_config = ConfigDict(extra="forbid")

    forbidden: str
    mode: Literal["cycle", "wheel"]
    backend: Literal["catalog", "adaptive"]
    root: int = 0
    next_vertex: int = 1
    pieces: List[PieceRecord] = Field(default_factory=list)
    virtual_edges: List[List[int]] = Field(default_factory=list)


class EmbeddingCertificateDocument(BaseModel):
    guest: ColoredGraphDocument
    host_truncation: ColoredGraphDocument
    map: Dict[str, int]
    induced: bool = True
    pieces: List[int] = Field(default_factory=list)
    virtual_images: List[List[int]] = Field(default_factory=list)


class HostReportDocument(BaseModel):
    free: bool
    pieces: int
    vertices: int
    checks: Dict[str, bool]
    violations: List[str] = Field(default_factory=list)
    inconclusive: List[str] = Field(default_factory=list)


# Corpus reports
class ReportRecord(BaseModel):
    """One line of a corpus report."""
    suite: str
    property: str
    index: int
    status: Literal["pass", "fail", "inconclusive"]
    detail: Dict[str, Any] = Field(default_factory=dict)


class PropertySummary(BaseModel):
    suite: str
    property: str
    instances: int
    passed: int
    failed: int
    inconclusive: int


class PipelineBundle(BaseModel):
    """Everything one ``pipeline`` run produces."""
    membership: Dict[str, Any]
    decomposition: Optional[TreeDecompositionDocument] = None
    certificate: Optional[EmbeddingCertificateDocument] = None
    host_report: Optional[HostReportDocument] = None
    error: Optional[Dict[str, Any]] = None


