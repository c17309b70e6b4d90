"""
Pydantic schemas for tracklab file formats and reports.
Defines every JSON shape the library reads or writes.
"""

from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, Field


class TrackKind(str, Enum):
    """Track kinds recognised on the boundary of a tetrahedron."""
    VERTEX_LINK = "vertex-link-3-track"
    QUAD = "quad-4-track"
    OCTAGON = "octagon-8-track"
    OTHER = "other"


class PatternKind(str, Enum):
    """Normality class of a pattern on the boundary of a tetrahedron."""
    NORMAL = "normal"
    ALMOST_NORMAL = "almost-normal"
    OTHER = "other"


class SurgeryCase(str, Enum):
    """How many merged chords a surgery leaves returning (0, 1 or 2)."""
    A = "a"
    B = "b"
    C = "c"


# File formats

class TriangulationFile(BaseModel):
    """On-disk triangulation: {"vertices": n, "faces": [[a,b,c], ...]}."""
    vertices: int = Field(..., ge=0, description="Vertex count")
    faces: List[List[int]] = Field(..., description="Vertex triples")


class PatternFile(BaseModel):
    """On-disk pattern: {"weights": {"u-v": w}}; omitted edges weigh 0."""
    weights: Dict[str, int] = Field(default_factory=dict, description="Edge label to weight")


class CrossingRef(BaseModel):
    """One crossing: edge label and position counted from the smaller vertex."""
    edge: str
    pos: int = Field(..., ge=0)


class CurveSystemFile(BaseModel):
    """On-disk curve system; each curve is a cyclic crossing sequence."""
    triangulation: Optional[TriangulationFile] = Field(None, description="Embedded triangulation")
    curves: List[List[CrossingRef]] = Field(default_factory=list)


# Reports

class FaceViolation(BaseModel):
    """One face failing the matching conditions."""
    face: int
    vertices: List[int]
    weights: List[int] = Field(..., description="Weights of edges AB, BC, AC")
    reasons: List[str]


class ValidationReport(BaseModel):
    """Result of checking a weight vector against the matching conditions."""
    valid: bool
    violations: List[FaceViolation] = Field(default_factory=list)
    problems: List[str] = Field(default_factory=list, description="Non-face problems")


class RewriteReport(BaseModel):
    """Outcome of a normalization run."""
    steps: int = 0
    crossings_removed: int = 0
    annihilated_curves: int = 0
    final_normal: bool = True


class TrackClassification(BaseModel):
    """Crossing count of a track, plus its kind on a tetrahedron boundary."""
    n: int
    kind: Optional[TrackKind] = None


class TrackSummary(BaseModel):
    """One extracted track as emitted by the CLI."""
    n: int
    kind: Optional[TrackKind] = None
    weights: Dict[str, int]


class RegionProfile(BaseModel):
    """Degree, interior vertex count and Euler characteristic of a closed region."""
    region: int
    degree: int
    interior_vertices: int
    euler_char: int
    vertices: List[int] = Field(default_factory=list)


class TheoremReport(BaseModel):
    """Checks (a)-(e) of the degree/region/counting theorem, with witnesses."""
    passed: bool
    v: int
    e: int
    f: int
    v_p: int
    e_p: int
    degree_one: int
    degree_three: int
    degrees: List[int]
    failures: List[str] = Field(default_factory=list)
    witness_regions: List[int] = Field(default_factory=list)
    profiles: List[RegionProfile] = Field(default_factory=list)


class EdgePathReport(BaseModel):
    """Walk in D_P traced by one edge of the triangulation."""
    edge: str
    regions: List[int]
    tracks: List[int]
    backtracks: List[int] = Field(default_factory=list, description="Indices into regions")
    endpoint_degrees: List[int]


class SurgeryStep(BaseModel):
    """One builder extension: where the surgery happened and what it added."""
    region: int
    edge: str
    positions: List[int]
    same_track: bool
    added: List[Dict[str, int]]


class MaximalReport(BaseModel):
    """Output of the maximal subcommand."""
    tracks: List[Dict[str, int]]
    e_P: int
    v: int
    f: int
    trace: List[SurgeryStep] = Field(default_factory=list)
    theorem: Optional[TheoremReport] = None


class TrialRecord(BaseModel):
    """One corpus trial."""
    index: int
    seed: int
    v: int
    e: int
    f: int
    e_P: int
    passed: bool
    builder_steps: int
    failures: List[str] = Field(default_factory=list)
    wall_time: float = Field(0.0, description="Seconds; excluded from reproducibility checks")


class CorpusReport(BaseModel):
    """Aggregate of a corpus run; trials ordered by index."""
    master_seed: int
    trials: List[TrialRecord] = Field(default_factory=list)
    total: int = 0
    passed: int = 0
    failed: int = 0
    count_law_holds: int = Field(0, description="Trials with e_P = 2v - 3")
