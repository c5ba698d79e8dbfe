"""Extraction certificates for unavoidable minors."""
from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict

from minorhost.graphs.families import FamilySpec
from minorhost.minors.engine import MinorModel, ModelVerification, Subdivision, model_to_document, verify_model
from minorhost.schemas.schemas import ExtractionCertificateDocument


class Route(str, Enum):
    """Which branch of a construction produced the certificate."""

    DISJOINT_CYCLES = "disjoint-cycles"
    SHARED_VERTEX = "shared-vertex"
    D1_PATH_IN_D2 = "d1-path-in-d2"
    DIRECT_SUBDIVISION = "direct-subdivision"
    HUB_AND_RIM = "hub-and-rim"
    SEARCH = "search"
    RIM_CONTRACTION = "rim-contraction"


class ExtractionCertificate(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    target: FamilySpec
    model: MinorModel
    route: Route
    subdivision: Optional[Subdivision] = None

    def verify(self) -> ModelVerification:
        report = verify_model(self.model)
        violations = list(report.violations)
        if self.subdivision is not None:
            violations += self.subdivision.verify().violations
        return ModelVerification(valid=not violations, violations=violations)

    def to_document(self, host_ref: Optional[str] = None) -> ExtractionCertificateDocument:
        return ExtractionCertificateDocument(
            target=self.target.label,
            route=self.route.value,
            model=model_to_document(self.model, host_ref=host_ref, route=self.route.value),
            subdivision=self.subdivision.to_document() if self.subdivision is not None else None,
        )
