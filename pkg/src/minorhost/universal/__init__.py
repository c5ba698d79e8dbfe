"""Saturation, forbidden-model families and lazily grown universal hosts."""
from minorhost.universal.embedding import EmbeddingCertificate, embed
from minorhost.universal.families import ForbiddenFamily, LocalFamily, path_family
from minorhost.universal.host import (
    Backend,
    HostDescription,
    HostMode,
    build_host,
    load_host,
    materialize,
    save_host,
)
from minorhost.universal.models import (
    check_class_equivalence,
    enumerate_forbidden_models,
    forbidden_family_for,
)
from minorhost.universal.saturation import (
    Catalog,
    CatalogLimits,
    OmegaGraph,
    build_catalog,
    expand,
    minimal_unfold,
    saturate,
)
from minorhost.universal.transform import PinnedTransform, transform_t, transform_t_inv
from minorhost.universal.verify import HostReport, verify_host

__all__ = [
    "Backend",
    "Catalog",
    "CatalogLimits",
    "EmbeddingCertificate",
    "ForbiddenFamily",
    "HostDescription",
    "HostMode",
    "HostReport",
    "LocalFamily",
    "OmegaGraph",
    "PinnedTransform",
    "build_catalog",
    "build_host",
    "check_class_equivalence",
    "embed",
    "enumerate_forbidden_models",
    "expand",
    "forbidden_family_for",
    "load_host",
    "materialize",
    "minimal_unfold",
    "path_family",
    "save_host",
    "saturate",
    "transform_t",
    "transform_t_inv",
    "verify_host",
]
