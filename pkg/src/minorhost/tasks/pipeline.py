"""End-to-end run for one guest against one forbidden minor."""
from pathlib import Path
from typing import Any, Optional

import networkx as nx

from minorhost.core.exceptions import MinorhostError
from minorhost.core.logging import get_logger
from minorhost.decomposition.tutte import tutte_decomposition
from minorhost.graphs.families import FamilySpec
from minorhost.graphs.graph import uncolored
from minorhost.minors.engine import model_to_document
from minorhost.schemas.schemas import PipelineBundle
from minorhost.universal.embedding import embed
from minorhost.universal.host import Backend, build_host, find_forbidden_minor, load_host, save_host
from minorhost.universal.verify import verify_host

logger = get_logger(__name__)


def run_pipeline(
    g: nx.Graph,
    forbidden: str,
    state: Optional[str] = None,
    backend: str = Backend.ADAPTIVE.value,
    pad: Optional[int] = None,
    budget: Optional[int] = None,
) -> PipelineBundle:
    """Membership, decomposition, embedding and host verification in one pass.

    This run:
    1. Checks the guest for the forbidden minor (stops with the model if found)
    2. Computes the guest's Tutte decomposition
    3. Embeds the guest into the host at ``state`` (a new host if absent)
    4. Verifies the host, padded to ``pad`` vertices
    5. Saves the host back to ``state``

    The first failing stage stops the run; its diagnostics land in ``error``.
    """
    spec = FamilySpec.parse(forbidden)
    guest = uncolored(g)
    stage = "membership"
    membership: dict[str, Any] = {"forbidden": spec.label}
    try:
        host = load_host(state) if state and Path(state).exists() else build_host(spec, backend)
        model = find_forbidden_minor(host.forbidden, guest, budget)
        membership["in_class"] = model is None
        if model is not None:
            membership["model"] = model_to_document(model, route="search").model_dump()
            logger.info("guest not in class", extra={"forbidden": spec.label})
            return PipelineBundle(membership=membership)

        stage = "decomposition"
        decomposition = tutte_decomposition(guest).to_document()

        stage = "embedding"
        cert = embed(guest, host, budget)

        stage = "verification"
        report = verify_host(host, pad, budget)
        if state:
            save_host(host, state)
    except MinorhostError as e:
        logger.error(f"pipeline stopped at {stage}: {e}", exc_info=True)
        return PipelineBundle(membership=membership, error={"stage": stage, **e.to_dict()})

    return PipelineBundle(
        membership=membership,
        decomposition=decomposition,
        certificate=cert.to_document(),
        host_report=report.to_document(),
    )
