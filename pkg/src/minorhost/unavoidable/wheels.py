"""Wheel minors: hub-and-rim search, reduction facts, the f bound, R_2 truncations."""
from typing import Callable, Literal, Mapping, Optional, Union

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field

from minorhost.core.config import settings
from minorhost.core.exceptions import BudgetExhausted, PreconditionError
from minorhost.core.logging import get_logger
from minorhost.decomposition.longpath import ell
from minorhost.graphs.canonical import vertex_orbits
from minorhost.graphs.families import FamilySpec, generate
from minorhost.graphs.graph import induced
from minorhost.graphs.search import vertex_connectivity
from minorhost.minors.engine import MinorModel, build_model, connected_sets, find_minor_model
from minorhost.unavoidable.certificates import ExtractionCertificate, Route

logger = get_logger(__name__)

IntMap = Union[Mapping[int, int], Callable[[int], int]]


class _Budget:
    def __init__(self, operation: str, budget: int):
        self.operation = operation
        self.budget = budget
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExhausted(self.operation, self.nodes, self.budget)


def _rim_cycle(g: nx.Graph, hub: frozenset[int], k: int, meter: _Budget) -> Optional[list[int]]:
    """A cycle of ``g - hub`` through at least ``k`` neighbors of the hub."""
    rest = [v for v in sorted(g.nodes) if v not in hub]
    targets = {w for v in hub for w in g[v]} - hub
    if len(targets) < k:
        return None

    def extend(path: list[int], on_path: set[int], hits: int, start: int) -> Optional[list[int]]:
        meter.tick()
        last = path[-1]
        if hits >= k and len(path) >= 3 and g.has_edge(last, start):
            return list(path)
        for w in sorted(g[last]):
            if w in hub or w in on_path or w in done:
                continue
            path.append(w)
            on_path.add(w)
            found = extend(path, on_path, hits + (w in targets), start)
            if found:
                return found
            path.pop()
            on_path.discard(w)
        return None

    # every cycle through an earlier start was already explored from it
    done: set[int] = set()
    for s in rest:
        if s not in targets:
            continue
        found = extend([s], {s}, 1, s)
        if found:
            return found
        done.add(s)
    return None


def _wheel_model(g: nx.Graph, k: int, hub: frozenset[int], cycle: list[int]) -> MinorModel:
    targets = {w for v in hub for w in g[v]}
    starts = [i for i, x in enumerate(cycle) if x in targets][:k]
    rim: dict[int, set[int]] = {}
    for pos, i in enumerate(starts):
        end = starts[pos + 1] if pos + 1 < k else len(cycle)
        rim[pos + 1] = set(cycle[i:end])
    rim[1] |= set(cycle[: starts[0]])
    return build_model(generate(FamilySpec.of("W", k)), g, {0: set(hub), **rim})


def hub_and_rim(g: nx.Graph, k: int, max_hub: int = 2, budget: Optional[int] = None) -> Optional[MinorModel]:
    """Try small connected hubs and look for a rim cycle around each."""
    meter = _Budget("hub_and_rim", settings.search_budget if budget is None else budget)
    adj = {v: set(g[v]) for v in g.nodes}
    for size in range(1, max_hub + 1):
        allowed = set(g.nodes)
        for root in sorted(g.nodes, key=lambda v: (-g.degree(v), v)):
            for hub in connected_sets(adj, root, allowed, size):
                if len(hub) != size:
                    continue
                meter.tick()
                cycle = _rim_cycle(g, hub, k, meter)
                if cycle:
                    return _wheel_model(g, k, hub, cycle)
            allowed.discard(root)
    return None


def find_wheel_minor(g: nx.Graph, k: int, budget: Optional[int] = None) -> Optional[ExtractionCertificate]:
    """Certified W_k minor of a 3-connected graph, or ``None`` if there is none."""
    if k < 3:
        raise PreconditionError("wheels need k >= 3", {"k": k})
    if g.number_of_nodes() < 4 or vertex_connectivity(g) < 3:
        raise PreconditionError("graph must be 3-connected", {"connectivity": vertex_connectivity(g)})
    return _find_wheel(g, k, budget)


def _find_wheel(g: nx.Graph, k: int, budget: Optional[int]) -> Optional[ExtractionCertificate]:
    target = FamilySpec.of("W", k)
    if g.number_of_nodes() < k + 1:
        return None
    model = hub_and_rim(g, k, budget=budget)
    route = Route.HUB_AND_RIM
    if model is None:
        model = find_minor_model(generate(target), g, budget)
        route = Route.SEARCH
    if model is None:
        return None
    return ExtractionCertificate(target=target, model=model, route=route)


def contract_rim(model: MinorModel) -> MinorModel:
    """From a W_k model get a W_{k-1} model by merging the last two rim sets."""
    k = model.pattern.number_of_nodes() - 1
    if k < 4:
        raise PreconditionError("cannot contract the rim of W_3", {"k": k})
    sets = {v: set(s) for v, s in model.branch_sets.items() if v < k}
    sets[k - 1] |= set(model.branch_sets[k])
    return build_model(generate(FamilySpec.of("W", k - 1)), model.host, sets)


class FactResult(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    status: Literal["true", "false", "inconclusive"]
    host: str
    pattern: str
    deleted: dict[int, Literal["true", "false", "inconclusive"]] = Field(default_factory=dict)
    witnesses: dict[int, MinorModel] = Field(default_factory=dict)


class ReductionFacts(BaseModel):
    k: int
    facts: dict[str, FactResult]

    @property
    def all_true(self) -> bool:
        return all(f.status == "true" for f in self.facts.values())


def check_reduction_facts(k: int, budget: Optional[int] = None) -> ReductionFacts:
    """W_k in D_{k+1} - v, O_{k+1} - v, M_{k+1} - v and K_{3,k} in K_{4,k+1} - v, for every v.

    One deleted vertex per symmetry class is tried.
    """
    if k < 3:
        raise PreconditionError("wheels need k >= 3", {"k": k})
    wheel = FamilySpec.of("W", k)
    cases = {
        "double_wheel": (FamilySpec.of("D", k + 1), wheel),
        "circular_ladder": (FamilySpec.of("O", k + 1), wheel),
        "moebius_ladder": (FamilySpec.of("M", k + 1), wheel),
        "complete_bipartite": (FamilySpec.of("K", 4, k + 1), FamilySpec.of("K", 3, k)),
    }
    facts: dict[str, FactResult] = {}
    for name, (host_spec, pattern_spec) in cases.items():
        host = generate(host_spec)
        pattern = generate(pattern_spec)
        deleted: dict[int, Literal["true", "false", "inconclusive"]] = {}
        witnesses: dict[int, MinorModel] = {}
        for orbit in vertex_orbits(host):
            v = orbit[0]
            smaller = induced(host, set(host.nodes) - {v})
            try:
                model = None
                if pattern_spec.family == wheel.family:
                    model = hub_and_rim(smaller, k, budget=budget)
                if model is None:
                    model = find_minor_model(pattern, smaller, budget)
            except BudgetExhausted as e:
                logger.warning(f"reduction fact inconclusive: {e}", extra={"fact": name, "deleted": v})
                deleted[v] = "inconclusive"
                continue
            deleted[v] = "true" if model is not None else "false"
            if model is not None:
                witnesses[v] = model
        if "false" in deleted.values():
            status: Literal["true", "false", "inconclusive"] = "false"
        elif "inconclusive" in deleted.values():
            status = "inconclusive"
        else:
            status = "true"
        facts[name] = FactResult(
            status=status, host=host_spec.label, pattern=pattern_spec.label, deleted=deleted, witnesses=witnesses
        )
    return ReductionFacts(k=k, facts=facts)


def _lookup(fn: Optional[IntMap], key: int, name: str, fallback: Mapping[int, int]) -> int:
    source = fn if fn is not None else fallback
    try:
        value = source(key) if callable(source) else source[key]
    except KeyError as e:
        raise PreconditionError(f"missing constant {name}({key})", {"constant": name, "argument": key}) from e
    return int(value)


def f_bound(k: int, w_fn: Optional[IntMap] = None, p_fn: Optional[IntMap] = None) -> int:
    """f(k) = ell_{w(k+1)}(p(k+1)) from caller-supplied constants."""
    w = _lookup(w_fn, k + 1, "w", settings.wheel_width_constants)
    p = _lookup(p_fn, k + 1, "p", settings.wheel_path_constants)
    return ell(w, p)


def wheel_in_r2_truncation(k: int, m: int, budget: Optional[int] = None) -> ExtractionCertificate:
    """Certify W_k in the R_2 truncation with ``m`` ray vertices."""
    if k < 3:
        raise PreconditionError("wheels need k >= 3", {"k": k})
    host = generate(FamilySpec.of("R2", m))
    cert = _find_wheel(host, k, budget)
    if cert is not None:
        return cert
    smallest = None
    for bigger in range(m + 1, k + 4):
        if _find_wheel(generate(FamilySpec.of("R2", bigger)), k, budget) is not None:
            smallest = bigger
            break
    raise PreconditionError(
        "truncation too short for the wheel", {"k": k, "m": m, "smallest_sufficient_m": smallest}
    )
