"""Seeded property suites.

Each suite:
- Builds its instances from the run seed (instance ``i`` of suite ``s`` is
  independent of every other instance)
- Runs the operation under test
- Re-checks the result with an independent oracle
- Emits one ``ReportRecord`` per (property, instance)

Instances run in a process pool when ``workers > 1``; records are ordered
by suite then instance index, never by completion time.
"""
import random
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Literal

import networkx as nx
from pydantic import BaseModel, Field

from minorhost.core.config import RunConfig
from minorhost.core.exceptions import BudgetExhausted, CounterexampleCandidate, MinorhostError
from minorhost.core.logging import get_logger
from minorhost.decomposition.longpath import ell, lift_long_path
from minorhost.decomposition.minor_part import locate_minor_part
from minorhost.decomposition.tutte import torso_model_sets, tutte_decomposition, verify_tutte
from minorhost.decomposition.tree import torso
from minorhost.graphs.formats import graph_to_document
from minorhost.graphs.graph import induced, uncolored
from minorhost.graphs.search import find_induced_embedding, is_k4_minor_free, is_k_connected, longest_path
from minorhost.minors.bruteforce import has_minor_brute_force
from minorhost.minors.engine import MinorModel, build_model, circumference_at_least, find_minor_model, verify_model
from minorhost.schemas.schemas import PropertySummary, ReportRecord
from minorhost.tasks import generators as gen
from minorhost.unavoidable.cycles import find_cycle_pair_minor, find_long_cycle
from minorhost.unavoidable.wheels import check_reduction_facts, find_wheel_minor
from minorhost.universal.embedding import EmbeddingCertificate, embed
from minorhost.universal.families import ForbiddenFamily, path_family
from minorhost.universal.host import build_host, materialize
from minorhost.universal.models import check_class_equivalence, enumerate_forbidden_models
from minorhost.universal.saturation import expand, minimal_unfold, saturate
from minorhost.universal.transform import PinnedTransform, transform_t, transform_t_inv
from minorhost.universal.verify import verify_host

logger = get_logger(__name__)

Status = Literal["pass", "fail", "inconclusive"]
Outcome = tuple[str, Status, dict[str, Any]]
InstanceFn = Callable[[int, random.Random, bool], list[Outcome]]


def _outcome(prop: str, ok: bool, **detail: Any) -> Outcome:
    return (prop, "pass" if ok else "fail", detail)


def _broken(model: MinorModel) -> MinorModel:
    """Same model with its first branch set emptied."""
    first = min(model.branch_sets)
    return model.model_copy(update={"branch_sets": {**model.branch_sets, first: frozenset()}})


def _is_tree_path(tree: nx.Graph, walk: list[int]) -> bool:
    return len(set(walk)) == len(walk) and all(tree.has_edge(a, b) for a, b in zip(walk, walk[1:]))


def _is_cycle(g: nx.Graph, cycle: list[int]) -> bool:
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        return False
    return all(g.has_edge(a, b) for a, b in zip(cycle, [*cycle[1:], cycle[0]]))


# ell


def _ell(index: int, rng: random.Random, mutant: bool) -> list[Outcome]:
    base = [w for w in range(1, 11) if ell(w, 1) != 1]
    values = {"ell(2,2)": ell(2, 2), "ell(3,3)": ell(3, 3) + (1 if mutant else 0)}
    return [
        _outcome("base-case", not base, failing=base),
        _outcome("recurrence-values", values == {"ell(2,2)": 7, "ell(3,3)": 46}, values=values),
    ]


# long paths lifted through decompositions


def _longpath_suite(index: int, rng: random.Random, mutant: bool) -> list[Outcome]:
    w = (2, 3)[index % 2]
    k = (2, 3)[(index // 2) % 2]
    g, td, supplied = gen.banded_instance(rng, w, ell(w, k), pendants=rng.randrange(4))
    result = lift_long_path(g, td, k, w=w, path=supplied)
    walk = result.tree_path[:1] if mutant else result.tree_path
    return [
        _outcome("is-tree-path", _is_tree_path(td.tree, walk), walk=walk),
        _outcome("length-at-least-k", len(walk) - 1 >= k, length=len(walk) - 1, k=k, w=w),
    ]


# minor parts located in a single bag


def _minor_part_suite(index: int, rng: random.Random, mutant: bool) -> list[Outcome]:
    label, adhesion = ("C4", 1) if index % 2 == 0 else ("W3", 2)
    pattern = gen.named(label)
    g, td = gen.glued_instance(rng, pattern, adhesion, pieces=rng.randrange(2, 6))
    model = find_minor_model(pattern, g)
    if model is None:
        return [_outcome("planted-model-found", False, pattern=label)]
    part = locate_minor_part(g, td, pattern, model)
    node = (part.node + 1) % td.tree.number_of_nodes() if mutant else part.node
    bag = induced(g, td.bags[node])
    return [
        _outcome("restricted-model-verifies", bool(verify_model(part.model)), pattern=label),
        _outcome("bag-has-minor", has_minor_brute_force(pattern, bag), pattern=label, node=node),
    ]


# minor-oracle

_ORACLE_PATTERNS = ("C3", "C4", "W3")


def _minor_oracle(index: int, rng: random.Random, mutant: bool) -> list[Outcome]:
    g = gen.random_graph(rng, rng.randint(1, 8))
    patterns = {label: gen.named(label) for label in _ORACLE_PATTERNS}
    patterns["K4"] = nx.complete_graph(4)
    out: list[Outcome] = []
    for label, pattern in patterns.items():
        model = find_minor_model(pattern, g)
        found = (model is None) if mutant else (model is not None)
        expected = has_minor_brute_force(pattern, g)
        out.append(
            _outcome(
                f"agrees-{label}",
                found == expected,
                search=found,
                brute_force=expected,
                graph=graph_to_document(g).model_dump(),
            )
        )
        if model is not None:
            out.append(_outcome(f"model-verifies-{label}", bool(verify_model(model))))
    return out


# long cycles


def _long_cycle_suite(index: int, rng: random.Random, mutant: bool) -> list[Outcome]:
    n = 3 + index % 2
    g = gen.two_connected_with_path(rng, n * n, ears=rng.randrange(5))
    cycle = find_long_cycle(g, n)
    if mutant:
        cycle = cycle[: n - 1]
    return [_outcome("long-cycle", _is_cycle(g, cycle) and len(cycle) >= n, cycle=cycle, n=n)]


# C_{n,m} in 2-connected graphs

_TWO_CON = [
    *(gen.named(f"W{k}") for k in range(6, 10)),
    *(gen.named(f"O{k}") for k in range(6, 10)),
    *(gen.long_and_short_cycle(a) for a in ("chord", "disjoint", "shared-vertex")),
]


def _two_connected_suite(index: int, rng: random.Random, mutant: bool) -> list[Outcome]:
    cert = find_cycle_pair_minor(_TWO_CON[index], 3, 3)
    check = verify_model(_broken(cert.model)) if mutant else cert.verify()
    return [_outcome("certificate-verifies", bool(check), route=cert.route.value, violations=check.violations)]


# reduction-facts


def _reduction_facts(index: int, rng: random.Random, mutant: bool) -> list[Outcome]:
    k = 3 + index
    facts = check_reduction_facts(k)
    out: list[Outcome] = []
    for name, fact in sorted(facts.facts.items()):
        if fact.status == "inconclusive":
            out.append((name, "inconclusive", {"k": k, "deleted": fact.deleted}))
            continue
        out.append(_outcome(name, fact.status == "true", k=k, deleted=fact.deleted))
        witnesses = [(_broken(m) if mutant else m) for m in fact.witnesses.values()]
        ok = all(verify_model(m) for m in witnesses)
        out.append(_outcome(f"{name}-witnesses", ok, k=k))
    return out


# tutte

_TUTTE_RANDOM = 100


def _tutte_graphs() -> list[nx.Graph]:
    return [g for g in gen.atlas(7) if g.number_of_nodes() >= 3 and nx.is_biconnected(g)]


def _tutte(index: int, rng: random.Random, mutant: bool) -> list[Outcome]:
    exhaustive = _tutte_graphs()
    if index < len(exhaustive):
        g = exhaustive[index]
    else:
        g = gen.random_graph(rng, rng.randint(1, 9))
    decomposition = tutte_decomposition(g)
    target = g
    if mutant:
        target = nx.Graph(g)
        target.add_node(max(g.nodes) + 1)
    report = verify_tutte(target, decomposition)
    out = [_outcome("decomposition-valid", report.valid, violations=report.violations)]
    bad = []
    for t in sorted(decomposition.bags):
        h = uncolored(torso(g, decomposition.decomposition, t))
        model = build_model(h, g, torso_model_sets(decomposition, t))
        if not verify_model(model):
            bad.append(t)
    out.append(_outcome("torsos-are-minors", not bad, torsos=bad))
    return out


# corollary-equivalence


def _corollary_equivalence(index: int, rng: random.Random, mutant: bool) -> list[Outcome]:
    g = gen.atlas(7)[index]
    out: list[Outcome] = []
    for label in ("C3", "C4"):
        x = gen.named(label)
        for n in (3, 4):
            prop = f"{label}-P{n}"
            if mutant:
                family = ForbiddenFamily(members=enumerate_forbidden_models(x, n), all_colorings=True)
                result = check_class_equivalence(g, x, n)
                same = result.minor_free == family.is_free(g)
                out.append(_outcome(prop, same, graph=graph_to_document(g).model_dump()))
                continue
            result = check_class_equivalence(g, x, n)
            if result.equal is None:
                out.append((prop, "inconclusive", {}))
            else:
                out.append(
                    _outcome(
                        prop,
                        result.equal,
                        minor_free=result.minor_free,
                        subgraph_free=result.subgraph_free,
                        graph=graph_to_document(g).model_dump(),
                    )
                )
    return out


# saturation

_SATURATION_GUESTS = 30
_ROUNDTRIPS = 200


def _saturation(index: int, rng: random.Random, mutant: bool) -> list[Outcome]:
    c, d = rng.randint(1, 2), rng.randint(1, 2)
    if index >= _SATURATION_GUESTS:
        h = gen.random_colored_graph(rng, rng.randint(3, 8), c, d, p=0.5)
        pt = PinnedTransform.from_path(h, longest_path(uncolored(h)))
        image = transform_t(h, pt)
        if mutant and image.number_of_nodes():
            image = nx.Graph(image)
            v = min(image.nodes)
            image.nodes[v]["color"] = (image.nodes[v].get("color", 0) + 1) % pt.d_prime
        back = transform_t_inv(image, pt)
        return [_outcome("roundtrip", graph_to_document(back) == graph_to_document(h), pin=list(pt.path))]

    if rng.random() < 0.2:
        g = gen.random_colored_graph(rng, 3, c, d, p=1.0)
    else:
        g = gen.random_colored_star(rng, rng.randint(0, 11), c, d)
    family = path_family(3, c, d)
    omega = saturate(g, family, 3)
    check = path_family(2, c, d) if mutant else family
    out = [
        _outcome(f"expansion-free-{u}", check.is_free(expand(omega, u)), unfold=u) for u in (1, 2, 3)
    ]
    window = expand(omega, max(3, minimal_unfold(omega)))
    out.append(_outcome("guest-embeds", find_induced_embedding(g, window) is not None))
    return out


# cycle-host / wheel-host


def _replay(certs: list[EmbeddingCertificate], truncation: nx.Graph, mutant: bool) -> list[Outcome]:
    out = []
    for i, cert in enumerate(certs):
        if mutant and i == 0 and len(cert.map) > 1:
            first, last = min(cert.map), max(cert.map)
            cert = cert.model_copy(update={"map": {**cert.map, last: cert.map[first]}})
        out.append(_outcome(f"certificate-{i}", cert.verify(truncation), vertices=len(cert.map)))
    return out


def _cycle_host(index: int, rng: random.Random, mutant: bool) -> list[Outcome]:
    if index == 0:
        host = build_host("C3")
        guests = [gen.random_tree(rng, rng.randint(1, 40)) for _ in range(50)]
    else:
        host = build_host("C4")
        guests = [gen.random_small_blocks(rng, rng.randint(1, 30)) for _ in range(50)]
    certs = [embed(g, host) for g in guests]
    padded = materialize(host, 500)
    if index == 0:
        shape = _outcome("truncation-is-forest", nx.is_forest(padded), vertices=padded.number_of_nodes())
    else:
        long_cycle = circumference_at_least(padded, 4)
        shape = _outcome("truncation-circumference-below-4", long_cycle is None, cycle=long_cycle)
    report = verify_host(host, 500)
    return [
        *_replay(certs, materialize(host), mutant),
        shape,
        _outcome("host-verifies", report.free, violations=report.violations, inconclusive=report.inconclusive),
    ]


def _wheel_host(index: int, rng: random.Random, mutant: bool) -> list[Outcome]:
    host = build_host("W3")
    guests = [gen.random_series_parallel(rng, rng.randint(2, 20)) for _ in range(50)]
    certs = [embed(g, host) for g in guests]
    padded = materialize(host, 2000)
    report = verify_host(host, 2000)
    images = {e for cert in certs for e in cert.virtual_images}
    return [
        *_replay(certs, materialize(host), mutant),
        _outcome("truncation-series-parallel", is_k4_minor_free(padded), vertices=padded.number_of_nodes()),
        *(_outcome(f"host-{name}", ok, violations=report.violations) for name, ok in sorted(report.checks.items())),
        _outcome("virtual-edges-accounted", images == set(host.virtual_edges())),
    ]


# wheel-extraction

_WHEEL_NAMED = ("D5", "O5", "M5", "K4,4", "R2:6")


def _three_connected() -> list[nx.Graph]:
    return [g for g in gen.atlas(7) if g.number_of_nodes() >= 4 and is_k_connected(g, 3)]


def _wheel_extraction(index: int, rng: random.Random, mutant: bool) -> list[Outcome]:
    if index < len(_WHEEL_NAMED):
        label, g, k = _WHEEL_NAMED[index], gen.named(_WHEEL_NAMED[index]), 4
    else:
        g, k = _three_connected()[index - len(_WHEEL_NAMED)], 3
        label = f"atlas-{index - len(_WHEEL_NAMED)}"
    cert = find_wheel_minor(g, k)
    if cert is None:
        return [_outcome(f"W{k}-found", False, graph=label)]
    check = verify_model(_broken(cert.model)) if mutant else cert.verify()
    return [_outcome(f"W{k}-certificate", bool(check), graph=label, violations=check.violations)]


class Suite(BaseModel):
    name: str
    count: Callable[[], int]
    run: InstanceFn


SUITES: dict[str, Suite] = {
    s.name: s
    for s in [
        Suite(name="ell", count=lambda: 1, run=_ell),
        Suite(name="lemma-longpath", count=lambda: 200, run=_longpath_suite),
        Suite(name="lemma-minor-part", count=lambda: 100, run=_minor_part_suite),
        Suite(name="minor-oracle", count=lambda: 300, run=_minor_oracle),
        Suite(name="lemma-cycle", count=lambda: 100, run=_long_cycle_suite),
        Suite(name="lemma-2con", count=lambda: len(_TWO_CON), run=_two_connected_suite),
        Suite(name="reduction-facts", count=lambda: 3, run=_reduction_facts),
        Suite(name="tutte", count=lambda: len(_tutte_graphs()) + _TUTTE_RANDOM, run=_tutte),
        Suite(name="corollary-equivalence", count=lambda: len(gen.atlas(7)), run=_corollary_equivalence),
        Suite(name="saturation", count=lambda: _SATURATION_GUESTS + _ROUNDTRIPS, run=_saturation),
        Suite(name="cycle-host", count=lambda: 2, run=_cycle_host),
        Suite(name="wheel-host", count=lambda: 1, run=_wheel_host),
        Suite(
            name="wheel-extraction",
            count=lambda: len(_WHEEL_NAMED) + len(_three_connected()),
            run=_wheel_extraction,
        ),
    ]
}


def run_instance(job: tuple[str, int, int, bool]) -> list[dict[str, Any]]:
    """Run one instance; errors become records, never escape."""
    name, index, seed, mutant = job
    rng = gen.instance_rng(seed, name, index)
    try:
        outcomes = SUITES[name].run(index, rng, mutant)
    except BudgetExhausted as e:
        outcomes = [("budget", "inconclusive", {"operation": e.operation, "nodes": e.nodes, "budget": e.budget})]
    except CounterexampleCandidate as e:
        logger.error(f"counterexample candidate in {name}[{index}]: {e}")
        outcomes = [("counterexample", "fail", {"error": str(e), "report": e.report})]
    except MinorhostError as e:
        logger.error(f"{name}[{index}] failed: {e}")
        outcomes = [("error", "fail", e.to_dict())]
    except Exception as e:
        logger.error(f"{name}[{index}] crashed: {e}", exc_info=True)
        outcomes = [("error", "fail", {"success": False, "kind": "error", "error": str(e), "type": type(e).__name__})]
    return [
        ReportRecord(suite=name, property=prop, index=index, status=status, detail=detail).model_dump()
        for prop, status, detail in outcomes
    ]


def _configure(overrides: dict[str, Any]) -> None:
    RunConfig(**overrides).apply()


class CorpusReport(BaseModel):
    records: list[ReportRecord] = Field(default_factory=list)
    summaries: list[PropertySummary] = Field(default_factory=list)

    @property
    def failed(self) -> int:
        return sum(s.failed for s in self.summaries)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_jsonl(self) -> str:
        return "".join(r.model_dump_json() + "\n" for r in self.records)


def summarize(records: list[ReportRecord]) -> list[PropertySummary]:
    counts: dict[tuple[str, str], dict[str, int]] = {}
    for r in records:
        entry = counts.setdefault((r.suite, r.property), {"pass": 0, "fail": 0, "inconclusive": 0})
        entry[r.status] += 1
    return [
        PropertySummary(
            suite=suite,
            property=prop,
            instances=sum(c.values()),
            passed=c["pass"],
            failed=c["fail"],
            inconclusive=c["inconclusive"],
        )
        for (suite, prop), c in counts.items()
    ]


def run_corpus(config: RunConfig, suite: str = "all") -> CorpusReport:
    """Run one suite (or ``all``) and collect ordered records plus per-property totals."""
    names = list(SUITES) if suite == "all" else [suite]
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite {unknown[0]!r}; choose from {', '.join(['all', *SUITES])}")

    jobs = [(name, i, config.seed, config.inject_mutant) for name in names for i in range(SUITES[name].count())]
    logger.info("corpus started", extra={"suites": names, "instances": len(jobs), "workers": config.workers})

    if config.workers > 1:
        with ProcessPoolExecutor(
            max_workers=config.workers, initializer=_configure, initargs=(config.model_dump(),)
        ) as pool:
            batches = list(pool.map(run_instance, jobs, chunksize=4))
    else:
        config.apply()
        batches = [run_instance(job) for job in jobs]

    records = [ReportRecord(**r) for batch in batches for r in batch]
    report = CorpusReport(records=records, summaries=summarize(records))
    logger.info("corpus finished", extra={"records": len(records), "failed": report.failed})
    return report
