"""Tree-decompositions: value type, axiom checks, torsos."""
from itertools import combinations
from typing import Any

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field

from minorhost.graphs.graph import edge_key, make_graph
from minorhost.schemas.schemas import DecompositionReportDocument, TreeDecompositionDocument, TreeDocument


class TreeDecomposition(BaseModel):
    """A tree with one bag of graph vertices per tree node."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    tree: Any
    bags: dict[int, frozenset[int]]

    @classmethod
    def from_bags(cls, bags: dict[int, set[int]] | list[set[int]], tree_edges: list[tuple[int, int]]) -> "TreeDecomposition":
        items = dict(enumerate(bags)) if isinstance(bags, list) else dict(bags)
        tree = make_graph(items, tree_edges)
        return cls(tree=tree, bags={t: frozenset(b) for t, b in items.items()})

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags.values()), default=0) - 1

    def adhesion_set(self, t: int, u: int) -> frozenset[int]:
        return self.bags[t] & self.bags[u]

    @property
    def adhesion(self) -> int:
        return max((len(self.adhesion_set(t, u)) for t, u in self.tree.edges), default=0)

    def side(self, t: int, u: int) -> set[int]:
        """Tree nodes of the component of ``tree - tu`` containing ``u``."""
        pruned = nx.Graph(self.tree)
        pruned.remove_edge(t, u)
        return nx.node_connected_component(pruned, u)

    def union_of(self, nodes: set[int]) -> set[int]:
        out: set[int] = set()
        for t in nodes:
            out |= self.bags[t]
        return out

    def to_document(self) -> TreeDecompositionDocument:
        return TreeDecompositionDocument(
            tree=TreeDocument(
                nodes=sorted(self.tree.nodes),
                edges=sorted([list(edge_key(t, u)) for t, u in self.tree.edges]),
            ),
            bags={str(t): sorted(b) for t, b in sorted(self.bags.items())},
        )

    @classmethod
    def from_document(cls, doc: TreeDecompositionDocument) -> "TreeDecomposition":
        bags = {int(t): set(b) for t, b in doc.bags.items()}
        for t in doc.tree.nodes:
            bags.setdefault(t, set())
        return cls.from_bags(bags, [(t, u) for t, u in doc.tree.edges])


class DecompositionReport(BaseModel):
    valid: bool
    width: int
    adhesion: int
    adhesion_sets_complete_in_g: bool
    violations: list[str] = Field(default_factory=list)
    witnesses: list[tuple[int, int, int, int]] = Field(
        default_factory=list, description="(vertex, x, y, z): vertex in bags x and z but not y"
    )

    def __bool__(self) -> bool:
        return self.valid

    def to_document(self) -> DecompositionReportDocument:
        return DecompositionReportDocument(
            valid=self.valid,
            width=self.width,
            adhesion=self.adhesion,
            adhesion_sets_complete_in_g=self.adhesion_sets_complete_in_g,
            violations=self.violations,
        )


def verify_decomposition(g: nx.Graph, td: TreeDecomposition) -> DecompositionReport:
    """Check both tree-decomposition axioms exactly."""
    violations: list[str] = []
    witnesses: list[tuple[int, int, int, int]] = []
    tree = td.tree

    if tree.number_of_nodes() == 0 or not nx.is_tree(tree):
        violations.append("decomposition tree is not a tree")
    if set(td.bags) != set(tree.nodes):
        violations.append("bags do not match tree nodes")
    stray = sorted(td.union_of(set(td.bags)) - set(g.nodes))
    if stray:
        violations.append(f"bags contain non-vertices {stray}")

    covered = td.union_of(set(td.bags))
    for v in sorted(set(g.nodes) - covered):
        violations.append(f"vertex {v} is in no bag")
    for u, v in sorted(edge_key(*e) for e in g.edges):
        if not any(u in b and v in b for b in td.bags.values()):
            violations.append(f"edge {u}-{v} is in no bag")

    if not violations:
        for v in sorted(g.nodes):
            holders = [t for t, b in td.bags.items() if v in b]
            pieces = [sorted(c) for c in nx.connected_components(tree.subgraph(holders))]
            if len(pieces) > 1:
                x, z = pieces[0][0], pieces[1][0]
                path = nx.shortest_path(tree, x, z)
                y = next(t for t in path if v not in td.bags[t])
                violations.append(f"connectivity: vertex {v} is in bags {x} and {z} but not {y}")
                witnesses.append((v, x, y, z))

    complete = all(
        g.has_edge(a, b) for t, u in tree.edges for a, b in combinations(sorted(td.adhesion_set(t, u)), 2)
    )
    return DecompositionReport(
        valid=not violations,
        width=td.width,
        adhesion=td.adhesion,
        adhesion_sets_complete_in_g=complete,
        violations=violations,
        witnesses=witnesses,
    )


def torso(g: nx.Graph, td: TreeDecomposition, t: int) -> nx.Graph:
    """Induced bag graph plus a clique on every adhesion set at ``t``."""
    h = nx.Graph(g.subgraph(td.bags[t]))
    for u in td.tree[t]:
        for a, b in combinations(sorted(td.adhesion_set(t, u)), 2):
            if not h.has_edge(a, b):
                h.add_edge(a, b, color=0)
    return nx.freeze(h)
