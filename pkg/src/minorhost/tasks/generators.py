"""Seeded random instances for the corpus suites.

Every generator takes a ``random.Random`` so that one run seed fixes the
whole corpus. Instance ``i`` of suite ``s`` uses ``instance_rng(seed, s, i)``.
"""
import random
from functools import lru_cache
from typing import Optional

import networkx as nx

from minorhost.core.exceptions import PreconditionError
from minorhost.decomposition.tree import TreeDecomposition
from minorhost.graphs.families import FamilySpec, generate
from minorhost.graphs.graph import make_graph, normalize


def instance_rng(seed: int, suite: str, index: int) -> random.Random:
    return random.Random(f"{seed}:{suite}:{index}")


def random_tree(rng: random.Random, n: int) -> nx.Graph:
    if n == 1:
        return make_graph([0], [])
    if n == 2:
        return make_graph([0, 1], [(0, 1)])
    prufer = [rng.randrange(n) for _ in range(n - 2)]
    return normalize(nx.from_prufer_sequence(prufer))


def random_series_parallel(rng: random.Random, n: int) -> nx.Graph:
    """Connected K_4-minor-free graph grown by pendants, subdivisions and edge triangles."""
    g = nx.Graph([(0, 1)])
    while g.number_of_nodes() < n:
        w = g.number_of_nodes()
        u, v = rng.choice(sorted(g.edges))
        move = rng.random()
        if move < 0.2:
            g.add_edge(rng.choice(sorted(g.nodes)), w)
        elif move < 0.5:
            g.remove_edge(u, v)
            g.add_edges_from([(u, w), (w, v)])
        else:
            g.add_edges_from([(u, w), (w, v)])
    return normalize(g)


def random_small_blocks(rng: random.Random, n: int) -> nx.Graph:
    """Connected graph whose blocks are edges and triangles."""
    g = nx.Graph()
    g.add_node(0)
    while g.number_of_nodes() < n:
        w = g.number_of_nodes()
        a = rng.choice(sorted(g.nodes))
        if rng.random() < 0.5 or w + 1 >= n + 1:
            g.add_edge(a, w)
        else:
            g.add_edges_from([(a, w), (w, w + 1), (w + 1, a)])
    return normalize(g)


def random_colored_star(rng: random.Random, leaves: int, c: int, d: int) -> nx.Graph:
    return make_graph(
        range(leaves + 1),
        [(0, i) for i in range(1, leaves + 1)],
        c=c,
        d=d,
        vertex_colors={v: rng.randrange(d) for v in range(leaves + 1)},
        edge_colors={(0, i): rng.randrange(c) for i in range(1, leaves + 1)},
    )


def random_colored_graph(rng: random.Random, n: int, c: int, d: int, p: float = 0.4) -> nx.Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return make_graph(
        range(n),
        edges,
        c=c,
        d=d,
        vertex_colors={v: rng.randrange(d) for v in range(n)},
        edge_colors={e: rng.randrange(c) for e in edges},
    )


def random_graph(rng: random.Random, n: int, p: Optional[float] = None) -> nx.Graph:
    p = rng.uniform(0.2, 0.8) if p is None else p
    return normalize(nx.gnp_random_graph(n, p, seed=rng.randrange(2**32)))


def two_connected_with_path(rng: random.Random, length: int, ears: int = 3) -> nx.Graph:
    """A path ``0..length`` closed into a cycle, plus random ears."""
    g = nx.path_graph(length + 1)
    g.add_edge(0, length)
    for _ in range(ears):
        a, b = rng.sample(sorted(g.nodes), 2)
        inner = rng.randrange(0, 3)
        if inner == 0 and not g.has_edge(a, b):
            g.add_edge(a, b)
            continue
        fresh = list(range(g.number_of_nodes(), g.number_of_nodes() + max(inner, 1)))
        nx.add_path(g, [a, *fresh, b])
    return normalize(g)


def long_and_short_cycle(attachment: str) -> nx.Graph:
    """A C_18 with a shorter cycle of length 6 attached.

    ``attachment`` picks how the short cycle meets the long one:
    ``"chord"`` (the chord 0-5 closes it on the long cycle), ``"disjoint"``
    (a separate C_6 joined by two edges) or ``"shared-vertex"`` (a C_6
    through vertex 0 with one more edge back to the long cycle).
    """
    g = nx.cycle_graph(18)
    if attachment == "chord":
        g.add_edge(0, 5)
    elif attachment == "disjoint":
        nx.add_cycle(g, range(100, 106))
        g.add_edges_from([(100, 0), (103, 9)])
    elif attachment == "shared-vertex":
        nx.add_cycle(g, [0, *range(101, 106)])
        g.add_edge(102, 9)
    else:
        raise PreconditionError(f"unknown attachment {attachment!r}")
    return normalize(g)


def banded_instance(rng: random.Random, w: int, length: int, pendants: int = 3) -> tuple[nx.Graph, TreeDecomposition, list[int]]:
    """A path of ``length`` edges plus chords of span < ``w``, with a width ``w - 1`` decomposition."""
    g = nx.path_graph(length + 1)
    for i in range(length + 1):
        for j in range(i + 2, min(i + w, length + 1)):
            if rng.random() < 0.3:
                g.add_edge(i, j)
    bags: dict[int, set[int]] = {t: set(range(t, t + w)) for t in range(length - w + 2)}
    edges = [(t, t + 1) for t in range(len(bags) - 1)]
    for _ in range(pendants):
        t = rng.randrange(len(bags))
        x = rng.choice(sorted(bags[t]))
        v = g.number_of_nodes()
        g.add_edge(x, v)
        node = len(bags)
        bags[node] = {x, v}
        edges.append((t, node))
    return normalize(g), TreeDecomposition.from_bags(bags, edges), list(range(length + 1))


def glued_instance(
    rng: random.Random, pattern: nx.Graph, adhesion: int, pieces: int = 4
) -> tuple[nx.Graph, TreeDecomposition]:
    """The pattern as one bag plus random pieces glued along complete adhesion sets."""
    g = nx.Graph(pattern)
    bags: dict[int, set[int]] = {0: set(pattern.nodes)}
    edges: list[tuple[int, int]] = []
    for node in range(1, pieces + 1):
        parent = rng.randrange(node)
        bag = bags[parent]
        if adhesion >= 2 and rng.random() < 0.6:
            inside = [e for e in g.subgraph(bag).edges]
            glue = list(rng.choice(sorted(inside))) if inside else [rng.choice(sorted(bag))]
        else:
            glue = [rng.choice(sorted(bag))]
        size = rng.randrange(1, 4)
        fresh = list(range(g.number_of_nodes(), g.number_of_nodes() + size))
        local = [*glue, *fresh]
        for i, u in enumerate(local):
            for v in local[i + 1 :]:
                if u in glue and v in glue:
                    continue
                if rng.random() < 0.6:
                    g.add_edge(u, v)
        for v in fresh:
            if g.degree(v) == 0:
                g.add_edge(v, glue[0])
        bags[node] = set(local)
        edges.append((parent, node))
    return normalize(g), TreeDecomposition.from_bags(bags, edges)


@lru_cache(maxsize=None)
def atlas(max_vertices: int = 7) -> tuple[nx.Graph, ...]:
    """Every graph on at most ``max_vertices`` vertices, up to isomorphism (max 7)."""
    return tuple(normalize(g) for g in nx.graph_atlas_g() if g.number_of_nodes() <= max_vertices)


def named(label: str) -> nx.Graph:
    return generate(FamilySpec.parse(label))
