"""Block decomposition with a prefix-connected block order."""
from typing import Optional

import networkx as nx
from pydantic import BaseModel, Field


class Block(BaseModel):
    vertices: frozenset[int]
    component: int
    attachment: Optional[int] = Field(
        None, description="cutvertex shared with the earlier blocks of the same component"
    )


class BlockStructure(BaseModel):
    blocks: list[Block]
    cutvertices: frozenset[int]

    def of_component(self, index: int) -> list[Block]:
        return [b for b in self.blocks if b.component == index]


def blocks(g: nx.Graph) -> BlockStructure:
    """Blocks of every component, ordered so each prefix of a component is connected.

    Within a component the order is breadth-first over the block-cut tree
    from the block holding the least vertex, so block ``j + 1`` meets the
    union of the earlier ones in exactly its attachment cutvertex.
    """
    ordered: list[Block] = []
    cutvertices = frozenset(nx.articulation_points(g))
    for index, comp in enumerate(sorted(nx.connected_components(g), key=min)):
        sub = g.subgraph(comp)
        if len(comp) == 1:
            ordered.append(Block(vertices=frozenset(comp), component=index))
            continue
        found = sorted((frozenset(b) for b in nx.biconnected_components(sub)), key=lambda b: sorted(b))
        start = min(found, key=lambda b: (min(b) != min(comp), sorted(b)))
        seen = {start}
        queue = [(start, None)]
        while queue:
            block, via = queue.pop(0)
            ordered.append(Block(vertices=block, component=index, attachment=via))
            for v in sorted(block & cutvertices):
                for other in found:
                    if other not in seen and v in other:
                        seen.add(other)
                        queue.append((other, v))
    return BlockStructure(blocks=ordered, cutvertices=cutvertices)
