"""Graph container shared by the partition, divisor and sigma networks."""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .exceptions import LimitExceeded

KINDS = ("partition", "partition-annotated", "divisor", "sigma")

# name of the size parameter carried by each network kind
PARAMETER_NAMES = {
    "partition": "n",
    "partition-annotated": "n",
    "divisor": "a1_max",
    "sigma": "n_max",
}


@dataclass(frozen=True)
class Edge:
    parent: int
    child: int
    order: int
    first_jump: bool = False


@dataclass
class PartitionNetwork:
    """Nodes are partitions (as term tuples in jump form) indexed by id.

    ``values`` holds one annotation per node when the kind carries one:
    the order-1 jump-set size, the signed smallest term, or the sigma weight.
    """

    kind: str
    parameter: int
    nodes: List[Tuple[int, ...]] = field(default_factory=list)
    edges: List[Edge] = field(default_factory=list)
    roots: List[int] = field(default_factory=list)
    values: Optional[List[int]] = None

    def add_node(self, terms, value=None) -> int:
        self.nodes.append(tuple(terms))
        if self.values is not None:
            self.values.append(value)
        return len(self.nodes) - 1

    def add_edge(self, parent, child, order, first_jump=False):
        self.edges.append(Edge(parent, child, order, first_jump))

    def __len__(self):
        return len(self.nodes)

    def children(self) -> Dict[int, List[Edge]]:
        out: Dict[int, List[Edge]] = {i: [] for i in range(len(self.nodes))}
        for e in self.edges:
            out[e.parent].append(e)
        return out

    def slice_sum(self, total: int) -> int:
        """Sum of node values over nodes whose terms add up to ``total``."""
        if self.values is None:
            raise ValueError(f"{self.kind} network carries no values")
        return sum(v for terms, v in zip(self.nodes, self.values) if sum(terms) == total)


def check_budget(what: str, required: int, budget: int):
    if required > budget:
        raise LimitExceeded(what, required, budget)
