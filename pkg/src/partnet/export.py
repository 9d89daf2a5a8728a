"""DOT and JSON serialization of partition networks.

Output is deterministic: nodes and edges are sorted, keys appear in a
fixed order, so identical networks always produce identical bytes.
"""

import json
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .network import KINDS, PARAMETER_NAMES, PartitionNetwork

VALUED_KINDS = ("partition-annotated", "divisor", "sigma")


@dataclass(frozen=True)
class NodeEntry:
    id: int
    label: str
    terms: Tuple[int, ...]
    value: Optional[int] = None


@dataclass(frozen=True)
class EdgeEntry:
    source: int
    target: int
    order: int
    first_jump: bool


@dataclass
class NetworkDocument:
    kind: str
    parameter: int
    nodes: List[NodeEntry] = field(default_factory=list)
    edges: List[EdgeEntry] = field(default_factory=list)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown network kind {self.kind!r}")
        ids = [node.id for node in self.nodes]
        if len(set(ids)) != len(ids):
            raise ValueError("node ids must be unique")
        known = set(ids)
        for e in self.edges:
            if e.source not in known or e.target not in known:
                raise ValueError(f"edge {e.source}->{e.target} references a missing node")
        valued = self.kind in VALUED_KINDS
        for node in self.nodes:
            if (node.value is not None) != valued:
                raise ValueError(f"node {node.id}: value presence does not match kind {self.kind}")

    def slice_sum(self, total: int) -> int:
        return sum(node.value for node in self.nodes if sum(node.terms) == total)


def _label(terms, value, kind):
    text = " ".join(map(str, terms))
    if kind in VALUED_KINDS:
        text += f" ({value})"
    return text


def to_document(net: PartitionNetwork, kind: Optional[str] = None) -> NetworkDocument:
    """Convert a network; ``kind="partition"`` strips annotations from an annotated one."""
    kind = kind or net.kind
    if kind != net.kind and not (kind == "partition" and net.kind == "partition-annotated"):
        raise ValueError(f"cannot export a {net.kind} network as {kind}")
    valued = kind in VALUED_KINDS
    nodes = []
    for i, terms in enumerate(net.nodes):
        value = net.values[i] if valued else None
        nodes.append(NodeEntry(i, _label(terms, value, kind), tuple(terms), value))
    edges = sorted(
        (EdgeEntry(e.parent, e.child, e.order, e.first_jump) for e in net.edges),
        key=lambda e: (e.source, e.target),
    )
    return NetworkDocument(kind, net.parameter, nodes, edges)


def document_to_json(doc: NetworkDocument) -> str:
    payload = {
        "kind": doc.kind,
        PARAMETER_NAMES[doc.kind]: doc.parameter,
        "nodes": [],
        "edges": [],
    }
    for node in sorted(doc.nodes, key=lambda x: x.id):
        entry = {"id": node.id, "label": node.label, "terms": list(node.terms)}
        if node.value is not None:
            entry["value"] = node.value
        payload["nodes"].append(entry)
    for e in sorted(doc.edges, key=lambda x: (x.source, x.target)):
        payload["edges"].append(
            {"from": e.source, "to": e.target, "order": e.order, "firstJump": e.first_jump})
    # one node or edge per line keeps large documents diffable
    head = ",\n".join(
        f"  {json.dumps(key)}: {json.dumps(value)}" for key, value in list(payload.items())[:2])
    blocks = []
    for key in ("nodes", "edges"):
        items = payload[key]
        if items:
            body = ",\n".join("    " + json.dumps(item) for item in items)
            blocks.append(f"  {json.dumps(key)}: [\n{body}\n  ]")
        else:
            blocks.append(f"  {json.dumps(key)}: []")
    return "{\n" + head + ",\n" + ",\n".join(blocks) + "\n}\n"


def from_json(text: str) -> NetworkDocument:
    """Parse a document produced by ``to_json``."""
    raw = json.loads(text)
    kind = raw["kind"]
    if kind not in PARAMETER_NAMES:
        raise ValueError(f"unknown network kind {kind!r}")
    nodes = [NodeEntry(n["id"], n["label"], tuple(n["terms"]), n.get("value"))
             for n in raw["nodes"]]
    edges = [EdgeEntry(e["from"], e["to"], e["order"], e["firstJump"]) for e in raw["edges"]]
    return NetworkDocument(kind, raw[PARAMETER_NAMES[kind]], nodes, edges)


def to_json(net: PartitionNetwork, kind: Optional[str] = None) -> str:
    return document_to_json(to_document(net, kind))


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def document_to_dot(doc: NetworkDocument) -> str:
    name = f"{doc.kind.replace('-', '_')}_{doc.parameter}"
    lines = [f"digraph {name} {{"]
    lines.append("  node [shape=box];")
    for node in sorted(doc.nodes, key=lambda x: x.id):
        lines.append(f"  n{node.id} [label={_quote(node.label)}];")
    for e in sorted(doc.edges, key=lambda x: (x.source, x.target)):
        first = "true" if e.first_jump else "false"
        lines.append(f"  n{e.source} -> n{e.target} [order={e.order}, firstJump={first}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_dot(net: PartitionNetwork, kind: Optional[str] = None) -> str:
    return document_to_dot(to_document(net, kind))


def to_text(net: PartitionNetwork, kind: Optional[str] = None) -> str:
    """One node label per line, in id order."""
    doc = to_document(net, kind)
    return "".join(node.label + "\n" for node in doc.nodes)
