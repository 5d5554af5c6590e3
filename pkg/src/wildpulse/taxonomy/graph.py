"""Species–name–substring graph construction and clustering.

Node identity is ``kind:label``. A shared suffix whose string equals an
existing common name does not get a twin node: the common-name node plays
both roles, which is what keeps e.g. the name "lion" connected to the
"sea lion" and "mountain lion" branches through their shared last word.

Substring edges follow longest-proper-suffix chains: every common/substring
node links to the longest whole-word proper suffix of its label present in
the graph. Whole-word suffixes of a string are totally ordered by length, so
these chains connect exactly the same components as linking every
name-to-suffix pair would, with far fewer edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from wildpulse.errors import DuplicateSpecies
from wildpulse.taxonomy.names import (
    extract_shared_suffixes,
    normalize_name,
    word_suffixes,
)

KIND_SCIENTIFIC = "scientific"
KIND_COMMON = "common"
KIND_SUBSTRING = "substring"

EDGE_SPECIES_COMMON = "species-common"
EDGE_NAME_SUBSTRING = "name-substring"

EdgeKey = tuple[str, str]


def node_id(kind: str, label: str) -> str:
    return f"{kind}:{label}"


def edge_key(a: str, b: str) -> EdgeKey:
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class SpeciesRecord:
    """One species with its canonical common names."""

    scientific_name: str
    common_names: tuple[str, ...] = ()
    order_name: str = ""
    family_name: str = ""


@dataclass(frozen=True)
class Node:
    id: str
    kind: str
    label: str


@dataclass
class NameGraph:
    """Undirected graph over scientific names, common names, and substrings.

    ``merge_links`` and ``taxon_names`` are curation overlays: merge links act
    as extra edges during clustering only, and taxon names attach display
    names to the component containing a node. Neither mutates the node/edge
    structure.
    """

    nodes: dict[str, Node] = field(default_factory=dict)
    edges: dict[EdgeKey, str] = field(default_factory=dict)
    merge_links: set[EdgeKey] = field(default_factory=set)
    taxon_names: dict[str, str] = field(default_factory=dict)

    def copy(self) -> "NameGraph":
        return NameGraph(
            nodes=dict(self.nodes),
            edges=dict(self.edges),
            merge_links=set(self.merge_links),
            taxon_names=dict(self.taxon_names),
        )

    def neighbors(self, nid: str) -> set[str]:
        out = set()
        for a, b in self.edges:
            if a == nid:
                out.add(b)
            elif b == nid:
                out.add(a)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NameGraph):
            return NotImplemented
        return (
            self.nodes == other.nodes
            and self.edges == other.edges
            and self.merge_links == other.merge_links
            and self.taxon_names == other.taxon_names
        )


@dataclass(frozen=True)
class Component:
    """One connected component: a candidate folk taxon."""

    component_id: str
    node_ids: tuple[str, ...]
    species: tuple[str, ...]
    common_names: tuple[str, ...]
    substrings: tuple[str, ...]
    display_name: str = ""


def build_graph(records: list[SpeciesRecord]) -> NameGraph:
    """Build the name graph for a set of species records.

    Nodes: one per scientific name, per distinct common name, and per shared
    trailing substring (computed to fixpoint over names and substrings).
    Edges: species–common per record; name–substring along
    longest-proper-suffix chains. The result is independent of record order.

    Raises:
        DuplicateSpecies: if two records share a scientific name.
    """
    graph = NameGraph()

    seen_sci: set[str] = set()
    common_labels: set[str] = set()
    species_links: set[tuple[str, str]] = set()
    for rec in records:
        sci = normalize_name(rec.scientific_name)
        if sci in seen_sci:
            raise DuplicateSpecies(f"duplicate scientific name: {sci!r}")
        seen_sci.add(sci)
        graph.nodes[node_id(KIND_SCIENTIFIC, sci)] = Node(
            node_id(KIND_SCIENTIFIC, sci), KIND_SCIENTIFIC, sci
        )
        for raw in rec.common_names:
            common = normalize_name(raw)
            common_labels.add(common)
            species_links.add((sci, common))

    for label in common_labels:
        graph.nodes[node_id(KIND_COMMON, label)] = Node(
            node_id(KIND_COMMON, label), KIND_COMMON, label
        )
    for sci, common in species_links:
        graph.edges[
            edge_key(node_id(KIND_SCIENTIFIC, sci), node_id(KIND_COMMON, common))
        ] = EDGE_SPECIES_COMMON

    suffixes = extract_shared_suffixes(common_labels)
    substring_labels = suffixes - common_labels
    for label in substring_labels:
        graph.nodes[node_id(KIND_SUBSTRING, label)] = Node(
            node_id(KIND_SUBSTRING, label), KIND_SUBSTRING, label
        )

    # every name/substring label present in the graph, for chain targets
    name_like = {label: KIND_COMMON for label in common_labels}
    name_like.update({label: KIND_SUBSTRING for label in substring_labels})

    for label, kind in name_like.items():
        for suffix in word_suffixes(label, proper=True):  # longest first
            if suffix in name_like:
                graph.edges[
                    edge_key(
                        node_id(kind, label),
                        node_id(name_like[suffix], suffix),
                    )
                ] = EDGE_NAME_SUBSTRING
                break

    return graph


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def connected_components(graph: NameGraph) -> list[Component]:
    """Partition the graph into components, honoring curation merge links.

    Components are sorted by their smallest node label; component ids are
    that label with spaces dashed (suffixed ``#n`` on the rare collision).
    """
    uf = _UnionFind(graph.nodes.keys())
    for a, b in graph.edges:
        uf.union(a, b)
    for a, b in graph.merge_links:
        if a in graph.nodes and b in graph.nodes:
            uf.union(a, b)

    groups: dict[str, list[Node]] = {}
    for nid in graph.nodes:
        groups.setdefault(uf.find(nid), []).append(graph.nodes[nid])

    comps = []
    for members in groups.values():
        labels = sorted(n.label for n in members)
        comps.append((labels[0], members))
    comps.sort(key=lambda t: t[0])

    used_ids: dict[str, int] = {}
    out: list[Component] = []
    for min_label, members in comps:
        base = min_label.replace(" ", "-")
        count = used_ids.get(base, 0)
        used_ids[base] = count + 1
        cid = base if count == 0 else f"{base}#{count + 1}"
        display = ""
        for node in sorted(members, key=lambda n: n.id):
            if node.id in graph.taxon_names:
                display = graph.taxon_names[node.id]
        out.append(
            Component(
                component_id=cid,
                node_ids=tuple(sorted(n.id for n in members)),
                species=tuple(
                    sorted(n.label for n in members if n.kind == KIND_SCIENTIFIC)
                ),
                common_names=tuple(
                    sorted(n.label for n in members if n.kind == KIND_COMMON)
                ),
                substrings=tuple(
                    sorted(n.label for n in members if n.kind == KIND_SUBSTRING)
                ),
                display_name=display,
            )
        )
    return out
