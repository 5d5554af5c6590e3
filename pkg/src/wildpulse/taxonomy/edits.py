"""Curation edits: pure graph transforms plus an append-only session log.

Reclustering is always a pure function of (base graph, edit log): undo is
replaying a log prefix, and a session can be persisted/reloaded as JSON
lines, one edit per line.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from wildpulse.errors import EditTargetNotFound
from wildpulse.taxonomy.graph import Component, NameGraph, connected_components, edge_key

EDIT_REMOVE_NODE = "remove_node"
EDIT_REMOVE_EDGE = "remove_edge"
EDIT_MERGE_COMPONENTS = "merge_components"
EDIT_RENAME_TAXON = "rename_taxon"

_EDIT_KINDS = {
    EDIT_REMOVE_NODE,
    EDIT_REMOVE_EDGE,
    EDIT_MERGE_COMPONENTS,
    EDIT_RENAME_TAXON,
}


@dataclass(frozen=True)
class GraphEdit:
    """One curation action. ``targets`` are node ids (two ids for edges/merges)."""

    edit_kind: str
    targets: tuple[str, ...]
    value: str = ""  # new display name for rename_taxon
    timestamp: str = ""
    author: str = ""

    def __post_init__(self):
        if self.edit_kind not in _EDIT_KINDS:
            raise ValueError(f"unknown edit kind: {self.edit_kind!r}")
        if not self.timestamp:
            object.__setattr__(
                self, "timestamp", datetime.now(timezone.utc).isoformat()
            )

    def to_json(self) -> str:
        return json.dumps(
            {
                "edit_kind": self.edit_kind,
                "targets": list(self.targets),
                "value": self.value,
                "timestamp": self.timestamp,
                "author": self.author,
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, line: str) -> "GraphEdit":
        obj = json.loads(line)
        return cls(
            edit_kind=obj["edit_kind"],
            targets=tuple(obj["targets"]),
            value=obj.get("value", ""),
            timestamp=obj.get("timestamp", ""),
            author=obj.get("author", ""),
        )


def apply_edit(graph: NameGraph, edit: GraphEdit) -> NameGraph:
    """Apply one edit, returning a new graph; the input is untouched.

    Raises:
        EditTargetNotFound: if a targeted node or edge does not exist.
    """
    out = graph.copy()
    kind = edit.edit_kind

    if kind == EDIT_REMOVE_NODE:
        (nid,) = edit.targets
        if nid not in out.nodes:
            raise EditTargetNotFound(f"no such node: {nid!r}")
        del out.nodes[nid]
        out.edges = {k: v for k, v in out.edges.items() if nid not in k}
        out.merge_links = {k for k in out.merge_links if nid not in k}
        out.taxon_names.pop(nid, None)
        return out

    if kind == EDIT_REMOVE_EDGE:
        a, b = edit.targets
        key = edge_key(a, b)
        if key not in out.edges:
            raise EditTargetNotFound(f"no such edge: {a!r} -- {b!r}")
        del out.edges[key]
        return out

    if kind == EDIT_MERGE_COMPONENTS:
        a, b = edit.targets
        for nid in (a, b):
            if nid not in out.nodes:
                raise EditTargetNotFound(f"no such node: {nid!r}")
        out.merge_links.add(edge_key(a, b))
        return out

    # rename_taxon
    (nid,) = edit.targets
    if nid not in out.nodes:
        raise EditTargetNotFound(f"no such node: {nid!r}")
    out.taxon_names[nid] = edit.value
    return out


@dataclass
class CurationSession:
    """Single-writer curation session over a base graph.

    The edit log is append-only; the current graph and clustering are always
    derived by replaying the log against the base graph.
    """

    base_graph: NameGraph
    log: list[GraphEdit] = field(default_factory=list)

    def current_graph(self) -> NameGraph:
        graph = self.base_graph
        for edit in self.log:
            graph = apply_edit(graph, edit)
        return graph

    def record(self, edit: GraphEdit) -> NameGraph:
        """Validate + append one edit; returns the new current graph."""
        graph = apply_edit(self.current_graph(), edit)
        self.log.append(edit)
        return graph

    def undo(self) -> NameGraph:
        """Drop the last edit (replay of the shorter prefix)."""
        if self.log:
            self.log.pop()
        return self.current_graph()

    def recluster(self) -> list[Component]:
        return connected_components(self.current_graph())

    def save_log(self, path: str | Path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            for edit in self.log:
                fh.write(edit.to_json() + "\n")

    @classmethod
    def load(cls, base_graph: NameGraph, log_path: str | Path) -> "CurationSession":
        log: list[GraphEdit] = []
        path = Path(log_path)
        if path.exists():
            with open(path, encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if line:
                        log.append(GraphEdit.from_json(line))
        return cls(base_graph=base_graph, log=log)
