"""Folk-taxonomy construction: name graph, clustering, curation, query keywords."""

from wildpulse.taxonomy.names import (
    normalize_name,
    word_suffixes,
    is_word_suffix,
    word_contains,
    extract_shared_suffixes,
)
from wildpulse.taxonomy.graph import (
    SpeciesRecord,
    Node,
    NameGraph,
    Component,
    build_graph,
    connected_components,
)
from wildpulse.taxonomy.edits import GraphEdit, apply_edit, CurationSession
from wildpulse.taxonomy.queries import FolkTaxon, derive_query
from wildpulse.taxonomy.io import (
    read_species_file,
    write_taxonomy_file,
    read_taxonomy_file,
    graph_to_golden,
)

__all__ = [
    "normalize_name",
    "word_suffixes",
    "is_word_suffix",
    "word_contains",
    "extract_shared_suffixes",
    "SpeciesRecord",
    "Node",
    "NameGraph",
    "Component",
    "build_graph",
    "connected_components",
    "GraphEdit",
    "apply_edit",
    "CurationSession",
    "FolkTaxon",
    "derive_query",
    "read_species_file",
    "write_taxonomy_file",
    "read_taxonomy_file",
    "graph_to_golden",
]
