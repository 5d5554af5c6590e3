"""Search keyword derivation from curated components.

Positive keywords are the component's name/substring labels. Negative
keywords are names elsewhere in the graph that would collide with a positive
keyword in a word-boundary search ("sea lion" when searching "lion"),
reduced to their shortest distinguishing forms: the containment-minimal
colliding labels ("sea lion", never "south american sea lion", since
excluding the former already excludes the latter).
"""

from __future__ import annotations

from dataclasses import dataclass

from wildpulse.errors import EmptyTaxon
from wildpulse.taxonomy.graph import (
    KIND_SCIENTIFIC,
    Component,
    NameGraph,
)
from wildpulse.taxonomy.names import word_contains


@dataclass(frozen=True)
class FolkTaxon:
    """A curated species cluster with its search keywords."""

    taxon_id: str
    display_name: str
    member_species: tuple[str, ...]
    positive_keywords: tuple[str, ...]
    negative_keywords: tuple[str, ...]

    def __post_init__(self):
        if not self.member_species:
            raise EmptyTaxon(f"taxon {self.taxon_id!r} has no member species")
        if not self.positive_keywords:
            raise EmptyTaxon(f"taxon {self.taxon_id!r} has no positive keywords")
        overlap = set(self.positive_keywords) & set(self.negative_keywords)
        if overlap:
            raise ValueError(f"keywords both positive and negative: {overlap}")


def derive_query(component: Component, full_graph: NameGraph) -> FolkTaxon:
    """Compile a component into a FolkTaxon with positive/negative keywords.

    Raises:
        EmptyTaxon: if the component contains no species node.
    """
    if not component.species:
        raise EmptyTaxon(
            f"component {component.component_id!r} contains no species"
        )

    positives = set(component.common_names) | set(component.substrings)
    in_component = set(component.node_ids)

    colliding = sorted(
        node.label
        for node in full_graph.nodes.values()
        if node.id not in in_component
        and node.kind != KIND_SCIENTIFIC
        and any(word_contains(node.label, p) for p in positives)
    )

    # containment-minimal colliding labels are the shortest distinguishing forms
    negatives = {
        label
        for label in colliding
        if not any(
            other != label and word_contains(label, other) for other in colliding
        )
    }

    display = component.display_name or component.component_id.replace("-", " ")
    return FolkTaxon(
        taxon_id=display.replace(" ", "-"),
        display_name=display,
        member_species=tuple(sorted(component.species)),
        positive_keywords=tuple(sorted(positives)),
        negative_keywords=tuple(sorted(negatives)),
    )
