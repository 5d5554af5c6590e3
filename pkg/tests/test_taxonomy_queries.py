"""Keyword derivation for curated components."""

from pathlib import Path

import pytest

from wildpulse.errors import EmptyTaxon
from wildpulse.taxonomy import (
    CurationSession,
    GraphEdit,
    build_graph,
    connected_components,
    derive_query,
    read_species_file,
)
from wildpulse.taxonomy.names import word_contains

FIXTURES = Path(__file__).parent.parent / "src" / "wildpulse" / "data" / "fixtures"

# the curation pass used throughout: isolate lion, and carve the
# flying fox group out of the bat lump
MAMMAL_EDITS = [
    GraphEdit("remove_edge", ("substring:sea lion", "common:lion")),
    GraphEdit("remove_edge", ("common:mountain lion", "common:lion")),
    GraphEdit("remove_edge", ("substring:fruit bat", "substring:bat")),
    GraphEdit(
        "remove_edge", ("substring:tube nosed fruit bat", "substring:nosed fruit bat")
    ),
    GraphEdit("remove_edge", ("substring:blossom bat", "substring:bat")),
    GraphEdit("remove_edge", ("substring:flying fox", "substring:fox")),
    GraphEdit("merge_components", ("substring:blossom bat", "substring:flying fox")),
    GraphEdit("rename_taxon", ("substring:flying fox",), value="flying fox"),
]


@pytest.fixture(scope="module")
def curated():
    graph = build_graph(read_species_file(FIXTURES / "mammals.csv"))
    sess = CurationSession(graph)
    for edit in MAMMAL_EDITS:
        sess.record(edit)
    return sess.current_graph(), sess.recluster()


def component_of(comps, species):
    return next(c for c in comps if species in c.species)


class TestDeriveQuery:
    def test_lion_negatives(self, curated):
        graph, comps = curated
        taxon = derive_query(component_of(comps, "panthera leo"), graph)
        assert "lion" in taxon.positive_keywords
        assert {"mountain lion", "sea lion", "lion tamarin"} <= set(
            taxon.negative_keywords
        )

    def test_pangolin_has_no_negatives(self, curated):
        graph, comps = curated
        taxon = derive_query(component_of(comps, "manis javanica"), graph)
        assert "pangolin" in taxon.positive_keywords
        assert taxon.negative_keywords == ()

    def test_flying_fox_negative_is_tube_nosed(self, curated):
        graph, comps = curated
        taxon = derive_query(component_of(comps, "pteropus vampyrus"), graph)
        assert {"flying fox", "fruit bat", "rousette", "blossom bat"} <= set(
            taxon.positive_keywords
        )
        # canonical form of Table-style "tube-nosed fruit bat"
        assert taxon.negative_keywords == ("tube nosed fruit bat",)
        assert taxon.display_name == "flying fox"

    def test_negatives_are_minimal_forms(self, curated):
        graph, comps = curated
        taxon = derive_query(component_of(comps, "panthera leo"), graph)
        assert "south american sea lion" not in taxon.negative_keywords
        assert "golden lion tamarin" not in taxon.negative_keywords

    def test_component_without_species_rejected(self, curated):
        graph, comps = curated
        no_species = [c for c in comps if not c.species]
        assert no_species, "curation should have produced a species-free component"
        with pytest.raises(EmptyTaxon):
            derive_query(no_species[0], graph)

    def test_keyword_invariants_hold_for_all_taxa(self, curated):
        graph, comps = curated
        for comp in comps:
            if not comp.species:
                continue
            taxon = derive_query(comp, graph)
            pos = set(taxon.positive_keywords)
            neg = set(taxon.negative_keywords)
            assert pos
            assert not pos & neg
            for n in neg:
                assert any(word_contains(n, p) for p in pos)
