"""Entity mention snippets and keyword subsumption."""

from wildpulse.matching import matches_query, unsubsumed_matches
from wildpulse.postprocess import detect_mentions
from wildpulse.taxonomy.queries import FolkTaxon

LION = FolkTaxon(
    taxon_id="lion",
    display_name="lion",
    member_species=("panthera leo",),
    positive_keywords=("lion",),
    negative_keywords=("mountain lion", "sea lion", "lion tamarin"),
)


class TestMatching:
    def test_whole_word_only(self):
        assert unsubsumed_matches("a lion roared", ("lion",), ()) != []
        assert unsubsumed_matches("a lionfish swam", ("lion",), ()) == []
        assert unsubsumed_matches("dandelion seeds", ("lion",), ()) == []

    def test_hyphen_matches_space(self):
        assert unsubsumed_matches(
            "a Tube-nosed Fruit Bat appeared", ("tube nosed fruit bat",), ()
        ) != []

    def test_negative_subsumption_is_positional(self):
        text = "The sea lion barked while a lion slept."
        spans = unsubsumed_matches(
            text, LION.positive_keywords, LION.negative_keywords
        )
        assert len(spans) == 1
        start, end, kw = spans[0]
        assert text[start:end] == "lion"
        assert text[:start].endswith("a ")

    def test_query_semantics_disqualify_whole_text(self):
        assert not matches_query(
            "The sea lion barked while a lion slept.",
            LION.positive_keywords,
            LION.negative_keywords,
        )
        assert matches_query(
            "A lion slept.", LION.positive_keywords, LION.negative_keywords
        )


class TestDetectMentions:
    TEXT = (
        "Rangers patrolled the reserve at dawn. Poachers had been active. "
        "Wardens found tracks near the river. Then they heard a roar. "
        "A lion appeared on the ridge. The team retreated quietly."
    )

    def test_mention_with_preceding_sentence(self):
        snippets = detect_mentions(self.TEXT, LION, source_id="u1")
        assert len(snippets) == 1
        snip = snippets[0]
        assert snip.position == 4
        assert snip.text == (
            "Then they heard a roar. A lion appeared on the ridge."
        )
        assert snip.taxon_id == "lion"
        assert snip.source_id == "u1"

    def test_mention_in_first_sentence_stands_alone(self):
        snippets = detect_mentions("A lion escaped. The zoo closed.", LION)
        assert len(snippets) == 1
        assert snippets[0].position == 0
        assert snippets[0].text == "A lion escaped."

    def test_negative_only_text_has_no_mentions(self):
        text = "The sea lion show was cancelled. Visitors were sad."
        assert detect_mentions(text, LION) == []

    def test_adjacent_mentions_both_emitted(self):
        text = "A lion roared. The lion charged. Everyone ran."
        snippets = detect_mentions(text, LION)
        assert [s.position for s in snippets] == [0, 1]
