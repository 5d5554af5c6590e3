"""Entity mention detection: target-taxon sentences with one sentence of
leading context."""

from __future__ import annotations

from dataclasses import dataclass

from wildpulse.matching import unsubsumed_matches
from wildpulse.postprocess.sentences import split_sentences
from wildpulse.taxonomy.queries import FolkTaxon


@dataclass(frozen=True)
class MentionSnippet:
    source_id: str  # article url or post id
    taxon_id: str
    text: str
    position: int  # sentence index of the mention


def detect_mentions(
    text: str, taxon: FolkTaxon, source_id: str = ""
) -> list[MentionSnippet]:
    """One snippet per mention sentence: the sentence plus its predecessor.

    A mention is a whole-word positive-keyword match not subsumed by a
    negative-keyword match at the same location.
    """
    sentences = split_sentences(text)
    snippets = []
    for i, sentence in enumerate(sentences):
        if unsubsumed_matches(
            sentence, taxon.positive_keywords, taxon.negative_keywords
        ):
            start = max(0, i - 1)
            snippets.append(
                MentionSnippet(
                    source_id=source_id,
                    taxon_id=taxon.taxon_id,
                    text=" ".join(sentences[start:i + 1]),
                    position=i,
                )
            )
    return snippets
