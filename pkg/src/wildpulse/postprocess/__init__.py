"""Post-retrieval text processing: sentence splitting, TF-IDF syndication
detection, and entity mention snippets."""

from wildpulse.postprocess.sentences import split_sentences
from wildpulse.postprocess.tfidf import TfidfVector, tfidf_vectors, cosine, tokenize
from wildpulse.postprocess.syndication import (
    ArticleText,
    DedupVerdict,
    mark_syndication,
)
from wildpulse.postprocess.mentions import MentionSnippet, detect_mentions

__all__ = [
    "split_sentences",
    "TfidfVector",
    "tfidf_vectors",
    "cosine",
    "tokenize",
    "ArticleText",
    "DedupVerdict",
    "mark_syndication",
    "MentionSnippet",
    "detect_mentions",
]
