"""Syndicated (near-duplicate) article detection.

Articles are processed in (published_at, url) order with a rolling window:
an article is original unless some article published up to 60 days earlier
has TF-IDF cosine similarity strictly above the threshold, in which case it
is marked as a syndicate of the earliest such match.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime, timedelta

from wildpulse.postprocess.tfidf import TfidfVector, cosine, tfidf_vectors

WINDOW_DAYS = 60
SIMILARITY_THRESHOLD = 0.95


@dataclass(frozen=True)
class ArticleText:
    url: str
    published_at: datetime
    text: str


@dataclass(frozen=True)
class DedupVerdict:
    url: str
    is_original: bool
    duplicate_of: str | None
    similarity: float

    def __post_init__(self):
        if self.is_original == (self.duplicate_of is not None):
            raise ValueError("is_original xor duplicate_of")


def mark_syndication(
    articles: list[ArticleText],
    threshold: float = SIMILARITY_THRESHOLD,
    window: timedelta = timedelta(days=WINDOW_DAYS),
) -> list[DedupVerdict]:
    """Verdict per article, in the order of the (published_at, url) sort.

    The trailing window is inclusive: articles exactly ``window`` apart are
    still compared. Memory stays proportional to the window, not the corpus.
    """
    ordered = sorted(articles, key=lambda a: (a.published_at, a.url))
    vectors = tfidf_vectors([a.text for a in ordered])

    verdicts: list[DedupVerdict] = []
    window_start = 0
    for i, article in enumerate(ordered):
        while ordered[window_start].published_at < article.published_at - window:
            window_start += 1
        best: tuple[datetime, str, float] | None = None
        for j in range(window_start, i):
            sim = cosine(vectors[i], vectors[j])
            if sim > threshold:
                key = (ordered[j].published_at, ordered[j].url, sim)
                if best is None or key[:2] < best[:2]:
                    best = key
        if best is None:
            verdicts.append(DedupVerdict(article.url, True, None, 0.0))
        else:
            verdicts.append(DedupVerdict(article.url, False, best[1], best[2]))
    return verdicts
