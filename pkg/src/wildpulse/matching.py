"""Whole-word keyword matching with negative-keyword subsumption.

Keywords are canonical (lowercase, space-separated); in running text they
match case-insensitively with hyphens or whitespace between words, so the
keyword "tube nosed fruit bat" matches "Tube-nosed fruit bat". A positive
match is subsumed when it lies inside a span matched by a negative keyword
("lion" inside "sea lion" when searching the lion taxon).
"""

from __future__ import annotations

import re
from functools import lru_cache


@lru_cache(maxsize=4096)
def keyword_pattern(keyword: str) -> re.Pattern:
    parts = [re.escape(tok) for tok in keyword.split(" ")]
    return re.compile(
        r"(?<!\w)" + r"[\s\-]+".join(parts) + r"(?!\w)", re.IGNORECASE
    )


def find_keyword_spans(text: str, keywords) -> list[tuple[int, int, str]]:
    """All (start, end, keyword) whole-word matches in ``text``."""
    spans = []
    for kw in keywords:
        for m in keyword_pattern(kw).finditer(text):
            spans.append((m.start(), m.end(), kw))
    spans.sort()
    return spans


def unsubsumed_matches(
    text: str, positives, negatives
) -> list[tuple[int, int, str]]:
    """Positive-keyword matches not contained in any negative-keyword match."""
    pos = find_keyword_spans(text, positives)
    if not pos:
        return []
    neg = find_keyword_spans(text, negatives)
    return [
        (s, e, kw)
        for s, e, kw in pos
        if not any(ns <= s and e <= ne for ns, ne, _ in neg)
    ]


def mentions_taxon(text: str, positives, negatives) -> bool:
    """True if ``text`` contains an unsubsumed positive-keyword match."""
    return bool(unsubsumed_matches(text, positives, negatives))


def matches_query(text: str, positives, negatives) -> bool:
    """Boolean search semantics: some positive present, no negative present.

    This is how a keyword search API treats negative keywords (the whole
    document is disqualified), as opposed to the positional subsumption rule
    used for mention detection.
    """
    if any(keyword_pattern(n).search(text) for n in negatives):
        return False
    return any(keyword_pattern(p).search(text) for p in positives)
