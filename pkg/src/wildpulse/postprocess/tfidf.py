"""TF-IDF vectors and cosine similarity for near-duplicate detection.

Pinned formula: tf = raw term count; idf = ln((1 + N) / (1 + df)) + 1.
Tokens are lowercase word characters, length >= 2, stopwords removed.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass

from wildpulse.datafiles import load_stopwords

_TOKEN = re.compile(r"[a-z0-9']+")


def tokenize(text: str) -> list[str]:
    stopwords = load_stopwords()
    out = []
    for tok in _TOKEN.findall(text.lower()):
        tok = tok.strip("'")
        if len(tok) >= 2 and tok not in stopwords:
            out.append(tok)
    return out


@dataclass
class TfidfVector:
    weights: dict[str, float]
    norm: float

    @classmethod
    def from_weights(cls, weights: dict[str, float]) -> "TfidfVector":
        return cls(weights=weights, norm=math.sqrt(sum(w * w for w in weights.values())))


def tfidf_vectors(corpus: list[str]) -> list[TfidfVector]:
    """Vectorize a corpus; all-empty documents yield zero vectors (norm 0)."""
    if not corpus:
        raise ValueError("corpus must be nonempty")
    docs = [Counter(tokenize(text)) for text in corpus]
    n = len(docs)
    df: Counter[str] = Counter()
    for counts in docs:
        df.update(counts.keys())
    idf = {tok: math.log((1 + n) / (1 + d)) + 1.0 for tok, d in df.items()}
    return [
        TfidfVector.from_weights({tok: tf * idf[tok] for tok, tf in counts.items()})
        for counts in docs
    ]


def cosine(a: TfidfVector, b: TfidfVector) -> float:
    """Cosine similarity in [0, 1]; 0 when either vector has zero norm."""
    if a.norm == 0.0 or b.norm == 0.0:
        return 0.0
    if len(a.weights) > len(b.weights):
        a, b = b, a
    dot = sum(w * b.weights.get(tok, 0.0) for tok, w in a.weights.items())
    return min(1.0, dot / (a.norm * b.norm))
