"""The 23-topic schema and the relevance decision rule."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from wildpulse.datafiles import data_path
from wildpulse.errors import SchemaMismatch

RELEVANCE_THRESHOLD = 0.5


@dataclass(frozen=True)
class TopicSchema:
    labels: tuple[str, ...]
    relevant_set: frozenset[str]
    irrelevant_set: frozenset[str]

    def __post_init__(self):
        if set(self.labels) != self.relevant_set | self.irrelevant_set:
            raise ValueError("labels must be the union of relevant and irrelevant")
        if self.relevant_set & self.irrelevant_set:
            raise ValueError("relevant and irrelevant labels overlap")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("duplicate labels")


@dataclass(frozen=True)
class TopicScores:
    scores: tuple[float, ...]

    def __post_init__(self):
        if any(not (0.0 <= s <= 1.0) for s in self.scores):
            raise ValueError("scores must lie in [0, 1]")

    def as_dict(self, schema: TopicSchema) -> dict[str, float]:
        if len(self.scores) != len(schema.labels):
            raise SchemaMismatch(
                f"{len(self.scores)} scores for {len(schema.labels)} labels"
            )
        return dict(zip(schema.labels, self.scores))


def load_schema(path: str | Path | None = None) -> TopicSchema:
    """Load the topic schema (the shipped 23-label file by default)."""
    raw = json.loads(
        Path(path or data_path("topic_schema.json")).read_text(encoding="utf-8")
    )
    relevant = tuple(raw["relevant"])
    irrelevant = tuple(raw["irrelevant"])
    return TopicSchema(
        labels=relevant + irrelevant,
        relevant_set=frozenset(relevant),
        irrelevant_set=frozenset(irrelevant),
    )


def decide_relevance(
    scores: TopicScores,
    schema: TopicSchema,
    threshold: float = RELEVANCE_THRESHOLD,
) -> bool:
    """True iff some *relevant* label scores strictly above the threshold.

    Raises:
        SchemaMismatch: if the vector length does not match the schema.
    """
    if len(scores.scores) != len(schema.labels):
        raise SchemaMismatch(
            f"{len(scores.scores)} scores for {len(schema.labels)} labels"
        )
    return any(
        score > threshold
        for label, score in zip(schema.labels, scores.scores)
        if label in schema.relevant_set
    )
