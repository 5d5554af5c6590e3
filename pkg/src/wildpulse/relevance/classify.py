"""Title classification backends.

Two interchangeable backends produce one score vector per title:

- ``RemoteClassifier`` speaks the sidecar HTTP contract (POST /classify with
  titles/labels/multi_label, row-aligned scores back).
- ``FallbackClassifier`` is a pure keyword scorer driven by a shipped rule
  table, so the pipeline runs with no model service at all.
"""

from __future__ import annotations

import json
import time
from pathlib import Path

import requests

from wildpulse.datafiles import data_path
from wildpulse.errors import BackendUnavailable
from wildpulse.matching import keyword_pattern
from wildpulse.relevance.schema import TopicSchema, TopicScores


class FallbackClassifier:
    """Deterministic keyword-lexicon scorer.

    A label scores ``base_score`` when one of its keywords matches the title
    (whole-word, case-insensitive), plus ``per_extra_hit`` per additional
    distinct keyword, capped at ``max_score``; otherwise 0. Empty titles get
    all-zero vectors.
    """

    def __init__(self, rules_path: str | Path | None = None):
        raw = json.loads(
            Path(rules_path or data_path("fallback_classifier.json")).read_text(
                encoding="utf-8"
            )
        )
        self.rules_version = raw["rules_version"]
        self.base_score = raw["base_score"]
        self.per_extra_hit = raw["per_extra_hit"]
        self.max_score = raw["max_score"]
        self.label_keywords = {
            label: tuple(words) for label, words in raw["label_keywords"].items()
        }

    def classify(self, titles: list[str], schema: TopicSchema) -> list[TopicScores]:
        out = []
        for title in titles:
            scores = []
            for label in schema.labels:
                hits = sum(
                    1
                    for kw in self.label_keywords.get(label, ())
                    if keyword_pattern(kw).search(title)
                )
                if hits == 0:
                    scores.append(0.0)
                else:
                    scores.append(
                        min(
                            self.max_score,
                            self.base_score + self.per_extra_hit * (hits - 1),
                        )
                    )
            out.append(TopicScores(tuple(scores)))
        return out


class RemoteClassifier:
    """HTTP client for the classifier sidecar contract."""

    def __init__(
        self,
        endpoint: str,
        batch_size: int = 64,
        timeout: float = 30.0,
        max_attempts: int = 3,
        backoff: float = 0.5,
        sleeper=time.sleep,
        session: requests.Session | None = None,
    ):
        self.endpoint = endpoint.rstrip("/")
        self.batch_size = batch_size
        self.timeout = timeout
        self.max_attempts = max_attempts
        self.backoff = backoff
        self._sleep = sleeper
        self._session = session or requests.Session()

    def classify(self, titles: list[str], schema: TopicSchema) -> list[TopicScores]:
        out: list[TopicScores] = []
        for i in range(0, len(titles), self.batch_size):
            batch = titles[i:i + self.batch_size]
            out.extend(self._classify_batch(batch, schema))
        return out

    def _classify_batch(
        self, titles: list[str], schema: TopicSchema
    ) -> list[TopicScores]:
        payload = {
            "titles": titles,
            "labels": list(schema.labels),
            "multi_label": True,
        }
        last_error: Exception | None = None
        for attempt in range(self.max_attempts):
            if attempt:
                self._sleep(self.backoff * 2 ** (attempt - 1))
            try:
                resp = self._session.post(
                    f"{self.endpoint}/classify", json=payload, timeout=self.timeout
                )
            except requests.RequestException as exc:
                last_error = exc
                continue
            if resp.status_code >= 500:
                last_error = BackendUnavailable(f"HTTP {resp.status_code}")
                continue
            if resp.status_code != 200:
                raise BackendUnavailable(
                    f"classifier rejected request: HTTP {resp.status_code}"
                )
            rows = resp.json()["scores"]
            if len(rows) != len(titles):
                raise BackendUnavailable(
                    f"classifier returned {len(rows)} rows for {len(titles)} titles"
                )
            return [TopicScores(tuple(float(s) for s in row)) for row in rows]
        raise BackendUnavailable(f"classifier unreachable: {last_error}")


def classify_titles(
    titles: list[str], schema: TopicSchema, backend
) -> list[TopicScores]:
    """Score every title against the schema, preserving order and length."""
    scores = backend.classify(list(titles), schema)
    if len(scores) != len(titles):
        raise BackendUnavailable(
            f"backend returned {len(scores)} vectors for {len(titles)} titles"
        )
    return scores
