"""wildpulse: monitor public discourse about wildlife taxa in news and social media.

The library is organized by pipeline stage:

- :mod:`wildpulse.taxonomy` — folk-taxonomy graph from species common names,
  curation edits, and positive/negative search keyword derivation.
- :mod:`wildpulse.retrieval` — capped keyword-search news API client with
  adaptive time slicing, plus a post-archive adapter.
- :mod:`wildpulse.relevance` — topic schema, snippet extraction, LDA topic
  discovery, title classification, and the relevance decision rule.
- :mod:`wildpulse.extraction` — HTML fetching, main-body extraction, and
  web-archive fallback.
- :mod:`wildpulse.postprocess` — syndication (near-duplicate) detection and
  entity mention snippets.
- :mod:`wildpulse.analytics` — sentiment scoring, time/country aggregation,
  breakpoint detection, topic co-occurrence.
- :mod:`wildpulse.pipeline` — orchestration, persistence, CLI, curation API,
  and report/figure export.
"""

__version__ = "0.1.0"
