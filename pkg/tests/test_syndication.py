"""Syndication verdicts vs a brute-force all-pairs oracle."""

import random
from datetime import datetime, timedelta, timezone

from wildpulse.postprocess import ArticleText, mark_syndication
from wildpulse.postprocess.tfidf import cosine, tfidf_vectors

WORDS = [
    "pangolin", "forest", "ranger", "poacher", "rescue", "market", "border",
    "officials", "seized", "scales", "wildlife", "trade", "endangered",
    "habitat", "survey", "village", "river", "night", "patrol", "report",
]


def brute_force_verdicts(articles, threshold=0.95, window_days=60):
    """Independent oracle: all-pairs comparison, no rolling window."""
    ordered = sorted(articles, key=lambda a: (a.published_at, a.url))
    vectors = tfidf_vectors([a.text for a in ordered])
    out = []
    for i, art in enumerate(ordered):
        matches = []
        for j in range(len(ordered)):
            if j == i:
                continue
            earlier = (ordered[j].published_at, ordered[j].url) < (
                art.published_at,
                art.url,
            )
            in_window = (
                art.published_at - ordered[j].published_at
            ) <= timedelta(days=window_days) and ordered[
                j
            ].published_at <= art.published_at
            if earlier and in_window:
                sim = cosine(vectors[i], vectors[j])
                if sim > threshold:
                    matches.append((ordered[j].published_at, ordered[j].url, sim))
        if matches:
            matches.sort(key=lambda m: (m[0], m[1]))
            out.append((art.url, False, matches[0][1]))
        else:
            out.append((art.url, True, None))
    return out


def make_corpus(n=200, dup_fraction=0.35, seed=42):
    """Synthetic corpus with planted near-duplicates (2-10% token edits)."""
    rng = random.Random(seed)
    base = datetime(2020, 1, 1, tzinfo=timezone.utc)
    articles = []
    originals = []
    for i in range(n):
        if originals and rng.random() < dup_fraction:
            src_idx = rng.randrange(len(originals))
            src = originals[src_idx]
            tokens = src.text.split()
            n_edits = max(1, int(len(tokens) * rng.uniform(0.02, 0.10)))
            for _ in range(n_edits):
                tokens[rng.randrange(len(tokens))] = rng.choice(WORDS)
            delay = rng.randint(1, 90)
            art = ArticleText(
                url=f"http://news.test/{i:03d}",
                published_at=src.published_at + timedelta(days=delay),
                text=" ".join(tokens),
            )
        else:
            text = " ".join(rng.choices(WORDS, k=rng.randint(120, 240)))
            art = ArticleText(
                url=f"http://news.test/{i:03d}",
                published_at=base + timedelta(days=rng.randint(0, 300)),
                text=text,
            )
            originals.append(art)
        articles.append(art)
    return articles


class TestMarkSyndication:
    def test_oracle_equivalence_on_planted_corpus(self):
        articles = make_corpus(n=200)
        got = mark_syndication(articles)
        want = brute_force_verdicts(articles)
        assert [(v.url, v.is_original, v.duplicate_of) for v in got] == want
        assert any(not v.is_original for v in got)

    def test_near_duplicate_ten_days_apart(self):
        rng = random.Random(1)
        tokens = [rng.choice(WORDS) for _ in range(200)]
        edited = list(tokens)
        for k in range(4):  # 2% edit
            edited[rng.randrange(len(edited))] = rng.choice(WORDS)
        t0 = datetime(2020, 3, 1, tzinfo=timezone.utc)
        a = ArticleText("http://a.test/1", t0, " ".join(tokens))
        b = ArticleText("http://b.test/2", t0 + timedelta(days=10), " ".join(edited))
        verdicts = mark_syndication([b, a])
        assert verdicts[0].is_original
        assert not verdicts[1].is_original
        assert verdicts[1].duplicate_of == "http://a.test/1"
        assert verdicts[1].similarity > 0.95

    def test_identical_text_three_months_apart_both_original(self):
        t0 = datetime(2020, 1, 10, tzinfo=timezone.utc)
        text = " ".join(WORDS * 10)
        a = ArticleText("http://a.test/1", t0, text)
        b = ArticleText("http://b.test/2", t0 + timedelta(days=91), text)
        verdicts = mark_syndication([a, b])
        assert all(v.is_original for v in verdicts)

    def test_similarity_exactly_at_threshold_is_original(self):
        t0 = datetime(2020, 1, 10, tzinfo=timezone.utc)
        a = ArticleText("http://a.test/1", t0, "alpha beta gamma")
        b = ArticleText("http://b.test/2", t0 + timedelta(days=1), "alpha beta delta")
        vecs = tfidf_vectors([a.text, b.text])
        sim = cosine(vecs[0], vecs[1])
        verdicts = mark_syndication([a, b], threshold=sim)
        assert all(v.is_original for v in verdicts)

    def test_window_boundary_inclusive_at_sixty_days(self):
        t0 = datetime(2020, 1, 1, tzinfo=timezone.utc)
        text = " ".join(WORDS * 12)
        a = ArticleText("http://a.test/1", t0, text)
        b = ArticleText("http://b.test/2", t0 + timedelta(days=60), text)
        verdicts = mark_syndication([a, b])
        assert verdicts[1].duplicate_of == "http://a.test/1"

    def test_duplicate_graph_acyclic_and_dates_ordered(self):
        articles = make_corpus(n=120, seed=7)
        verdicts = mark_syndication(articles)
        by_url = {a.url: a for a in articles}
        vmap = {v.url: v for v in verdicts}
        for v in verdicts:
            if v.duplicate_of is not None:
                assert by_url[v.duplicate_of].published_at <= by_url[v.url].published_at
                # walk the chain; must terminate at an original
                seen = set()
                cur = v
                while cur.duplicate_of is not None:
                    assert cur.url not in seen
                    seen.add(cur.url)
                    cur = vmap[cur.duplicate_of]

    def test_duplicate_ties_resolve_to_earliest_then_url(self):
        t0 = datetime(2020, 5, 1, tzinfo=timezone.utc)
        text = " ".join(WORDS * 10)
        a = ArticleText("http://a.test/x", t0, text)
        b = ArticleText("http://b.test/y", t0, text)  # same instant, later url
        c = ArticleText("http://c.test/z", t0 + timedelta(days=5), text)
        verdicts = mark_syndication([c, b, a])
        vmap = {v.url: v for v in verdicts}
        assert vmap["http://a.test/x"].is_original
        assert vmap["http://b.test/y"].duplicate_of == "http://a.test/x"
        assert vmap["http://c.test/z"].duplicate_of == "http://a.test/x"
