"""Canonical name handling and shared trailing-substring extraction.

All names flowing through the taxonomy are canonical: lowercased, single-space
separated, with letter-adjacent hyphens folded to spaces ("horseshoe-bat" and
"horseshoe bat" become the same string). Substring relations are defined over
whole words only, so "bat" is a suffix of "fruit bat" but never of "combat".
"""

from __future__ import annotations

import re

from wildpulse.errors import InvalidName

_HYPHEN_BETWEEN_LETTERS = re.compile(r"(?<=[^\W\d_])-(?=[^\W\d_])", re.UNICODE)
_WHITESPACE = re.compile(r"\s+")


def normalize_name(raw: str) -> str:
    """Return the canonical form of a species/common name.

    Lowercase, trimmed, internal whitespace collapsed, hyphens between letters
    replaced by spaces; apostrophes are kept ("bechstein's bat").

    Raises:
        InvalidName: if nothing remains after normalization.
    """
    text = raw.lower()
    text = _HYPHEN_BETWEEN_LETTERS.sub(" ", text)
    text = _WHITESPACE.sub(" ", text).strip()
    if not text:
        raise InvalidName(f"name empty after normalization: {raw!r}")
    return text


def words(name: str) -> list[str]:
    """Split a canonical name into its words."""
    return name.split(" ")


def word_suffixes(name: str, proper: bool = True) -> list[str]:
    """All whole-word trailing substrings of ``name``, longest first.

    With ``proper`` (default), the name itself is excluded.
    """
    toks = words(name)
    start = 1 if proper else 0
    return [" ".join(toks[i:]) for i in range(start, len(toks))]


def is_word_suffix(candidate: str, name: str, proper: bool = False) -> bool:
    """True if ``candidate`` is a whole-word trailing substring of ``name``."""
    ctoks = words(candidate)
    ntoks = words(name)
    if proper and len(ctoks) >= len(ntoks):
        return False
    if len(ctoks) > len(ntoks):
        return False
    return ntoks[len(ntoks) - len(ctoks):] == ctoks


def word_contains(haystack: str, needle: str) -> bool:
    """True if ``needle``'s words appear contiguously inside ``haystack``."""
    ntoks = words(needle)
    htoks = words(haystack)
    n, h = len(ntoks), len(htoks)
    if n > h:
        return False
    return any(htoks[i:i + n] == ntoks for i in range(h - n + 1))


class _TrieNode:
    __slots__ = ("children", "ends_here", "through")

    def __init__(self):
        self.children: dict[str, _TrieNode] = {}
        self.ends_here = 0   # names whose reversed path ends at this node
        self.through = 0     # names continuing past this node (strictly longer)


def _shared_suffixes_once(names: set[str]) -> set[str]:
    """One round of shared-suffix extraction over ``names``.

    A reversed-word trie counts, per trailing substring, how many distinct
    names end exactly there and how many pass through to longer paths. A
    suffix qualifies when supported by >= 2 distinct names, at least one of
    which is strictly longer (guaranteed whenever two distinct supporters
    exist, since equality can hold for at most one of them).
    """
    root = _TrieNode()
    for name in names:
        toks = words(name)
        node = root
        for depth, tok in enumerate(reversed(toks)):
            node = node.children.setdefault(tok, _TrieNode())
            if depth == len(toks) - 1:
                node.ends_here += 1
            else:
                node.through += 1

    found: set[str] = set()

    def walk(node: _TrieNode, rev_path: list[str]) -> None:
        for tok, child in node.children.items():
            rev_path.append(tok)
            support = child.ends_here + child.through
            if support >= 2 and child.through >= 1:
                found.add(" ".join(reversed(rev_path)))
            walk(child, rev_path)
            rev_path.pop()

    walk(root, [])
    return found


def extract_shared_suffixes(names: set[str]) -> set[str]:
    """Whole-word trailing substrings shared by >= 2 distinct input names.

    Output includes nested suffixes ("horseshoe bat" and "bat") and runs to
    fixpoint, so substrings shared only between previously found suffixes are
    also reported. Every result is strictly shorter than at least one input
    or suffix that contains it.
    """
    pool = set(names)
    result: set[str] = set()
    while True:
        new = _shared_suffixes_once(pool) - result
        if not new:
            return result
        result |= new
        pool |= new
