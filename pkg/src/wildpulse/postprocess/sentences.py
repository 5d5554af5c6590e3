"""Rule-based sentence segmentation.

Splits on terminal punctuation (. ! ?) with two guards: a shipped
abbreviation list ("Dr.", "e.g.", single initials like "R. affinis") and
decimal numbers ("pH 7.4"). Sentences are produced by slicing the input, so
concatenating them reproduces the text minus inter-sentence whitespace.
"""

from __future__ import annotations

import re

from wildpulse.datafiles import load_abbreviations

_TERMINAL = re.compile(r"[.!?]+[\"'”’)\]]*")


def _token_before(text: str, idx: int) -> str:
    """The word token (letters and internal dots) ending just before idx."""
    j = idx
    while j > 0 and (text[j - 1].isalpha() or text[j - 1] == "."):
        j -= 1
    return text[j:idx]


def split_sentences(text: str) -> list[str]:
    if not text or not text.strip():
        return []
    abbreviations = load_abbreviations()

    boundaries: list[int] = []
    for match in _TERMINAL.finditer(text):
        end = match.end()
        if end >= len(text):
            break
        # the break happens only before following whitespace
        if not text[end].isspace():
            continue
        punct = match.group()
        if punct.startswith("."):
            before = _token_before(text, match.start())
            token = before.lower().rstrip(".")
            if token and len(token.replace(".", "")) == 1:
                continue  # initials: "R. affinis", "J. Smith"
            if token in abbreviations:
                continue
            # decimals ("pH 7.4") never reach here: their dot is not
            # followed by whitespace, which the check above already requires
        boundaries.append(end)

    sentences = []
    start = 0
    for b in boundaries:
        chunk = text[start:b].strip()
        if chunk:
            sentences.append(chunk)
        start = b
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return sentences
