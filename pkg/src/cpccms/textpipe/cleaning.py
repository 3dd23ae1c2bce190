"""Document cleaning and tokenization for the text-classification pipeline."""

from __future__ import annotations

import html
import re

_LINK_RE = re.compile(r"(?:https?://|www\.)\S+")
_MENTION_RE = re.compile(r"@\w+")
_HASHTAG_RE = re.compile(r"#\w+")
_RT_RE = re.compile(r"\bRT\b")  # retweet marker, deliberately case-sensitive
_NON_ALPHA_RE = re.compile(r"[^a-z]+")
_WHITESPACE_RE = re.compile(r"\s+")
_TOKEN_RE = re.compile(r"[^\W_]+")

_MAX_PASSES = 8


def _decode_entities(text: str) -> str:
    # Unescape until stable so nested encodings ("&amp;amp;") fully resolve.
    for _ in range(_MAX_PASSES):
        decoded = html.unescape(text)
        if decoded == text:
            return decoded
        text = decoded
    return text


def _clean_pass(text: str, keep_punctuation: bool) -> str:
    text = _decode_entities(text)
    text = _LINK_RE.sub(" ", text)
    text = _MENTION_RE.sub(" ", text)
    text = _HASHTAG_RE.sub(" ", text)
    text = _RT_RE.sub(" ", text)
    text = text.lower()
    if not keep_punctuation:
        text = _NON_ALPHA_RE.sub(" ", text)
    return _WHITESPACE_RE.sub(" ", text).strip()


def clean(text: str, keep_punctuation: bool = False) -> str:
    """Normalize a raw document: drop retweet markers, @-mentions, #-tags and
    links, decode HTML entities, lowercase, optionally strip everything but
    letters, and collapse whitespace.

    The pass repeats until the text is stable, which makes ``clean``
    idempotent by construction. Entities are decoded before the lowercase
    step so numeric escapes such as ``&#65;`` cannot reintroduce uppercase.
    """
    previous = None
    for _ in range(_MAX_PASSES):
        if text == previous:
            break
        previous = text
        text = _clean_pass(text, keep_punctuation)
    return text


def tokenize(text: str) -> list[str]:
    """Split a cleaned document on whitespace and punctuation.

    Punctuation never appears in the output; an empty document yields an
    empty list.
    """
    return _TOKEN_RE.findall(text)
