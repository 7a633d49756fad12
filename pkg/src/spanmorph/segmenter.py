"""Trie-guided enumeration of morph splits.

A shape pattern is a sequence of category tags, one per piece. Each piece
must be a surface attested under its tag; the search walks that tag's trie
from the current offset so only attested prefixes are ever extended.
"""
from dataclasses import dataclass
from typing import Tuple

PATTERNS = (
    ("w",),
    ("vl", "vm"),
    ("wl",),
    ("wl", "nn"),
    ("nl", "ng"),
    ("nl", "ng", "nn"),
    ("nl", "nn"),
)


@dataclass(frozen=True)
class Piece:
    text: str
    entries: Tuple


@dataclass(frozen=True)
class Segmentation:
    pattern: Tuple[str, ...]
    pieces: Tuple[Piece, ...]

    @property
    def texts(self):
        return tuple(p.text for p in self.pieces)

    def __str__(self):
        return f"[{','.join(self.pattern)}] {'|'.join(self.texts)}"


def _check_word(word):
    if not isinstance(word, str) or not word:
        raise ValueError("word must be a non-empty string")


def segment(lex, word, pattern, counter=None):
    """All splits of ``word`` matching ``pattern``, ordered by piece lengths.

    Only a final ``vm`` piece may be empty, and only when the lexicon holds an
    empty-surface ending. ``counter`` (a ``StepCounter``) accumulates trie steps.
    """
    _check_word(word)
    pattern = tuple(pattern)
    if pattern not in PATTERNS:
        raise ValueError(f"unknown shape pattern {pattern!r}")
    tries = [lex.tries[tag] for tag in pattern]
    last = len(pattern) - 1
    n = len(word)
    out = []

    def extend(k, start, acc):
        if k == last:
            if start == n:
                if pattern[k] == "vm" and lex.has_empty_vm:
                    entries = tries[k].root.values
                    if entries:
                        out.append(acc + [Piece("", tuple(entries))])
                return
            for end, entries in tries[k].prefixes(word, start, counter):
                if end == n:
                    out.append(acc + [Piece(word[start:end], tuple(entries))])
            return
        for end, entries in tries[k].prefixes(word, start, counter):
            extend(k + 1, end, acc + [Piece(word[start:end], tuple(entries))])

    extend(0, 0, [])
    return [Segmentation(pattern, tuple(pieces)) for pieces in out]


def segment_all(lex, word, counter=None):
    _check_word(word)
    out = []
    for pattern in PATTERNS:
        out.extend(segment(lex, word, pattern, counter))
    return out
