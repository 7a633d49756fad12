"""Rule application for analysis and generation.

Six rules combine lexicon entries into words: two for verbs (explicit
stem-type list, or the wildcard list of regular stems) and four for nominals
(stem+gender, word+number, stem+plu2, bare word). Analysis runs them over
segmentations; generation runs the same constraint checks over the entries
of one lemma.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple, Union

from . import featcodes
from .errors import UnknownLemma
from .featcodes import FinVerbFeatures, PersonNumber, TenseMood
from .lexicon import (
    Category, FullWordEntry, Gender, NominalFeatures, NominalStemEntry, Number,
    NumberType, NumberableWordEntry, VerbEndingEntry, VerbStemEntry,
)
from .segmenter import segment_all


class Rule(str, Enum):
    W_DIRECT = "W_DIRECT"
    VERB_EXPLICIT = "VERB_EXPLICIT"
    VERB_REGULAR = "VERB_REGULAR"
    NOM1 = "NOM1"        # stem + gender suffix, promoted to a word
    NOM2 = "NOM2"        # numberable word + number suffix
    NOM3 = "NOM3"        # plural allomorph stem + plu2 suffix
    NOM4 = "NOM4"        # numberable word as is
    NOM1_2 = "NOM1+2"    # stem + gender suffix + number suffix

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class FeatureBundle:
    lemma: str
    category: Category
    features: Union[FinVerbFeatures, NominalFeatures]

    @property
    def is_verbal(self):
        return isinstance(self.features, FinVerbFeatures)


@dataclass(frozen=True)
class Analysis:
    bundle: FeatureBundle
    rule: Rule
    entries: Tuple


@dataclass(frozen=True)
class GenQuery:
    lemma: str
    category: Optional[Category] = None
    person_number: Optional[PersonNumber] = None
    tense_mood: Optional[TenseMood] = None
    gender: Optional[Gender] = None
    number: Optional[Number] = None

    @classmethod
    def from_bundle(cls, bundle):
        f = bundle.features
        if bundle.is_verbal:
            return cls(bundle.lemma, bundle.category, f.person_number, f.tense_mood)
        return cls(bundle.lemma, bundle.category, gender=f.gender, number=f.number)


# --- rules ---------------------------------------------------------------

def verb_compatible(stem, ending):
    if stem.conjugation not in ending.conjugations:
        return False
    if ending.suffix_type not in stem.suffix_types:
        return False
    return stem.stem_types == {featcodes.WILDCARD} or ending.stem_type in stem.stem_types


def verb_rule(stem, ending):
    return Rule.VERB_REGULAR if stem.stem_types == {featcodes.WILDCARD} else Rule.VERB_EXPLICIT


def nominal_rule1(stem, g):
    if g.gender_type not in stem.gender_types:
        return None
    return NumberableWordEntry(
        stem.lemma, stem.category, frozenset({NumberType.plu1}),
        g.gender, g.number, stem.surface + g.surface,
    )


def nominal_rule2(word, n):
    if n.number_type not in word.number_types:
        return None
    return FullWordEntry(
        word.lemma, word.category, NominalFeatures(word.gender, n.number),
        word.surface + n.surface,
    )


def nominal_rule3(stem, n):
    if n.number_type is not NumberType.plu2 or NumberType.plu2 not in stem.number_types:
        return None
    return FullWordEntry(
        stem.lemma, stem.category, NominalFeatures(stem.gender, n.number),
        stem.surface + n.surface,
    )


def nominal_rule4(word):
    return FullWordEntry(
        word.lemma, word.category, NominalFeatures(word.gender, word.number), word.surface,
    )


def _bundle(word):
    return FeatureBundle(word.lemma, word.category, word.features)


def _verb_bundle(stem, ending):
    return FeatureBundle(
        stem.lemma, stem.category, FinVerbFeatures(ending.person_number, ending.tense_mood),
    )


# --- derivations over entry tuples ---------------------------------------

def derive(pattern, combo):
    """Apply the rule(s) for ``pattern`` to one tuple of entries.

    Returns ``(surface, bundle, rule)`` or None when a constraint fails.
    """
    if pattern == ("w",):
        (w,) = combo
        return w.surface, _bundle(w), Rule.W_DIRECT
    if pattern == ("vl", "vm"):
        stem, ending = combo
        if not verb_compatible(stem, ending):
            return None
        return stem.surface + ending.surface, _verb_bundle(stem, ending), verb_rule(stem, ending)
    if pattern == ("wl",):
        w = nominal_rule4(combo[0])
        return w.surface, _bundle(w), Rule.NOM4
    if pattern == ("wl", "nn"):
        w = nominal_rule2(*combo)
        return w and (w.surface, _bundle(w), Rule.NOM2)
    if pattern == ("nl", "ng"):
        wl = nominal_rule1(*combo)
        if wl is None:
            return None
        w = nominal_rule4(wl)
        return w.surface, _bundle(w), Rule.NOM1
    if pattern == ("nl", "ng", "nn"):
        stem, g, n = combo
        wl = nominal_rule1(stem, g)
        w = wl and nominal_rule2(wl, n)
        return w and (w.surface, _bundle(w), Rule.NOM1_2)
    if pattern == ("nl", "nn"):
        w = nominal_rule3(*combo)
        return w and (w.surface, _bundle(w), Rule.NOM3)
    raise ValueError(f"unknown shape pattern {pattern!r}")


def _products(lists):
    if not lists:
        yield ()
        return
    for head in lists[0]:
        for rest in _products(lists[1:]):
            yield (head,) + rest


def analyze(lex, word, counter=None):
    out, seen = [], set()
    for seg in segment_all(lex, word, counter):
        for combo in _products([p.entries for p in seg.pieces]):
            result = derive(seg.pattern, combo)
            if result is None:
                continue
            _, bundle, rule = result
            a = Analysis(bundle, rule, combo)
            if a not in seen:
                seen.add(a)
                out.append(a)
    return out


# --- generation -----------------------------------------------------------

def _unify(lexical, query):
    """Unify a lexicon value (None = unbound) with a query value (None = any)."""
    if query is None:
        return True, lexical
    if lexical is None or lexical is query:
        return True, query
    return False, None


def _match(bundle, q):
    if q.category is not None and bundle.category is not q.category:
        return None
    f = bundle.features
    if bundle.is_verbal:
        if q.gender is not None or q.number is not None:
            return None
        if q.person_number is not None and f.person_number is not q.person_number:
            return None
        if q.tense_mood is not None and f.tense_mood is not q.tense_mood:
            return None
        return bundle
    if q.person_number is not None or q.tense_mood is not None:
        return None
    ok_g, gender = _unify(f.gender, q.gender)
    ok_n, number = _unify(f.number, q.number)
    if not (ok_g and ok_n):
        return None
    return FeatureBundle(bundle.lemma, bundle.category, NominalFeatures(gender, number))


def derivations(lex, lemma):
    """Yield ``(surface, bundle, rule, entries)`` for every word form of ``lemma``."""
    entries = lex.by_lemma(lemma)
    for e in entries:
        if isinstance(e, FullWordEntry):
            yield e.surface, _bundle(e), Rule.W_DIRECT, (e,)
        elif isinstance(e, VerbStemEntry):
            for vm in lex.entries("vm"):
                if verb_compatible(e, vm):
                    yield e.surface + vm.surface, _verb_bundle(e, vm), verb_rule(e, vm), (e, vm)
        elif isinstance(e, NumberableWordEntry):
            w = nominal_rule4(e)
            yield w.surface, _bundle(w), Rule.NOM4, (e,)
            for nn in lex.entries("nn"):
                w = nominal_rule2(e, nn)
                if w is not None:
                    yield w.surface, _bundle(w), Rule.NOM2, (e, nn)
        elif isinstance(e, NominalStemEntry):
            for ng in lex.entries("ng"):
                wl = nominal_rule1(e, ng)
                if wl is None:
                    continue
                w = nominal_rule4(wl)
                yield w.surface, _bundle(w), Rule.NOM1, (e, ng)
                for nn in lex.entries("nn"):
                    w = nominal_rule2(wl, nn)
                    if w is not None:
                        yield w.surface, _bundle(w), Rule.NOM1_2, (e, ng, nn)
            for nn in lex.entries("nn"):
                w = nominal_rule3(e, nn)
                if w is not None:
                    yield w.surface, _bundle(w), Rule.NOM3, (e, nn)


def generate(lex, q):
    if isinstance(q, str):
        q = GenQuery(q)
    if not q.lemma:
        raise ValueError("query lemma must be non-empty")
    if not lex.by_lemma(q.lemma):
        raise UnknownLemma(q.lemma)
    out = set()
    for surface, bundle, _, _ in derivations(lex, q.lemma):
        matched = _match(bundle, q)
        if matched is not None:
            out.add((surface, matched))
    return out


NOMINAL_CELLS = tuple((g, n) for g in Gender for n in Number)


@dataclass
class Paradigm:
    """Surface sets per slot; ``verbal`` is keyed by code, ``nominal`` by (gender, number)."""
    lemma: str
    verbal: Optional[dict] = None
    nominal: Optional[dict] = None


def generate_paradigm(lex, lemma):
    entries = lex.by_lemma(lemma)
    if not entries:
        raise UnknownLemma(lemma)
    forms = generate(lex, GenQuery(lemma))
    has_verbal = any(b.is_verbal for _, b in forms) or any(
        isinstance(e, VerbStemEntry) or (isinstance(e, FullWordEntry) and e.is_verbal)
        for e in entries
    )
    has_nominal = any(not b.is_verbal for _, b in forms)
    p = Paradigm(lemma)
    if has_verbal:
        p.verbal = {code: set() for code in featcodes.ALL_CODES}
        for surface, b in forms:
            if b.is_verbal:
                p.verbal[featcodes.encode_features(b.features)].add(surface)
    if has_nominal:
        p.nominal = {}
        for g, n in NOMINAL_CELLS:
            q = GenQuery(lemma, gender=g, number=n)
            p.nominal[(g, n)] = {s for s, b in generate(lex, q) if not b.is_verbal}
    return p
