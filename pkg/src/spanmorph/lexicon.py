"""Allomorph lexicon: entry types, the tab-separated file format, and the loader.

One entry per line, fields separated by a single TAB, the first field is the
category tag::

    w    lemma  cat  pn|gender  tm|number  surface
    wl   lemma  cat  number_types  gender  number  surface
    vl   lemma  cat  conjugation  stem_types  suffix_types  surface
    nl   lemma  cat  gender_types  number_types  gender  number  surface
    vm   pn  tm  finiteness  conjugations  stem_type  suffix_type  surface
    ng   gender_type  gender  number  surface
    nn   number_type  number  surface

``#`` starts a comment line, ``_`` leaves gender/number unbound, ``NULL`` is
the empty surface (verb endings only) and list fields are comma separated.
"""
import io
import logging
import unicodedata
from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Optional, Union

from . import featcodes
from .errors import LexiconError, ParseError, UnknownCode, UnknownValue
from .featcodes import FinVerbFeatures, PersonNumber, TenseMood
from .trie import Trie

log = logging.getLogger(__name__)

TAGS = ("w", "wl", "vl", "nl", "vm", "ng", "nn")


class _Atom(str, Enum):
    def __str__(self):
        return self.value


class Category(_Atom):
    v = "v"
    n = "n"
    adj = "adj"


class Gender(_Atom):
    masc = "masc"
    fem = "fem"


class Number(_Atom):
    sing = "sing"
    plu = "plu"


class GenderType(_Atom):
    mas1 = "mas1"
    mas2 = "mas2"
    fem_t = "fem"
    no = "no"


class NumberType(_Atom):
    plu1 = "plu1"
    plu2 = "plu2"
    no = "no"


class SuffixType(_Atom):
    reg = "reg"
    pres = "pres"
    pret1 = "pret1"
    pret2 = "pret2"
    fut_cond = "fut_cond"
    imp_subj = "imp_subj"
    imper = "imper"
    infin = "infin"
    ger = "ger"
    part1 = "part1"
    part2 = "part2"


class Finiteness(_Atom):
    fin = "fin"
    nofin = "nofin"


UNBOUND = None
_UNBOUND_ATOM = "_"
_EMPTY_SURFACE = "NULL"

# "no" is accepted as an alias for the non-finite person.
_PN_ALIASES = {"no": PersonNumber.none}


@dataclass(frozen=True)
class NominalFeatures:
    gender: Optional[Gender]
    number: Optional[Number]


@dataclass(frozen=True)
class FullWordEntry:
    lemma: str
    category: Category
    features: Union[FinVerbFeatures, NominalFeatures]
    surface: str
    tag = "w"

    @property
    def is_verbal(self):
        return isinstance(self.features, FinVerbFeatures)


@dataclass(frozen=True)
class NumberableWordEntry:
    lemma: str
    category: Category
    number_types: FrozenSet[NumberType]
    gender: Optional[Gender]
    number: Optional[Number]
    surface: str
    tag = "wl"


@dataclass(frozen=True)
class VerbStemEntry:
    lemma: str
    category: Category
    conjugation: int
    stem_types: FrozenSet[int]
    suffix_types: FrozenSet[SuffixType]
    surface: str
    tag = "vl"


@dataclass(frozen=True)
class NominalStemEntry:
    lemma: str
    category: Category
    gender_types: FrozenSet[GenderType]
    number_types: FrozenSet[NumberType]
    gender: Optional[Gender]
    number: Optional[Number]
    surface: str
    tag = "nl"


@dataclass(frozen=True)
class VerbEndingEntry:
    person_number: PersonNumber
    tense_mood: TenseMood
    finiteness: Finiteness
    conjugations: FrozenSet[int]
    stem_type: int
    suffix_type: SuffixType
    surface: str
    tag = "vm"


@dataclass(frozen=True)
class GenderSuffixEntry:
    gender_type: GenderType
    gender: Gender
    number: Number
    surface: str
    tag = "ng"


@dataclass(frozen=True)
class NumberSuffixEntry:
    number_type: NumberType
    number: Number
    surface: str
    tag = "nn"


LexEntry = Union[
    FullWordEntry, NumberableWordEntry, VerbStemEntry, NominalStemEntry,
    VerbEndingEntry, GenderSuffixEntry, NumberSuffixEntry,
]

_ARITY = {"w": 5, "wl": 6, "vl": 6, "nl": 7, "vm": 7, "ng": 4, "nn": 3}


class _Fields:
    """Cursor over the fields of one line, raising located errors."""

    def __init__(self, fields, lineno):
        self.fields = fields
        self.lineno = lineno
        self.pos = 0

    def _next(self):
        self.pos += 1
        text = self.fields[self.pos]
        if not text:
            raise ParseError("empty field", self.lineno, self.pos + 1)
        return text

    def _fail(self, exc_type, message):
        return exc_type(message, self.lineno, self.pos + 1)

    def atom(self, enum, aliases=None):
        text = self._next()
        if aliases and text in aliases:
            return aliases[text]
        try:
            return enum(text)
        except ValueError:
            raise self._fail(UnknownValue, f"unknown {enum.__name__} {text!r}") from None

    def unifiable(self, enum):
        if self.fields[self.pos + 1] == _UNBOUND_ATOM:
            self.pos += 1
            return UNBOUND
        return self.atom(enum)

    def atom_set(self, enum):
        text = self._next()
        out = set()
        for part in text.split(","):
            try:
                out.add(enum(part))
            except ValueError:
                raise self._fail(UnknownValue, f"unknown {enum.__name__} {part!r}") from None
        return frozenset(out)

    def conjugation(self):
        text = self._next()
        if text not in ("1", "2", "3"):
            raise self._fail(UnknownValue, f"conjugation must be 1, 2 or 3, got {text!r}")
        return int(text)

    def conjugations(self):
        text = self._next()
        parts = text.split(",")
        if any(p not in ("1", "2", "3") for p in parts):
            raise self._fail(UnknownValue, f"bad conjugation list {text!r}")
        return frozenset(int(p) for p in parts)

    def code(self, allow_wildcard=False):
        text = self._next()
        try:
            code = featcodes.parse_code(text)
        except UnknownCode as e:
            raise self._fail(UnknownCode, e.message) from None
        if code == featcodes.WILDCARD and not allow_wildcard:
            raise self._fail(UnknownCode, "wildcard 100 is not a concrete code")
        return code

    def codes(self):
        text = self._next()
        out = set()
        for part in text.split(","):
            try:
                out.add(featcodes.parse_code(part))
            except UnknownCode as e:
                raise self._fail(UnknownCode, e.message) from None
        return frozenset(out)

    def text(self):
        return unicodedata.normalize("NFC", self._next())

    def surface(self, allow_empty=False):
        text = self._next()
        if text == _EMPTY_SURFACE:
            if not allow_empty:
                raise self._fail(ParseError, "empty surface only allowed on verb endings")
            return ""
        return unicodedata.normalize("NFC", text)


def parse_entry(line, lineno=None):
    line = line.rstrip("\r\n")
    fields = line.split("\t")
    tag = fields[0]
    if tag not in _ARITY:
        raise UnknownValue(f"unknown category tag {tag!r}", lineno, 1)
    if len(fields) != _ARITY[tag] + 1:
        raise ParseError(
            f"{tag} entry needs {_ARITY[tag]} fields after the tag, got {len(fields) - 1}",
            lineno,
        )
    f = _Fields(fields, lineno)

    if tag == "w":
        lemma, cat = f.text(), f.atom(Category)
        if cat is Category.v:
            feats = FinVerbFeatures(f.atom(PersonNumber, _PN_ALIASES), f.atom(TenseMood))
        else:
            feats = NominalFeatures(f.unifiable(Gender), f.unifiable(Number))
        return FullWordEntry(lemma, cat, feats, f.surface())
    if tag == "wl":
        return NumberableWordEntry(
            f.text(), f.atom(Category), f.atom_set(NumberType),
            f.unifiable(Gender), f.unifiable(Number), f.surface(),
        )
    if tag == "vl":
        return VerbStemEntry(
            f.text(), f.atom(Category), f.conjugation(), f.codes(),
            f.atom_set(SuffixType), f.surface(),
        )
    if tag == "nl":
        return NominalStemEntry(
            f.text(), f.atom(Category), f.atom_set(GenderType), f.atom_set(NumberType),
            f.unifiable(Gender), f.unifiable(Number), f.surface(),
        )
    if tag == "vm":
        return VerbEndingEntry(
            f.atom(PersonNumber, _PN_ALIASES), f.atom(TenseMood), f.atom(Finiteness),
            f.conjugations(), f.code(), f.atom(SuffixType), f.surface(allow_empty=True),
        )
    if tag == "ng":
        return GenderSuffixEntry(f.atom(GenderType), f.atom(Gender), f.atom(Number), f.surface())
    return NumberSuffixEntry(f.atom(NumberType), f.atom(Number), f.surface())


def _atom(value):
    return _UNBOUND_ATOM if value is None else value.value


def _atoms(values):
    order = {v: i for i, v in enumerate(type(next(iter(values))))}
    return ",".join(v.value for v in sorted(values, key=order.__getitem__))


def _ints(values, fmt=str):
    return ",".join(fmt(v) for v in sorted(values))


def render_entry(entry):
    surface = entry.surface or _EMPTY_SURFACE
    if isinstance(entry, FullWordEntry):
        feats = entry.features
        if entry.is_verbal:
            middle = [feats.person_number.value, feats.tense_mood.value]
        else:
            middle = [_atom(feats.gender), _atom(feats.number)]
        fields = [entry.lemma, entry.category.value, *middle]
    elif isinstance(entry, NumberableWordEntry):
        fields = [entry.lemma, entry.category.value, _atoms(entry.number_types),
                  _atom(entry.gender), _atom(entry.number)]
    elif isinstance(entry, VerbStemEntry):
        fields = [entry.lemma, entry.category.value, str(entry.conjugation),
                  _ints(entry.stem_types, featcodes.format_code), _atoms(entry.suffix_types)]
    elif isinstance(entry, NominalStemEntry):
        fields = [entry.lemma, entry.category.value, _atoms(entry.gender_types),
                  _atoms(entry.number_types), _atom(entry.gender), _atom(entry.number)]
    elif isinstance(entry, VerbEndingEntry):
        fields = [entry.person_number.value, entry.tense_mood.value, entry.finiteness.value,
                  _ints(entry.conjugations), featcodes.format_code(entry.stem_type),
                  entry.suffix_type.value]
    elif isinstance(entry, GenderSuffixEntry):
        fields = [entry.gender_type.value, entry.gender.value, entry.number.value]
    elif isinstance(entry, NumberSuffixEntry):
        fields = [entry.number_type.value, entry.number.value]
    else:
        raise TypeError(f"not a lexicon entry: {entry!r}")
    return "\t".join([entry.tag, *fields, surface])


class Lexicon:
    """Immutable collection of entries with one surface trie per category tag."""

    def __init__(self, entries=(), warnings=()):
        self._entries = {tag: [] for tag in TAGS}
        self.tries = {tag: Trie() for tag in TAGS}
        self._by_lemma = {}
        for e in entries:
            self._entries[e.tag].append(e)
            self.tries[e.tag].insert(e.surface, e)
            lemma = getattr(e, "lemma", None)
            if lemma is not None:
                self._by_lemma.setdefault(lemma, []).append(e)
        self._entries = {tag: tuple(v) for tag, v in self._entries.items()}
        self.has_empty_vm = any(not e.surface for e in self._entries["vm"])
        self.warnings = list(warnings)

    def __len__(self):
        return sum(len(v) for v in self._entries.values())

    def entries(self, tag=None):
        if tag is None:
            return tuple(e for t in TAGS for e in self._entries[t])
        return self._entries[tag]

    def lookup(self, tag, surface):
        return self.tries[tag].get(surface)

    def lemmas(self):
        return self._by_lemma.keys()

    def by_lemma(self, lemma):
        return tuple(self._by_lemma.get(lemma, ()))

    def alphabet(self):
        return sorted({ch for e in self.entries() for ch in e.surface})


def lookup_exact(lex, tag, surface):
    if tag not in TAGS:
        raise ValueError(f"unknown category tag {tag!r}")
    return lex.lookup(tag, surface)


def iter_entries(lines):
    """Parse ``(lineno, text)`` pairs, yielding entries or ParseErrors in order."""
    for lineno, line in lines:
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            yield parse_entry(line, lineno)
        except ParseError as e:
            yield e


def load_lexicon(source):
    """Load a lexicon from a binary stream, all or nothing.

    Every malformed line is collected into one ``LexiconError``. Duplicate
    entries are kept once and reported in ``Lexicon.warnings``.
    """
    def lines():
        for lineno, raw in enumerate(source, start=1):
            try:
                yield lineno, raw.decode("utf-8")
            except UnicodeDecodeError as e:
                yield lineno, ParseError(f"invalid UTF-8: {e.reason}", lineno)

    entries, errors, warnings = [], [], []
    seen = {}
    for lineno, line in lines():
        if isinstance(line, ParseError):
            errors.append(line)
            continue
        for item in iter_entries([(lineno, line)]):
            if isinstance(item, ParseError):
                errors.append(item)
            elif item in seen:
                warnings.append(f"line {lineno}: duplicate of line {seen[item]}, ignored")
            else:
                seen[item] = lineno
                entries.append(item)
    if errors:
        raise LexiconError(errors)
    for w in warnings:
        log.warning(w)
    return Lexicon(entries, warnings)


def load_lexicon_file(path):
    with open(path, "rb") as fh:
        return load_lexicon(fh)


def loads_lexicon(text):
    return load_lexicon(io.BytesIO(text.encode("utf-8")))


def seed_lexicon_path():
    from importlib import resources
    return resources.files(__package__) / "data" / "seed.lex"


def load_seed_lexicon():
    with seed_lexicon_path().open("rb") as fh:
        return load_lexicon(fh)
