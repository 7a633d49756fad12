"""Numeric stem-type codes for verb forms.

A code names one cell of the conjugation table: the tens digit picks the
tense-mood row (1..7, 8 for the imperative) and the units digit the
person-number column. The non-finite forms are 0 (infinitive), 90
(gerund) and 99 (participle). ``WILDCARD`` (100) stands for all of them.
"""
from dataclasses import dataclass
from enum import Enum

from .errors import InvalidCombination, MixedWildcard, UnknownCode


class PersonNumber(str, Enum):
    sing_1 = "sing_1"
    sing_2 = "sing_2"
    sing_3 = "sing_3"
    plu_1 = "plu_1"
    plu_2 = "plu_2"
    plu_3 = "plu_3"
    none = "none"

    def __str__(self):
        return self.value


class TenseMood(str, Enum):
    pres_ind = "pres_ind"
    impf_ind = "impf_ind"
    indf_ind = "indf_ind"
    fut_ind = "fut_ind"
    pres_subj = "pres_subj"
    impf_subj = "impf_subj"
    cond = "cond"
    imper = "imper"
    inf = "inf"
    ger = "ger"
    part = "part"

    def __str__(self):
        return self.value


NONFINITE = frozenset({TenseMood.inf, TenseMood.ger, TenseMood.part})
WILDCARD = 100

_ROWS = list(TenseMood)[:8]
_COLUMNS = list(PersonNumber)[:6]
_IMPER_MISSING = {PersonNumber.sing_1, PersonNumber.plu_1}
_NONFINITE_CODES = {0: TenseMood.inf, 90: TenseMood.ger, 99: TenseMood.part}


@dataclass(frozen=True)
class FinVerbFeatures:
    person_number: PersonNumber
    tense_mood: TenseMood

    def is_valid(self):
        if (self.person_number is PersonNumber.none) != (self.tense_mood in NONFINITE):
            return False
        if self.tense_mood is TenseMood.imper and self.person_number in _IMPER_MISSING:
            return False
        return True


def _build_table():
    table = {}
    for r, tm in enumerate(_ROWS, start=1):
        for c, pn in enumerate(_COLUMNS, start=1):
            if tm is TenseMood.imper and pn in _IMPER_MISSING:
                continue
            table[10 * r + c] = FinVerbFeatures(pn, tm)
    for code, tm in _NONFINITE_CODES.items():
        table[code] = FinVerbFeatures(PersonNumber.none, tm)
    return table


_DECODE = _build_table()
_ENCODE = {f: c for c, f in _DECODE.items()}

# Conjugation-table order: finite rows top to bottom, then inf, ger, part.
ALL_CODES = tuple(sorted(c for c in _DECODE if c not in _NONFINITE_CODES)) + (0, 90, 99)
CODE_SET = frozenset(ALL_CODES)

_COURTESY = {83: 53, 86: 56}


def is_code(code):
    return isinstance(code, int) and not isinstance(code, bool) and code in CODE_SET


def decode_code(code):
    try:
        return _DECODE[code]
    except (KeyError, TypeError):
        raise UnknownCode(f"not a stem-type code: {code!r}") from None


def encode_features(features):
    try:
        return _ENCODE[features]
    except KeyError:
        raise InvalidCombination(
            f"no code for ({features.person_number}, {features.tense_mood})"
        ) from None


def expand_stem_types(codes):
    codes = frozenset(codes)
    if not codes:
        raise ValueError("empty stem-type set")
    if WILDCARD in codes:
        if len(codes) > 1:
            raise MixedWildcard(f"{WILDCARD} mixed with other codes: {sorted(codes)}")
        return CODE_SET
    return codes


def courtesy_twin(code):
    return _COURTESY.get(code)


def format_code(code):
    return f"{code:02d}"


def parse_code(text):
    """Parse a code as written in lexicon files ("00", "11", "100")."""
    if not text.isdigit():
        raise UnknownCode(f"not a stem-type code: {text!r}")
    code = int(text)
    if code != WILDCARD and code not in CODE_SET:
        raise UnknownCode(f"not a stem-type code: {text!r}")
    return code
