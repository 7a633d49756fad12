"""Consistency checks over a loaded lexicon. Report-only, never raises."""
from dataclasses import dataclass, field
from typing import List

from . import featcodes
from .engine import GenQuery, generate, verb_compatible
from .errors import MorphError
from .lexicon import VerbStemEntry, render_entry


@dataclass
class Finding:
    kind: str
    message: str

    def __str__(self):
        return f"{self.kind}: {self.message}"


@dataclass
class ValidationReport:
    inconsistent_endings: List[Finding] = field(default_factory=list)
    courtesy_violations: List[Finding] = field(default_factory=list)
    dead_codes: List[Finding] = field(default_factory=list)
    mixed_wildcards: List[Finding] = field(default_factory=list)

    def findings(self):
        return (self.inconsistent_endings + self.courtesy_violations
                + self.dead_codes + self.mixed_wildcards)

    @property
    def ok(self):
        return not self.findings()


def _show(entry):
    return render_entry(entry).replace("\t", " ")


def courtesy_surfaces(lex, lemma, code):
    f = featcodes.decode_code(code)
    q = GenQuery(lemma, person_number=f.person_number, tense_mood=f.tense_mood)
    return {s for s, _ in generate(lex, q)}


def validate_lexicon(lex):
    report = ValidationReport()

    for vm in lex.entries("vm"):
        try:
            expected = featcodes.decode_code(vm.stem_type)
        except featcodes.UnknownCode:
            expected = None
        if expected is None or (expected.person_number, expected.tense_mood) != (
            vm.person_number, vm.tense_mood
        ):
            report.inconsistent_endings.append(Finding(
                "inconsistent ending",
                f"[{_show(vm)}]: code {featcodes.format_code(vm.stem_type)} decodes to "
                f"{expected and (expected.person_number.value, expected.tense_mood.value)}",
            ))

    stems = lex.entries("vl")
    endings = lex.entries("vm")
    for stem in stems:
        if featcodes.WILDCARD in stem.stem_types and len(stem.stem_types) > 1:
            report.mixed_wildcards.append(Finding(
                "mixed wildcard", f"[{_show(stem)}]: 100 listed with other codes",
            ))
            continue
        for code in sorted(featcodes.expand_stem_types(stem.stem_types)):
            if not any(vm.stem_type == code and verb_compatible(stem, vm) for vm in endings):
                report.dead_codes.append(Finding(
                    "dead code",
                    f"[{_show(stem)}]: no compatible ending for code "
                    f"{featcodes.format_code(code)}",
                ))

    verb_lemmas = {e.lemma for e in lex.entries() if isinstance(e, VerbStemEntry)}
    verb_lemmas |= {e.lemma for e in lex.entries("w") if e.is_verbal}
    for lemma in sorted(verb_lemmas):
        for code in (83, 86):
            twin = featcodes.courtesy_twin(code)
            try:
                got, want = courtesy_surfaces(lex, lemma, code), courtesy_surfaces(lex, lemma, twin)
            except MorphError:
                continue
            if got != want:
                report.courtesy_violations.append(Finding(
                    "courtesy mismatch",
                    f"{lemma}: code {code} gives {sorted(got)}, code {twin} gives {sorted(want)}",
                ))
    return report
