"""``morph`` command line: analyze, generate, paradigm, segment, validate.

Exit status: 0 when every request produced results, 1 when some did not
(unknown word, empty paradigm cell, validator findings), 2 on errors.
"""
import argparse
import json
import os
import sys
import unicodedata

from . import featcodes
from .engine import GenQuery, analyze, generate, generate_paradigm
from .errors import LexiconError, MorphError
from .featcodes import PersonNumber, TenseMood
from .lexicon import Category, Gender, Number, load_lexicon_file, seed_lexicon_path
from .segmenter import segment_all
from .validate import validate_lexicon

TSV_COLUMNS = ("word", "lemma", "category", "pn/gender", "tm/number", "rule")
UNBOUND_TEXT = "_"


def features_dict(features):
    if isinstance(features, featcodes.FinVerbFeatures):
        return {"person_number": features.person_number.value,
                "tense_mood": features.tense_mood.value}
    return {"gender": features.gender and features.gender.value,
            "number": features.number and features.number.value}


def analysis_record(word, analyses):
    return {
        "word": word,
        "analyses": [
            {"lemma": a.bundle.lemma, "category": a.bundle.category.value,
             "features": features_dict(a.bundle.features), "derivation": a.rule.value}
            for a in analyses
        ],
    }


def generation_record(surface, bundle):
    return {"word": surface, "lemma": bundle.lemma, "category": bundle.category.value,
            "features": features_dict(bundle.features)}


def _tsv_feats(features):
    vals = list(features.values())
    return [UNBOUND_TEXT if v is None else v for v in vals]


def analysis_rows(record):
    if not record["analyses"]:
        return [[record["word"], "", "", "", "", ""]]
    return [[record["word"], a["lemma"], a["category"], *_tsv_feats(a["features"]), a["derivation"]]
            for a in record["analyses"]]


def generation_rows(record):
    return [[record["word"], record["lemma"], record["category"],
             *_tsv_feats(record["features"]), ""]]


def _sort_key(item):
    surface, bundle = item
    f = bundle.features
    if bundle.is_verbal:
        slot = (0, featcodes.ALL_CODES.index(featcodes.encode_features(f)))
    else:
        slot = (1, str(f.gender), str(f.number))
    return bundle.lemma, bundle.category.value, slot, surface


class Output:
    def __init__(self, stream, fmt):
        self.stream = stream
        self.fmt = fmt

    def emit(self, record, rows):
        if self.fmt == "json":
            self.stream.write(json.dumps(record, ensure_ascii=False) + "\n")
        else:
            for row in rows(record):
                self.stream.write("\t".join(row) + "\n")


def _lexicon(args):
    path = args.lexicon or os.environ.get("MORPH_LEXICON") or seed_lexicon_path()
    return load_lexicon_file(path)


def _normalize(args, word):
    return word if args.no_normalize else unicodedata.normalize("NFC", word)


def _words(args, stdin):
    if args.words:
        yield from args.words
        return
    for line in stdin:
        word = line.strip()
        if word:
            yield word


def cmd_analyze(args, lex, out, stdin):
    status = 0
    writer = Output(out, args.format)
    for raw in _words(args, stdin):
        word = _normalize(args, raw)
        analyses = analyze(lex, word)
        if not analyses:
            status = 1
        writer.emit(analysis_record(word, analyses), analysis_rows)
    return status


def _query(args):
    return GenQuery(
        _normalize(args, args.lemma),
        category=args.cat and Category(args.cat),
        person_number=args.pn and PersonNumber(args.pn),
        tense_mood=args.tm and TenseMood(args.tm),
        gender=args.gender and Gender(args.gender),
        number=args.number and Number(args.number),
    )


def cmd_generate(args, lex, out, stdin):
    results = sorted(generate(lex, _query(args)), key=_sort_key)
    writer = Output(out, args.format)
    for surface, bundle in results:
        writer.emit(generation_record(surface, bundle), generation_rows)
    return 0 if results else 1


def cmd_paradigm(args, lex, out, stdin):
    lemma = _normalize(args, args.lemma)
    p = generate_paradigm(lex, lemma)
    rows = []
    if p.verbal is not None:
        for code, forms in p.verbal.items():
            f = featcodes.decode_code(code)
            rows.append({"slot": featcodes.format_code(code), "person_number": f.person_number.value,
                         "tense_mood": f.tense_mood.value, "forms": sorted(forms)})
    if p.nominal is not None:
        for (g, n), forms in p.nominal.items():
            rows.append({"slot": f"{g.value}_{n.value}", "gender": g.value, "number": n.value,
                         "forms": sorted(forms)})
    for row in rows:
        if args.format == "json":
            out.write(json.dumps(row, ensure_ascii=False) + "\n")
        else:
            labels = [v for k, v in row.items() if k not in ("slot", "forms")]
            out.write("\t".join([row["slot"], *labels, ",".join(row["forms"]) or "-"]) + "\n")
    return 0 if any(row["forms"] for row in rows) else 1


def cmd_segment(args, lex, out, stdin):
    status = 0
    for raw in _words(args, stdin):
        word = _normalize(args, raw)
        segs = segment_all(lex, word)
        if not segs:
            status = 1
        for seg in segs:
            if args.format == "json":
                out.write(json.dumps({"word": word, "pattern": list(seg.pattern),
                                      "pieces": list(seg.texts)}, ensure_ascii=False) + "\n")
            else:
                out.write(f"{word}\t{','.join(seg.pattern)}\t{'|'.join(seg.texts)}\n")
    return status


def cmd_validate(args, lex, out, stdin):
    report = validate_lexicon(lex)
    for finding in report.findings():
        out.write(f"{finding}\n")
    return 0 if report.ok else 1


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--lexicon", help="lexicon file (default: $MORPH_LEXICON, then the seed lexicon)")
    common.add_argument("--format", choices=("json", "tsv"), help="output format (default: json; tsv for paradigm and segment)")
    common.add_argument("--no-normalize", action="store_true", help="skip NFC normalization of input")

    parser = argparse.ArgumentParser(prog="morph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="analyze word forms")
    p.add_argument("words", nargs="*", help="words to analyze (default: one per line on stdin)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("generate", parents=[common], help="generate word forms of a lemma")
    p.add_argument("--lemma", required=True)
    p.add_argument("--cat", choices=[c.value for c in Category])
    p.add_argument("--pn", choices=[v.value for v in PersonNumber])
    p.add_argument("--tm", choices=[v.value for v in TenseMood])
    p.add_argument("--gender", choices=[v.value for v in Gender])
    p.add_argument("--number", choices=[v.value for v in Number])
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("paradigm", parents=[common], help="print the full paradigm of a lemma")
    p.add_argument("--lemma", required=True)
    p.set_defaults(func=cmd_paradigm, default_format="tsv")

    p = sub.add_parser("segment", parents=[common], help="show every candidate segmentation")
    p.add_argument("words", nargs="*")
    p.set_defaults(func=cmd_segment, default_format="tsv")

    p = sub.add_parser("validate", parents=[common], help="check lexicon consistency")
    p.add_argument("path", nargs="?", help="lexicon file (same as --lexicon)")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None, stdout=None, stdin=None, stderr=None):
    stdout = stdout or sys.stdout
    stdin = stdin or sys.stdin
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    if args.format is None:
        args.format = getattr(args, "default_format", "json")
    if getattr(args, "path", None):
        args.lexicon = args.path
    try:
        lex = _lexicon(args)
    except LexiconError as e:
        stderr.write(f"morph: cannot load lexicon: {e}\n{e.report()}\n")
        return 2
    except OSError as e:
        stderr.write(f"morph: cannot read lexicon: {e}\n")
        return 2
    try:
        return args.func(args, lex, stdout, stdin)
    except MorphError as e:
        stderr.write(f"morph: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
