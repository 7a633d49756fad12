"""Print every paradigm in a lexicon plus round-trip and ambiguity counts."""
import argparse
from collections import Counter

from spanmorph.engine import GenQuery, analyze, generate, generate_paradigm
from spanmorph.featcodes import decode_code, format_code
from spanmorph.lexicon import load_lexicon_file, seed_lexicon_path


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--lexicon", default=str(seed_lexicon_path()))
    parser.add_argument("--quiet", action="store_true", help="only print the summary")
    args = parser.parse_args()
    lex = load_lexicon_file(args.lexicon)

    surfaces = set()
    gaps = Counter()
    for lemma in sorted(lex.lemmas()):
        p = generate_paradigm(lex, lemma)
        if not args.quiet:
            print(f"== {lemma}")
        for code, forms in (p.verbal or {}).items():
            gaps[lemma] += not forms
            if not args.quiet:
                f = decode_code(code)
                print(f"  {format_code(code)} {f.person_number:7} {f.tense_mood:9} {', '.join(sorted(forms)) or '-'}")
        for (g, n), forms in (p.nominal or {}).items():
            if not args.quiet:
                print(f"  {g.value:4} {n.value:4} {', '.join(sorted(forms)) or '-'}")
        surfaces |= {s for s, _ in generate(lex, GenQuery(lemma))}

    readings = Counter(len(analyze(lex, s)) for s in surfaces)
    print(f"lemmas={len(lex.lemmas())} distinct surfaces={len(surfaces)}")
    print("analyses per surface:", dict(sorted(readings.items())))
    print("verbs with gaps:", {k: v for k, v in gaps.items() if v})


if __name__ == "__main__":
    main()
