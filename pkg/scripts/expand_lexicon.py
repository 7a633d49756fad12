"""Write a synthetically expanded lexicon and time loading it.

    python scripts/expand_lexicon.py --entries 50000 --out /tmp/big.lex
"""
import argparse
import io
import random
import time
from dataclasses import fields

from spanmorph.lexicon import load_lexicon
from spanmorph.synthetic import ExpansionConfig, synthetic_bytes


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f in fields(ExpansionConfig):
        parser.add_argument(f"--{f.name.replace('_', '-')}", type=type(f.default), default=f.default)
    parser.add_argument("--out", help="also write the lexicon here")
    args = parser.parse_args()
    cfg = ExpansionConfig(**{f.name: getattr(args, f.name) for f in fields(ExpansionConfig)})

    data = synthetic_bytes(cfg)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    t0 = time.perf_counter()
    lex = load_lexicon(io.BytesIO(data))
    load_s = time.perf_counter() - t0

    rng = random.Random(cfg.seed)
    sample = rng.sample(lex.entries(), max(1, len(lex) // 100))
    t0 = time.perf_counter()
    for e in sample:
        assert e in lex.lookup(e.tag, e.surface)
    lookup_us = (time.perf_counter() - t0) / len(sample) * 1e6
    print(f"entries={len(lex)} load={load_s:.2f}s lookup={lookup_us:.1f}us/entry sample={len(sample)}")


if __name__ == "__main__":
    main()
