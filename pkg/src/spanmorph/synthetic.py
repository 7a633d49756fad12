"""Synthetic lexicon expansion for load and lookup scale checks."""
import random
from dataclasses import dataclass

from .lexicon import seed_lexicon_path

_ONSETS = ["b", "c", "d", "f", "g", "l", "m", "n", "p", "r", "s", "t", "v", "ch", "br", "pl", "tr"]
_VOWELS = ["a", "e", "i", "o", "u", "á", "é", "ó"]
_CODAS = ["", "", "n", "r", "s", "l"]


@dataclass
class ExpansionConfig:
    n_entries: int = 50_000
    seed: int = 0
    verb_share: float = 0.4
    nominal_stem_share: float = 0.2


def _stem(rng):
    return "".join(rng.choice(_ONSETS) + rng.choice(_VOWELS) + rng.choice(_CODAS)
                   for _ in range(rng.randint(1, 3)))


def synthetic_lines(cfg=ExpansionConfig()):
    """Seed lexicon lines followed by generated entries, ``cfg.n_entries`` in total."""
    with seed_lexicon_path().open(encoding="utf-8") as fh:
        lines = [l.rstrip("\n") for l in fh if l.strip() and not l.startswith("#")]
    rng = random.Random(cfg.seed)
    i = 0
    while len(lines) < cfg.n_entries:
        i += 1
        stem = _stem(rng)
        lemma = f"{stem}{i}"
        r = rng.random()
        if r < cfg.verb_share:
            conj = rng.randint(1, 3)
            lines.append(f"vl\t{lemma}\tv\t{conj}\t100\treg\t{stem}")
        elif r < cfg.verb_share + cfg.nominal_stem_share:
            lines.append(f"nl\t{lemma}\tn\tmas1,fem\tplu1\t_\t_\t{stem}")
        else:
            nut = rng.choice(["plu1", "plu2", "plu1,plu2"])
            gender = rng.choice(["masc", "fem"])
            lines.append(f"wl\t{lemma}\tn\t{nut}\t{gender}\tsing\t{stem}")
    return lines


def synthetic_bytes(cfg=ExpansionConfig()):
    return ("\n".join(synthetic_lines(cfg)) + "\n").encode("utf-8")

