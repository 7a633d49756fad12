"""Bidirectional Spanish inflection over an allomorph lexicon."""
from .engine import Analysis, FeatureBundle, GenQuery, analyze, generate, generate_paradigm
from .lexicon import load_lexicon, load_lexicon_file, load_seed_lexicon, lookup_exact
from .segmenter import segment, segment_all
from .validate import validate_lexicon

__all__ = [
    "Analysis", "FeatureBundle", "GenQuery", "analyze", "generate", "generate_paradigm",
    "load_lexicon", "load_lexicon_file", "load_seed_lexicon", "lookup_exact",
    "segment", "segment_all", "validate_lexicon",
]
