"""Urdu morphological engine: transliteration, inflection, lexicon tools,
corpus extraction and a miniature syntax."""

from .translit import (Script, TranslitTable, load_table, default_table,
                       to_roman, to_urdu, to_phonetic, extract_urdu_text)
from .morphology import (Entry, inflect, registry, suffix_drop, suffix_take,
                         mk_noun, noun_group1, noun_paradigms, mk_gen_verb,
                         mk_verb_caus12, verb_categories, adj_paradigm, ABSENT)
from .lexicon import (Dictionary, LexiconSource, parse_lexicon, compile,
                      compile_text, analyze, synthesize, export, load_json,
                      closed_class_entries)
from .extractor import (Corpus, tokenize, stats, parse_rules, default_rules,
                        extract, emit_candidates)
from .syntax import (linearize, parse, load_gf_lexicon, build_lexicon,
                     format_tree, parse_tree)

__version__ = "0.1.0"
