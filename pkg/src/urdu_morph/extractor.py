"""Corpus tokenization, the paradigm-rule DSL and candidate extraction.

A rule names a paradigm, lists suffix patterns ``x + "LIT"`` over a single
stem variable, and guards them with an attestation constraint over corpus
membership, e.g.::

    paradigm v4 = x + "na" x + "ana" x + "wana"
        { x + "na" & (x + "ana" | x + "wana") };

Extraction tests every corpus word against the first pattern of every rule;
when the constraint holds, a candidate carrying all pattern instantiations
is emitted in a format that feeds straight back into the lexicon parser.
"""

from __future__ import annotations

import importlib.resources
import string
from collections import Counter
from dataclasses import dataclass

from . import morphology, translit
from .translit import Script


class RuleError(ValueError):
    def __init__(self, message: str, line: int, col: int | None = None):
        pos = "line %d" % line + ("" if col is None else ", col %d" % col)
        super().__init__("%s: %s" % (pos, message))
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Corpus:
    tokens: tuple[str, ...]
    frequencies: dict[str, int]

    @property
    def word_set(self) -> set[str]:
        return set(self.frequencies)


def tokenize(text: str, script: Script = Script.ROMAN) -> Corpus:
    """Split on whitespace and punctuation, keeping diacritics word-internal."""
    if script is Script.URDU:
        text = translit.to_roman(text)
    table = translit.default_table()
    # Word characters: ASCII letters plus any punctuation reserved for
    # roman tokens (diacritic and marker characters).
    word_chars = set(string.ascii_letters) | set(table.reserved_ascii)
    tokens = []
    current = []
    for ch in text:
        if ch in word_chars:
            current.append(ch)
        elif current:
            tokens.append("".join(current))
            current = []
    if current:
        tokens.append("".join(current))
    return Corpus(tuple(tokens), dict(Counter(tokens)))


@dataclass(frozen=True)
class CorpusStats:
    total_tokens: int
    unique_words: int
    diacritic_tokens: int
    diacritic_unique: int


def _has_diacritic(word: str, diacritics) -> bool:
    return any(d in word for d in diacritics)


def stats(corpus: Corpus) -> CorpusStats:
    """Token/type counts, split out for diacritic-bearing words."""
    diacritics = translit.default_table().diacritic_tokens
    dia_tokens = sum(n for w, n in corpus.frequencies.items()
                     if _has_diacritic(w, diacritics))
    dia_unique = sum(1 for w in corpus.frequencies
                     if _has_diacritic(w, diacritics))
    return CorpusStats(total_tokens=len(corpus.tokens),
                       unique_words=len(corpus.frequencies),
                       diacritic_tokens=dia_tokens,
                       diacritic_unique=dia_unique)


# -- rule DSL ----------------------------------------------------------------

@dataclass(frozen=True)
class Atom:
    suffix: str

    def holds(self, stem: str, words: set[str]) -> bool:
        return stem + self.suffix in words


@dataclass(frozen=True)
class BoolOp:
    op: str  # "&" | "|"
    left: object
    right: object

    def holds(self, stem: str, words: set[str]) -> bool:
        if self.op == "&":
            return self.left.holds(stem, words) and self.right.holds(stem, words)
        return self.left.holds(stem, words) or self.right.holds(stem, words)


@dataclass(frozen=True)
class ParadigmRule:
    name: str
    patterns: tuple[str, ...]  # suffix literals, one per emitted form
    constraint: object


class _Lexer:
    def __init__(self, text: str):
        self.toks: list[tuple[str, str, int, int]] = []  # (kind, value, line, col)
        line, col, i = 1, 1, 0
        while i < len(text):
            ch = text[i]
            if ch == "\n":
                line += 1
                col = 1
                i += 1
            elif ch in " \t\r":
                col += 1
                i += 1
            elif ch == "#":
                while i < len(text) and text[i] != "\n":
                    i += 1
            elif ch == '"':
                j = text.find('"', i + 1)
                if j < 0:
                    raise RuleError("unterminated string literal", line, col)
                self.toks.append(("lit", text[i + 1:j], line, col))
                col += j - i + 1
                i = j + 1
            elif ch in "=+&|(){};":
                self.toks.append((ch, ch, line, col))
                col += 1
                i += 1
            elif ch.isalnum() or ch == "_":
                j = i
                while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                self.toks.append(("name", text[i:j], line, col))
                col += j - i
                i = j
            else:
                raise RuleError("unexpected character %r" % ch, line, col)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def next(self, kind: str | None = None):
        tok = self.peek()
        if tok is None:
            last = self.toks[-1] if self.toks else ("", "", 1, 1)
            raise RuleError("unexpected end of input", last[2], last[3])
        if kind is not None and tok[0] != kind:
            raise RuleError("expected %s, got %r" % (kind, tok[1]), tok[2], tok[3])
        self.pos += 1
        return tok


def _parse_pattern(lx: _Lexer) -> str:
    tok = lx.next("name")
    if tok[1] != "x":
        raise RuleError("patterns use the single variable x, got %r" % tok[1],
                        tok[2], tok[3])
    lx.next("+")
    return lx.next("lit")[1]


def _parse_constraint(lx: _Lexer):
    def atom():
        tok = lx.peek()
        if tok and tok[0] == "(":
            lx.next("(")
            node = expr()
            lx.next(")")
            return node
        return Atom(_parse_pattern(lx))

    def expr():
        node = atom()
        while True:
            tok = lx.peek()
            if tok and tok[0] in ("&", "|"):
                lx.next()
                node = BoolOp(tok[0], node, atom())
            else:
                return node

    return expr()


def parse_rules(source: bytes | str) -> list[ParadigmRule]:
    """Parse a rule file, validating paradigm names and pattern arity."""
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    registry = morphology.registry()
    lx = _Lexer(source)
    rules = []
    while lx.peek() is not None:
        kw = lx.next("name")
        if kw[1] != "paradigm":
            raise RuleError("expected 'paradigm', got %r" % kw[1], kw[2], kw[3])
        name_tok = lx.next("name")
        name = name_tok[1]
        if name not in registry:
            raise RuleError("unknown paradigm name %r" % name,
                            name_tok[2], name_tok[3])
        lx.next("=")
        patterns = []
        while lx.peek() and lx.peek()[0] == "name":
            patterns.append(_parse_pattern(lx))
        if not patterns:
            tok = lx.peek()
            raise RuleError("rule needs at least one pattern", tok[2], tok[3])
        if len(patterns) != registry[name].arity:
            raise RuleError(
                "paradigm %s takes %d form(s); rule instantiates %d"
                % (name, registry[name].arity, len(patterns)),
                name_tok[2], name_tok[3])
        lx.next("{")
        constraint = _parse_constraint(lx)
        lx.next("}")
        lx.next(";")
        rules.append(ParadigmRule(name, tuple(patterns), constraint))
    return rules


def default_rules() -> list[ParadigmRule]:
    data = importlib.resources.files("urdu_morph.data").joinpath("paradigm_rules.txt")
    return parse_rules(data.read_bytes())


@dataclass(frozen=True)
class Candidate:
    paradigm: str
    stem: str
    forms: tuple[str, ...]
    attested: tuple[bool, ...]


def extract(rules: list[ParadigmRule], corpus: Corpus) -> list[Candidate]:
    """All (rule, stem) instantiations whose constraint holds over the corpus.

    Candidates are deduplicated by (paradigm, stem) and ordered by rule
    order, then stem.
    """
    words = corpus.word_set
    seen = set()
    out = []
    for rule in rules:
        first = rule.patterns[0]
        hits = []
        for word in words:
            if first and not word.endswith(first):
                continue
            stem = word[:len(word) - len(first)] if first else word
            if not stem:
                continue
            if (rule.name, stem) in seen:
                continue
            if rule.constraint.holds(stem, words):
                hits.append(stem)
        for stem in sorted(hits):
            if (rule.name, stem) in seen:
                continue
            seen.add((rule.name, stem))
            forms = tuple(stem + lit for lit in rule.patterns)
            out.append(Candidate(
                paradigm=rule.name, stem=stem, forms=forms,
                attested=tuple(f in words for f in forms)))
    return out


def emit_candidates(candidates: list[Candidate]) -> bytes:
    """One lexicon-source line per candidate: ``NAME FORM1 FORM2 ...``."""
    lines = ["%s %s" % (c.paradigm, " ".join(c.forms)) for c in candidates]
    return ("\n".join(lines) + "\n").encode("utf-8") if lines else b""
