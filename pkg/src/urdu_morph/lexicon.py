"""Lexicon compilation, full-form indexing, analysis/synthesis and export.

The source format is one command per line: a paradigm name followed by the
space-separated dictionary forms, e.g. ``n1 l(a)R'ka`` or
``v4 m(i)l'na m(i)lana m(i)l'wana``.  Compilation always folds in the
closed-class entries shipped with the package (pronouns, postpositions,
particles, numerals, auxiliaries), whose forms are listed explicitly in
data/closed_classes.tsv.
"""

from __future__ import annotations

import importlib.resources
import json
from dataclasses import dataclass

from . import morphology, translit
from .features import (AdjForm, AdvForm, ClosedForm, NounForm, VerbForm)
from .morphology import ABSENT, Entry
from .translit import Script


class LexiconError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class Command:
    paradigm: str
    forms: tuple[str, ...]
    source_line: int


@dataclass(frozen=True)
class LexiconSource:
    commands: tuple[Command, ...]


def parse_lexicon(source: bytes | str) -> LexiconSource:
    """Parse lexicon source text; # comments and blank lines are ignored."""
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    registry = morphology.registry()
    table = translit.default_table()
    commands = []
    for lineno, line in enumerate(source.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        name, forms = parts[0], parts[1:]
        if name not in registry:
            raise LexiconError("unknown paradigm %r" % name, lineno)
        par = registry[name]
        if len(forms) != par.arity:
            raise LexiconError("paradigm %s takes %d form(s), got %d"
                               % (name, par.arity, len(forms)), lineno)
        for f in forms:
            try:
                table.scan_roman(f)
            except translit.TransliterationError as exc:
                raise LexiconError("form %r does not scan: %s" % (f, exc), lineno)
        commands.append(Command(name, tuple(forms), lineno))
    return LexiconSource(tuple(commands))


def _parse_tokens_field(field: str) -> tuple[str, ...]:
    return () if field == "-" else tuple(field.split())


def closed_class_entries() -> list[Entry]:
    """Entries from the shipped closed-class data file, in file order."""
    data = importlib.resources.files("urdu_morph.data").joinpath("closed_classes.tsv")
    rows = []
    for lineno, line in enumerate(data.read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 5:
            raise LexiconError("closed-class row needs 5 fields", lineno)
        lemma, cls, inherent, features, form = fields
        if cls not in morphology.WORD_CLASSES:
            raise LexiconError("unknown word class %r" % cls, lineno)
        rows.append((lemma, cls, _parse_tokens_field(inherent),
                     _parse_tokens_field(features), form))
    entries = []
    current = None
    for lemma, cls, inherent, features, form in rows:
        if current is None or (lemma, cls) != (current.lemma, current.word_class):
            if current is not None:
                entries.append(current)
            current = Entry(lemma=lemma, word_class=cls, inherent=inherent,
                            table={}, paradigm=None)
        current.table[ClosedForm(features)] = form
    if current is not None:
        entries.append(current)
    return entries


class Dictionary:
    """Compiled entries plus the full-form index."""

    def __init__(self, entries: list[Entry]):
        counts: dict[str, int] = {}
        numbered = []
        for entry in entries:
            lemma_id = counts.get(entry.lemma, 0)
            counts[entry.lemma] = lemma_id + 1
            numbered.append(entry.with_id(lemma_id))
        self.entries = numbered
        self.fullform_index: dict[str, list[tuple[Entry, object]]] = {}
        for entry in self.entries:
            for form, surface in entry.defined_cells():
                self.fullform_index.setdefault(surface, []).append((entry, form))

    def __eq__(self, other):
        return isinstance(other, Dictionary) and self.entries == other.entries

    def entry_by_display_id(self, display_id: str) -> Entry | None:
        for entry in self.entries:
            if entry.display_id == display_id:
                return entry
        return None


def compile(source: LexiconSource) -> Dictionary:
    """Inflect every command and build the index; closed classes come first."""
    entries = list(closed_class_entries())
    for cmd in source.commands:
        try:
            entries.append(morphology.inflect(cmd.paradigm, list(cmd.forms)))
        except morphology.ParadigmError as exc:
            raise LexiconError(str(exc), cmd.source_line)
    return Dictionary(entries)


def compile_text(source: bytes | str) -> Dictionary:
    return compile(parse_lexicon(source))


# Display alias used in analysis lines (the internal tag stays "VerbAux").
_CLASS_DISPLAY = {"VerbAux": "Verb_Aux"}


@dataclass(frozen=True)
class Analysis:
    lemma: str
    lemma_id: int
    urdu_lemma: str
    word_class: str
    features: tuple[str, ...]
    inherent: tuple[str, ...]

    def render(self) -> str:
        """The analysis line format: ``lemma_id. urdu +CLASS - FEAT - INH -``."""
        clean = "".join(c for c in self.lemma if c.isalnum())
        parts = ["%s_%d." % (clean, self.lemma_id), self.urdu_lemma,
                 "+" + _CLASS_DISPLAY.get(self.word_class, self.word_class), "-"]
        if self.features:
            parts.extend(self.features)
            parts.append("-")
        if self.inherent:
            parts.extend(self.inherent)
            parts.append("-")
        return " ".join(parts)


def analyze(word: str, script: Script, dictionary: Dictionary) -> list[Analysis]:
    """Exact-match lookup; unknown words yield an empty list, not an error."""
    if script is Script.URDU:
        word = translit.to_roman(word)
    out = []
    for entry, form in dictionary.fullform_index.get(word, ()):
        out.append(Analysis(
            lemma=entry.lemma, lemma_id=entry.lemma_id,
            urdu_lemma=translit.to_urdu(entry.lemma),
            word_class=entry.word_class,
            features=tuple(form.tokens()), inherent=entry.inherent))
    return out


def synthesize(lemma: str, dictionary: Dictionary):
    """All entries for a dictionary form (roman or Urdu), with full tables."""
    if any(not ch.isascii() for ch in lemma):
        lemma = translit.to_roman(lemma)
    out = []
    for entry in dictionary.entries:
        if entry.lemma != lemma:
            continue
        rows = [(tuple(form.tokens()), surface, translit.to_urdu(surface))
                for form, surface in entry.defined_cells()]
        out.append((entry, rows))
    return out


def _features_str(tokens) -> str:
    return " ".join(tokens) if tokens else "-"


def _entry_json(entry: Entry) -> dict:
    closed = entry.paradigm is None
    cells = [{"features": list(form.tokens()), "form": surface}
             for form, surface in entry.table.items()]
    return {"lemma": entry.lemma, "lemma_id": entry.lemma_id,
            "word_class": entry.word_class, "paradigm": entry.paradigm,
            "inherent": list(entry.inherent), "closed": closed, "table": cells}


_OPEN_FORMS = {"N": NounForm.all, "Adj": AdjForm.all, "Verb": VerbForm.all,
               "Adv": AdvForm.all}


def _entry_from_json(obj: dict) -> Entry:
    if obj["closed"]:
        table = {ClosedForm(tuple(cell["features"])): cell["form"]
                 for cell in obj["table"]}
    else:
        forms = _OPEN_FORMS[obj["word_class"]]()
        if len(forms) != len(obj["table"]):
            raise LexiconError("table length mismatch for %r" % obj["lemma"])
        table = {form: cell["form"] for form, cell in zip(forms, obj["table"])}
    return Entry(lemma=obj["lemma"], word_class=obj["word_class"],
                 inherent=tuple(obj["inherent"]), table=table,
                 paradigm=obj.get("paradigm"))


# Grammar category per word class, used by the gf-lexicon export.
CATEGORY_OF_CLASS = {
    "N": "N", "Verb": "V", "VerbAux": "VAux", "DemPron": "Dem",
    "PersPron": "Pron", "PostP": "Post", "Num": "Mod", "Adj": "Mod",
    "Particle": "Conj", "Adv": "Adv",
}

EXPORT_FORMATS = ("fullform-tsv", "gf-lexicon", "json")


def export(dictionary: Dictionary, format: str) -> bytes:
    """Deterministic byte-for-byte export of a compiled dictionary."""
    if format == "fullform-tsv":
        rows = []
        for entry in dictionary.entries:
            for form, surface in entry.defined_cells():
                rows.append((surface, entry.display_id, entry.word_class,
                             _features_str(form.tokens()),
                             _features_str(entry.inherent)))
        rows.sort(key=lambda r: (r[0], r[1]))
        return "".join("\t".join(r) + "\n" for r in rows).encode("utf-8")
    if format == "gf-lexicon":
        lines = ["%s : %s ;" % (e.display_id, CATEGORY_OF_CLASS[e.word_class])
                 for e in dictionary.entries]
        return ("\n".join(lines) + "\n").encode("utf-8")
    if format == "json":
        doc = {"entries": [_entry_json(e) for e in dictionary.entries]}
        return (json.dumps(doc, ensure_ascii=False, indent=1) + "\n").encode("utf-8")
    raise ValueError("unknown export format %r" % format)


def load_json(data: bytes | str) -> Dictionary:
    """Inverse of the json export; reproduces an equal dictionary."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    doc = json.loads(data)
    return Dictionary([_entry_from_json(obj) for obj in doc["entries"]])
