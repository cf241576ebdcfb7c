"""The inflection engine: paradigm functions and inflection-table generation.

All string surgery happens on roman *tokens* of the transliteration table,
never on raw characters, so multi-character tokens like "(a)" or "|h" are
treated as units.

Noun groups
-----------
The engine ships fifteen noun groups.  n1 is the masculine a/h/e group with
its published replacement rules; the rest follow the standard grammars'
inventory.  Membership conditions and per-cell suffixes live in NOUN_GROUPS
below so they can be amended without touching the engine:

  n1  masc, ends a/h/e: SgNom=lemma, SgObl=SgVoc=PlNom=stem+E,
      PlObl=stem+wN, PlVoc=stem+w (stem keeps the final token for e-final)
  n2  masc, invariant (proper nouns, loans without native plural)
  n3  masc, ends in a consonant: PlObl=+wN, PlVoc=+w, rest invariant
  n4  fem, ends y: PlNom=+aN, PlObl=+wN, PlVoc=+w
  n5  fem, ends in a consonant: PlNom=+yN, PlObl=+wN, PlVoc=+w
  n6  fem, ends a: PlNom=+~yN, PlObl=+~wN, PlVoc=+~w (hamza carrier)
  n7  fem, ends ya: PlNom=+N, PlObl=-a+wN, PlVoc=-a+w
  n8  fem, invariant
  n9  masc, ends w: PlObl=+~wN, rest invariant
  n10 Arabic masc, ends h: -at plural on the bare stem, SgObl/Voc=stem+E
  n11 Arabic fem, ends t: -at plural on the bare stem
  n12 Arabic masc, ends a: PlObl=+~wN, PlVoc=+~w, rest invariant
  n13 Persian masc, ends h: -gan plural on the bare stem
  n14 Persian masc, ends in a consonant: -an plural
  n15 masc, ends y: PlObl=+wN, PlVoc=+w, rest invariant
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from . import translit
from .features import (AdjForm, AdvForm, Case, CausLevel, Gender, NounForm,
                       Number, Person, Tense, VerbForm)

ABSENT = None  # marker for cells a verb category does not have

WORD_CLASSES = ("N", "Verb", "Adj", "Adv", "PersPron", "DemPron", "PostP",
                "Particle", "Num", "VerbAux")


class ParadigmError(ValueError):
    """Unknown paradigm, arity mismatch or membership-condition failure."""


def roman_tokens(s: str) -> list[str]:
    """Tokenize a roman string against the shipped table."""
    return translit.default_table().scan_roman(s)


def suffix_drop(n: int, s: str) -> str:
    """Drop the last n roman tokens (the toolkit-style ``tk``)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    toks = roman_tokens(s)
    return "".join(toks[:len(toks) - n]) if n else s


def suffix_take(n: int, s: str) -> str:
    """Keep only the last n roman tokens (the toolkit-style ``dp``)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    toks = roman_tokens(s)
    return "".join(toks[len(toks) - n:]) if n else ""


def mk_noun(sg: str, sg_obl: str, pl: str, pl_obl: str,
            sg_voc: str, pl_voc: str) -> dict[NounForm, str]:
    """Assemble a six-cell noun table from explicit forms."""
    by_cell = {
        (Number.Sg, Case.Nom): sg,
        (Number.Sg, Case.Obl): sg_obl,
        (Number.Sg, Case.Voc): sg_voc,
        (Number.Pl, Case.Nom): pl,
        (Number.Pl, Case.Obl): pl_obl,
        (Number.Pl, Case.Voc): pl_voc,
    }
    for form in by_cell.values():
        roman_tokens(form)
    return {nf: by_cell[(nf.number, nf.case)] for nf in NounForm.all()}


def _last(lemma: str) -> str:
    toks = roman_tokens(lemma)
    if not toks:
        raise ParadigmError("empty dictionary form")
    return toks[-1]


def noun_group1(lemma: str) -> dict[NounForm, str]:
    """Masculine nouns ending in alif, choTi he or ain (group n1)."""
    end = _last(lemma)
    if end not in ("a", "h", "e"):
        raise ParadigmError(
            "n1 requires a lemma ending in token a/h/e, got %r (%r)" % (end, lemma))
    stem = lemma if end == "e" else suffix_drop(1, lemma)
    return mk_noun(sg=lemma,
                   sg_obl=stem + "E",
                   pl=stem + "E",
                   pl_obl=stem + "wN",
                   sg_voc=stem + "E",
                   pl_voc=stem + "w")


def _invariant_noun(lemma: str) -> dict[NounForm, str]:
    return mk_noun(lemma, lemma, lemma, lemma, lemma, lemma)


def _suffix_noun(lemma, pl, pl_obl, pl_voc, sg_obl=None, sg_voc=None):
    return mk_noun(sg=lemma, sg_obl=sg_obl or lemma, pl=pl,
                   pl_obl=pl_obl, sg_voc=sg_voc or lemma, pl_voc=pl_voc)


def _require_end(lemma: str, group: str, ends: tuple[str, ...]) -> None:
    if _last(lemma) not in ends:
        raise ParadigmError("%s requires a lemma ending in %s, got %r"
                            % (group, "/".join(ends), lemma))


def _require_consonant(lemma: str, group: str) -> None:
    if _last(lemma) in ("a", "y", "w", "E", "h", "e", "A"):
        raise ParadigmError("%s requires a consonant-final lemma, got %r"
                            % (group, lemma))


def _n3(lemma):
    _require_consonant(lemma, "n3")
    return _suffix_noun(lemma, lemma, lemma + "wN", lemma + "w")


def _n4(lemma):
    _require_end(lemma, "n4", ("y",))
    return _suffix_noun(lemma, lemma + "aN", lemma + "wN", lemma + "w")


def _n5(lemma):
    _require_consonant(lemma, "n5")
    return _suffix_noun(lemma, lemma + "yN", lemma + "wN", lemma + "w")


def _n6(lemma):
    _require_end(lemma, "n6", ("a",))
    return _suffix_noun(lemma, lemma + "~yN", lemma + "~wN", lemma + "~w")


def _n7(lemma):
    toks = roman_tokens(lemma)
    if toks[-2:] != ["y", "a"]:
        raise ParadigmError("n7 requires a lemma ending in tokens ya, got %r" % lemma)
    stem = suffix_drop(1, lemma)
    return _suffix_noun(lemma, lemma + "N", stem + "wN", stem + "w")


def _n9(lemma):
    _require_end(lemma, "n9", ("w",))
    return _suffix_noun(lemma, lemma, lemma + "~wN", lemma + "~w")


def _n10(lemma):
    _require_end(lemma, "n10", ("h",))
    stem = suffix_drop(1, lemma)
    return mk_noun(sg=lemma, sg_obl=stem + "E", pl=stem + "at",
                   pl_obl=stem + "atwN", sg_voc=stem + "E", pl_voc=stem + "atw")


def _n11(lemma):
    _require_end(lemma, "n11", ("t",))
    stem = suffix_drop(1, lemma)
    return _suffix_noun(lemma, stem + "at", stem + "atwN", stem + "atw")


def _n12(lemma):
    _require_end(lemma, "n12", ("a",))
    return _suffix_noun(lemma, lemma, lemma + "~wN", lemma + "~w")


def _n13(lemma):
    _require_end(lemma, "n13", ("h",))
    stem = suffix_drop(1, lemma)
    return _suffix_noun(lemma, stem + "gan", stem + "ganwN", stem + "ganw")


def _n14(lemma):
    _require_consonant(lemma, "n14")
    return _suffix_noun(lemma, lemma + "an", lemma + "anwN", lemma + "anw")


def _n15(lemma):
    _require_end(lemma, "n15", ("y",))
    return _suffix_noun(lemma, lemma, lemma + "wN", lemma + "w")


# name -> (inherent gender, table builder)
NOUN_GROUPS = {
    "n1": (Gender.Masc, noun_group1),
    "n2": (Gender.Masc, _invariant_noun),
    "n3": (Gender.Masc, _n3),
    "n4": (Gender.Fem, _n4),
    "n5": (Gender.Fem, _n5),
    "n6": (Gender.Fem, _n6),
    "n7": (Gender.Fem, _n7),
    "n8": (Gender.Fem, _invariant_noun),
    "n9": (Gender.Masc, _n9),
    "n10": (Gender.Masc, _n10),
    "n11": (Gender.Fem, _n11),
    "n12": (Gender.Masc, _n12),
    "n13": (Gender.Masc, _n13),
    "n14": (Gender.Masc, _n14),
    "n15": (Gender.Masc, _n15),
}


def noun_paradigms() -> dict[str, object]:
    """Registry of the fifteen noun groups (name -> lemma -> table)."""
    return {name: builder for name, (_, builder) in NOUN_GROUPS.items()}


# Finite endings, appended to the level's root.  Subjunctive varies by
# person+number (gender-invariant); perfective/imperfective by gender+number
# (person-invariant).  Kept as data so the conjugation can be amended.
SUBJ_ENDINGS = {
    (Person.Pers1, Number.Sg): "wN",
    (Person.Pers1, Number.Pl): "yN",
    (Person.Pers2Casual, Number.Sg): "E",
    (Person.Pers2Casual, Number.Pl): "E",
    (Person.Pers2Familiar, Number.Sg): "w",
    (Person.Pers2Familiar, Number.Pl): "w",
    (Person.Pers2Respect, Number.Sg): "yN",
    (Person.Pers2Respect, Number.Pl): "yN",
    (Person.Pers3, Number.Sg): "E",
    (Person.Pers3, Number.Pl): "yN",
}

PERF_ENDINGS = {
    (Gender.Masc, Number.Sg): "a",
    (Gender.Masc, Number.Pl): "E",
    (Gender.Fem, Number.Sg): "y",
    (Gender.Fem, Number.Pl): "yN",
}

IMPERF_ENDINGS = {key: "t" + end for key, end in PERF_ENDINGS.items()}


def _check_infinitive(inf: str) -> None:
    if roman_tokens(inf)[-2:] != ["n", "a"]:
        raise ParadigmError("infinitive must end in tokens na, got %r" % inf)


def mk_gen_verb(root: str | None, caus1_root: str | None, caus2_root: str | None,
                inf: str | None, caus1_inf: str | None, caus2_inf: str | None,
                ) -> dict[VerbForm, str | None]:
    """Build the full 192-cell conjugation from roots and infinitives.

    A level whose root/infinitive is None gets ABSENT in all of its cells.
    """
    roots = {CausLevel.Base: root, CausLevel.Caus1: caus1_root,
             CausLevel.Caus2: caus2_root}
    infs = {CausLevel.Base: inf, CausLevel.Caus1: caus1_inf,
            CausLevel.Caus2: caus2_inf}
    for level in CausLevel:
        if (roots[level] is None) != (infs[level] is None):
            raise ParadigmError("level %s needs both root and infinitive" % level)
        if infs[level] is not None:
            _check_infinitive(infs[level])
            roman_tokens(roots[level])
    table: dict[VerbForm, str | None] = {}
    for form in VerbForm.all():
        r, i = roots[form.level], infs[form.level]
        if r is None:
            table[form] = ABSENT
        elif form.kind == "finite":
            if form.tense is Tense.Subj:
                table[form] = r + SUBJ_ENDINGS[(form.person, form.number)]
            elif form.tense is Tense.Perf:
                table[form] = r + PERF_ENDINGS[(form.gender, form.number)]
            else:
                table[form] = r + IMPERF_ENDINGS[(form.gender, form.number)]
        elif form.kind == "inf":
            table[form] = i
        elif form.kind == "inf_fem":
            table[form] = suffix_drop(1, i) + "y"
        elif form.kind == "inf_obl":
            table[form] = suffix_drop(1, i) + "E"
        else:  # root
            table[form] = r
    return table


def mk_verb_caus12(inf: str, caus1_inf: str, caus2_inf: str) -> dict[VerbForm, str | None]:
    """Irregular-causative verbs: all three infinitives given explicitly."""
    for f in (inf, caus1_inf, caus2_inf):
        _check_infinitive(f)
    return mk_gen_verb(suffix_drop(2, inf), suffix_drop(2, caus1_inf),
                       suffix_drop(2, caus2_inf), inf, caus1_inf, caus2_inf)


def _v1(inf):
    _check_infinitive(inf)
    return mk_gen_verb(suffix_drop(2, inf), None, None, inf, None, None)


def _v2(inf):
    _check_infinitive(inf)
    root = suffix_drop(2, inf)
    return mk_gen_verb(root, root + "a", root + "wa",
                       inf, root + "ana", root + "wana")


def _v3(inf, caus1_inf):
    for f in (inf, caus1_inf):
        _check_infinitive(f)
    return mk_gen_verb(suffix_drop(2, inf), suffix_drop(2, caus1_inf), None,
                       inf, caus1_inf, None)


def verb_categories() -> dict[str, object]:
    """Registry of the four verb categories (v1..v4)."""
    return {"v1": _v1, "v2": _v2, "v3": _v3, "v4": mk_verb_caus12}


def adj_paradigm(lemma: str) -> dict[AdjForm, str]:
    """Marked adjectives (a-final) inflect; everything else is invariant."""
    if _last(lemma) == "a":
        stem = suffix_drop(1, lemma)
        def cell(form):
            if form.gender is Gender.Fem:
                return stem + "y"
            if form.number is Number.Sg and form.case is Case.Nom:
                return lemma
            return stem + "E"
        return {f: cell(f) for f in AdjForm.all()}
    roman_tokens(lemma)
    return {f: lemma for f in AdjForm.all()}


@dataclass(frozen=True)
class Entry:
    """One lexeme: dictionary form, class, inherent features, full table."""

    lemma: str
    word_class: str
    inherent: tuple[str, ...]
    table: dict
    lemma_id: int = 0
    paradigm: str | None = None

    @property
    def display_id(self) -> str:
        """Identifier-style lemma name used in analysis lines and exports."""
        clean = "".join(c for c in self.lemma if c.isalnum())
        return "%s_%d" % (clean, self.lemma_id)

    def defined_cells(self):
        return [(f, s) for f, s in self.table.items() if s is not ABSENT]

    def with_id(self, lemma_id: int) -> "Entry":
        return replace(self, lemma_id=lemma_id)


@dataclass(frozen=True)
class Paradigm:
    name: str
    word_class: str
    arity: int
    inherent: tuple[str, ...]
    builder: object = field(compare=False)


def _registry() -> dict[str, Paradigm]:
    reg = {}
    for name, (gender, builder) in NOUN_GROUPS.items():
        reg[name] = Paradigm(name, "N", 1, (gender.value,), builder)
    arities = {"v1": 1, "v2": 1, "v3": 2, "v4": 3}
    for name, builder in verb_categories().items():
        reg[name] = Paradigm(name, "Verb", arities[name], (), builder)
    reg["a1"] = Paradigm("a1", "Adj", 1, (), adj_paradigm)
    reg["adv1"] = Paradigm("adv1", "Adv", 1, (),
                           lambda lemma: {AdvForm(): lemma})
    return reg


_REGISTRY = _registry()


def registry() -> dict[str, Paradigm]:
    return _REGISTRY


def inflect(paradigm: str, forms: list[str]) -> Entry:
    """Apply a registered paradigm to its dictionary forms."""
    try:
        par = _REGISTRY[paradigm]
    except KeyError:
        raise ParadigmError("unknown paradigm %r" % paradigm) from None
    if len(forms) != par.arity:
        raise ParadigmError("paradigm %s takes %d form(s), got %d"
                            % (paradigm, par.arity, len(forms)))
    table = par.builder(*forms)
    return Entry(lemma=forms[0], word_class=par.word_class,
                 inherent=par.inherent, table=table, paradigm=paradigm)
