"""Miniature agreement-aware Urdu syntax over the compiled lexicon.

Abstract syntax:

    S  -> UsePastS NP VP | UsePresS NP VP | CoordS S Conj S
    NP -> UsePron Pron | DemNP Dem Mod CN | DemPN Dem PN | UseNP NP Post CN
    CN -> UseN N        (PN slots are filled by N entries at Sg Nom)
    VP -> UseVAux VAux | UseVP V VAux

Linearization renders roman tokens joined by spaces and transliterates to
Urdu script.  Agreement: every NP carries (number, gender); the VP cell is
selected by the sentence tense plus the NP's number and gender.  Auxiliary
cells are matched on their tense/number/gender feature tokens; the person
token in the closed-class data is display-only.  Parsing is a small chart
over the lexical analyses of each token; candidate trees are kept exactly
when their linearization equals the input.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import translit
from .features import Gender, Number, NounForm, Case, CausLevel, VerbForm
from .lexicon import CATEGORY_OF_CLASS, Dictionary
from .morphology import Entry


class SyntaxError_(ValueError):
    pass


# -- trees -------------------------------------------------------------------

@dataclass(frozen=True)
class UsePron:
    pron: Entry


@dataclass(frozen=True)
class UseN:
    noun: Entry


@dataclass(frozen=True)
class DemNP:
    dem: Entry
    mod: Entry
    cn: UseN


@dataclass(frozen=True)
class DemPN:
    dem: Entry
    pn: Entry


@dataclass(frozen=True)
class UseNP:
    np: object
    post: Entry
    cn: UseN


@dataclass(frozen=True)
class UseVAux:
    aux: Entry


@dataclass(frozen=True)
class UseVP:
    verb: Entry
    aux: Entry


@dataclass(frozen=True)
class UsePastS:
    np: object
    vp: object


@dataclass(frozen=True)
class UsePresS:
    np: object
    vp: object


@dataclass(frozen=True)
class CoordS:
    s1: object
    conj: Entry
    s2: object


NP_NODES = (UsePron, DemNP, DemPN, UseNP)
VP_NODES = (UseVAux, UseVP)
S_NODES = (UsePastS, UsePresS, CoordS)


@dataclass(frozen=True)
class Agreement:
    number: Number
    gender: Gender


def _closed_cell(entry: Entry, required: tuple[str, ...]) -> str:
    """First defined cell whose feature tokens cover all required tokens."""
    need = set(required)
    for form, surface in entry.defined_cells():
        if need <= set(form.tokens()):
            return surface
    raise SyntaxError_("entry %s has no cell with features %s"
                       % (entry.display_id, " ".join(required)))


def _first_form(entry: Entry) -> str:
    for _, surface in entry.defined_cells():
        return surface
    raise SyntaxError_("entry %s has no forms" % entry.display_id)


def _gender_of(entry: Entry) -> Gender:
    return Gender.Fem if "Fem" in entry.inherent else Gender.Masc


def _mod_number(mod: Entry) -> Number:
    """Number a Mod (numeral or adjectival modifier) imposes on its NP."""
    if mod.word_class == "Num" and "Pl" in mod.inherent:
        return Number.Pl
    return Number.Sg


def _noun_cell(noun: Entry, number: Number, case: Case) -> str:
    surface = noun.table.get(NounForm(number, case))
    if surface is None:
        raise SyntaxError_("noun %s lacks cell %s %s"
                           % (noun.display_id, number.value, case.value))
    return surface


def _mod_cell(mod: Entry, gender: Gender, number: Number, case: Case) -> str:
    if mod.word_class == "Num":
        return _first_form(mod)
    return _closed_cell(mod, (gender.value, number.value, case.value))


def _lin_np(tree, case: Case) -> tuple[list[str], Agreement]:
    if isinstance(tree, UsePron):
        for form, surface in tree.pron.defined_cells():
            if case.value in form.tokens():
                toks = set(form.tokens())
                number = Number.Pl if "Pl" in toks else Number.Sg
                gender = Gender.Fem if "Fem" in toks else Gender.Masc
                return [surface], Agreement(number, gender)
        raise SyntaxError_("pronoun %s has no %s cell"
                           % (tree.pron.display_id, case.value))
    if isinstance(tree, DemNP):
        number = _mod_number(tree.mod)
        gender = _gender_of(tree.cn.noun)
        dem = _closed_cell(tree.dem, (number.value, case.value))
        mod = _mod_cell(tree.mod, gender, number, case)
        cn = _noun_cell(tree.cn.noun, number, case)
        return [dem, mod, cn], Agreement(number, gender)
    if isinstance(tree, DemPN):
        dem = _closed_cell(tree.dem, (Number.Sg.value, case.value))
        pn = _noun_cell(tree.pn, Number.Sg, Case.Nom)
        return [dem, pn], Agreement(Number.Sg, _gender_of(tree.pn))
    if isinstance(tree, UseNP):
        # The postposition comes from the tree, never from the sentence rule;
        # the embedded NP is oblique, the CN is a plural nominative head whose
        # gender and number drive the sentence agreement.
        inner, _ = _lin_np(tree.np, Case.Obl)
        post = _first_form(tree.post)
        cn = _noun_cell(tree.cn.noun, Number.Pl, Case.Nom)
        return inner + [post, cn], Agreement(Number.Pl, _gender_of(tree.cn.noun))
    raise SyntaxError_("not an NP node: %r" % (tree,))


def _lin_vp(tree, tense: str, agr: Agreement) -> list[str]:
    aux_req = (tense, agr.number.value, agr.gender.value)
    if isinstance(tree, UseVAux):
        return [_closed_cell(tree.aux, aux_req)]
    if isinstance(tree, UseVP):
        kind = "inf_fem" if agr.gender is Gender.Fem else "inf"
        verb = tree.verb.table.get(VerbForm(kind, CausLevel.Base))
        if verb is None:
            raise SyntaxError_("verb %s lacks %s" % (tree.verb.display_id, kind))
        return [verb, _closed_cell(tree.aux, aux_req)]
    raise SyntaxError_("not a VP node: %r" % (tree,))


def _lin_roman_tokens(tree) -> list[str]:
    if isinstance(tree, UsePastS):
        toks, agr = _lin_np(tree.np, Case.Nom)
        return toks + _lin_vp(tree.vp, "Past", agr)
    if isinstance(tree, UsePresS):
        toks, agr = _lin_np(tree.np, Case.Obl)
        return toks + _lin_vp(tree.vp, "Present", agr)
    if isinstance(tree, CoordS):
        return (_lin_roman_tokens(tree.s1) + [_first_form(tree.conj)]
                + _lin_roman_tokens(tree.s2))
    if isinstance(tree, NP_NODES):
        toks, _ = _lin_np(tree, Case.Nom)
        return toks
    if isinstance(tree, UseN):
        return [_noun_cell(tree.noun, Number.Sg, Case.Nom)]
    raise SyntaxError_("cannot linearize %r standalone" % (tree,))


def linearize_roman(tree) -> str:
    return " ".join(_lin_roman_tokens(tree))


def linearize(tree, dictionary: Dictionary | None = None) -> str:
    """Render a tree as an Urdu-script sentence."""
    return " ".join(translit.to_urdu(tok) for tok in _lin_roman_tokens(tree))


# -- lexicon loading ---------------------------------------------------------

class SyntaxLexicon:
    def __init__(self, by_category: dict[str, list[Entry]]):
        self.by_category = by_category

    def entries(self, category: str) -> list[Entry]:
        return self.by_category.get(category, [])


def build_lexicon(dictionary: Dictionary) -> SyntaxLexicon:
    by_cat: dict[str, list[Entry]] = {}
    for entry in dictionary.entries:
        cat = CATEGORY_OF_CLASS[entry.word_class]
        by_cat.setdefault(cat, []).append(entry)
    return SyntaxLexicon(by_cat)


def load_gf_lexicon(exported: bytes | str, dictionary: Dictionary) -> SyntaxLexicon:
    """Load the gf-lexicon export, resolving each declaration in dictionary."""
    if isinstance(exported, bytes):
        exported = exported.decode("utf-8")
    by_cat: dict[str, list[Entry]] = {}
    for lineno, line in enumerate(exported.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("--"):
            continue
        parts = line.rstrip(";").split(":")
        if len(parts) != 2:
            raise SyntaxError_("line %d: malformed declaration %r" % (lineno, line))
        name, cat = parts[0].strip(), parts[1].strip()
        entry = dictionary.entry_by_display_id(name)
        if entry is None:
            raise SyntaxError_("line %d: unknown lemma %r" % (lineno, name))
        if CATEGORY_OF_CLASS[entry.word_class] != cat:
            raise SyntaxError_("line %d: %r declared %s but has class %s"
                               % (lineno, name, cat, entry.word_class))
        by_cat.setdefault(cat, []).append(entry)
    return SyntaxLexicon(by_cat)


# -- parsing -----------------------------------------------------------------

def _lexical_matches(lexicon: SyntaxLexicon, token: str, category: str):
    for entry in lexicon.entries(category):
        for form, surface in entry.defined_cells():
            if surface == token:
                yield entry, form


def parse_with_diagnostics(tokens: list[str], dictionary: Dictionary):
    """All trees whose linearization equals the input, plus unknown tokens."""
    roman = [translit.to_roman(t) if any(not c.isascii() for c in t) else t
             for t in tokens]
    lexicon = build_lexicon(dictionary)
    unknown = [t for t in roman if t not in dictionary.fullform_index]
    if not roman or unknown:
        return [], unknown

    n = len(roman)

    def leaf(i, category):
        seen = []
        for entry, _ in _lexical_matches(lexicon, roman[i], category):
            if entry not in seen:
                seen.append(entry)
        return seen

    # NP chart: np[(i, j)] -> list of NP trees (candidates, filtered later).
    np_chart: dict[tuple[int, int], list] = {}
    for i in range(n):
        for e in leaf(i, "Pron"):
            np_chart.setdefault((i, i + 1), []).append(UsePron(e))
    for i in range(n - 1):
        for dem in leaf(i, "Dem"):
            for pn in leaf(i + 1, "N"):
                np_chart.setdefault((i, i + 2), []).append(DemPN(dem, pn))
    for i in range(n - 2):
        for dem in leaf(i, "Dem"):
            for mod in leaf(i + 1, "Mod"):
                for cn in leaf(i + 2, "N"):
                    np_chart.setdefault((i, i + 3), []).append(
                        DemNP(dem, mod, UseN(cn)))
    # UseNP is left-recursive on NP; iterate spans in increasing width.
    for width in range(3, n + 1):
        for i in range(n - width + 1):
            j = i + width
            for k in range(i + 1, j - 1):
                for np in np_chart.get((i, k), []):
                    for post in leaf(k, "Post"):
                        for cn in leaf(j - 1, "N"):
                            if j - 1 == k + 1:
                                np_chart.setdefault((i, j), []).append(
                                    UseNP(np, post, UseN(cn)))

    vp_chart: dict[tuple[int, int], list] = {}
    for i in range(n):
        for aux in leaf(i, "VAux"):
            vp_chart.setdefault((i, i + 1), []).append(UseVAux(aux))
    for i in range(n - 1):
        for v in leaf(i, "V"):
            for aux in leaf(i + 1, "VAux"):
                vp_chart.setdefault((i, i + 2), []).append(UseVP(v, aux))

    s_chart: dict[tuple[int, int], list] = {}
    for width in range(2, n + 1):
        for i in range(n - width + 1):
            j = i + width
            cell = []
            for k in range(i + 1, j):
                for np in np_chart.get((i, k), []):
                    for vp in vp_chart.get((k, j), []):
                        cell.append(UsePastS(np, vp))
                        cell.append(UsePresS(np, vp))
            for k in range(i + 1, j - 1):
                for s1 in s_chart.get((i, k), []):
                    for conj in leaf(k, "Conj"):
                        for s2 in s_chart.get((k + 1, j), []):
                            cell.append(CoordS(s1, conj, s2))
            if cell:
                s_chart[(i, j)] = cell

    trees = []
    for cand in s_chart.get((0, n), []):
        try:
            if _lin_roman_tokens(cand) == roman:
                trees.append(cand)
        except SyntaxError_:
            continue
    return trees, unknown


def parse(tokens: list[str], dictionary: Dictionary) -> list:
    trees, _ = parse_with_diagnostics(tokens, dictionary)
    return trees


# -- tree text format --------------------------------------------------------

_NODE_TYPES = {cls.__name__: cls for cls in
               (UsePastS, UsePresS, CoordS, UsePron, DemNP, DemPN, UseNP,
                UseN, UseVAux, UseVP)}


def format_tree(tree) -> str:
    """Render a tree in the function-application text format."""
    def fmt(node):
        if isinstance(node, Entry):
            return node.display_id
        name = type(node).__name__
        children = [fmt(getattr(node, f)) for f in node.__dataclass_fields__]
        return "(%s %s)" % (name, " ".join(children))
    out = fmt(tree)
    return out[1:-1] if out.startswith("(") else out


def parse_tree(text: str, dictionary: Dictionary):
    """Inverse of format_tree: read a tree over the dictionary's entries."""
    toks = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def read():
        nonlocal pos
        if pos >= len(toks):
            raise SyntaxError_("unexpected end of tree text")
        tok = toks[pos]
        if tok == "(":
            pos += 1
            node = read_node()
            if pos >= len(toks) or toks[pos] != ")":
                raise SyntaxError_("missing ')' in tree text")
            pos += 1
            return node
        if tok == ")":
            raise SyntaxError_("unexpected ')'")
        pos += 1
        entry = dictionary.entry_by_display_id(tok)
        if entry is None:
            raise SyntaxError_("unknown lemma %r in tree" % tok)
        return entry

    def read_node():
        nonlocal pos
        name = toks[pos]
        if name not in _NODE_TYPES:
            raise SyntaxError_("unknown constructor %r" % name)
        pos += 1
        cls = _NODE_TYPES[name]
        args = []
        for _ in cls.__dataclass_fields__:
            args.append(read())
        return cls(*args)

    node = read_node()
    if pos != len(toks):
        raise SyntaxError_("trailing tokens in tree text")
    return node
