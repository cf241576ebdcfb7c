"""Acceptance checks.

Each test exercises one release criterion end to end; conftest.py prints a
single PASS/FAIL line per criterion so the run log doubles as an acceptance
report.  Criteria with a runtime budget fail if they exceed it.
"""

import functools
import importlib.resources
import random
import time

from fastapi.testclient import TestClient

from urdu_morph import extractor, lexicon, morphology, syntax, translit
from urdu_morph.features import (AdjForm, CausLevel, NounForm, VerbForm)
from urdu_morph.morphology import ABSENT, inflect
from urdu_morph.service import create_app
from urdu_morph.translit import Script, to_phonetic, to_roman, to_urdu


def criterion(name, max_seconds=None):
    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            start = time.monotonic()
            fn(*args, **kwargs)
            elapsed = time.monotonic() - start
            if max_seconds is not None and elapsed > max_seconds:
                raise AssertionError("runtime %.2fs exceeds %.0fs budget"
                                     % (elapsed, max_seconds))
        wrapper.criterion_name = name
        return wrapper
    return deco


def shipped_dictionary():
    data = importlib.resources.files("urdu_morph.data").joinpath(
        "test_lexicon.txt").read_bytes()
    return lexicon.compile_text(data)


def strip_diacritics(urdu):
    table = translit.default_table()
    dia = {table.roman_entry(t).urdu for t in table.diacritic_tokens}
    return "".join(ch for ch in urdu if ch not in dia)


@criterion("transliteration goldens (both directions)", max_seconds=1)
def test_transliteration_goldens():
    assert to_roman("کَوشِش") == "k(a)wX(i)X"
    assert to_urdu("k(a)wX(i)X") == "کَوشِش"
    assert to_roman("بھاگ") == "b|hag"
    assert to_urdu("b|hag") == "بھاگ"
    assert to_phonetic("k(a)wX(i)X") == "koʃɪʃ"


@criterion("transliteration round trip, 2 x 10,000 random strings",
           max_seconds=10)
def test_round_trip_properties():
    table = translit.default_table()
    romans = [e.roman for e in table.entries]
    urdus = [e.urdu for e in table.entries]
    rng = random.Random(424242)
    for _ in range(10000):
        s = "".join(rng.choice(romans) for _ in range(rng.randint(1, 10)))
        assert to_roman(to_urdu(s)) == s
    for _ in range(10000):
        u = "".join(rng.choice(urdus) for _ in range(rng.randint(1, 10)))
        assert to_urdu(to_roman(u)) == u


@criterion("noun paradigm golden: the six n1 cells")
def test_noun_golden():
    entry = inflect("n1", ["l(a)R'ka"])
    cells = [entry.table[f] for f in NounForm.all()]
    assert cells == ["l(a)R'ka", "l(a)R'kE", "l(a)R'kE",
                     "l(a)R'kE", "l(a)R'kwN", "l(a)R'kw"]
    urdu = [strip_diacritics(to_urdu(c)) for c in cells]
    assert urdu == ["لڑکا", "لڑکے", "لڑکے", "لڑکے", "لڑکوں", "لڑکو"]


@criterion("verb golden: roots, infinitives and obliques across causatives")
def test_verb_golden():
    t = inflect("v2", ["bnna"]).table
    got = {
        ("root", CausLevel.Base): "bn",
        ("root", CausLevel.Caus1): "bna",
        ("root", CausLevel.Caus2): "bnwa",
        ("inf", CausLevel.Base): "bnna",
        ("inf", CausLevel.Caus1): "bnana",
        ("inf", CausLevel.Caus2): "bnwana",
        ("inf_obl", CausLevel.Base): "bnnE",
        ("inf_obl", CausLevel.Caus1): "bnanE",
        ("inf_obl", CausLevel.Caus2): "bnwanE",
    }
    for (kind, level), expected in got.items():
        assert t[VerbForm(kind, level)] == expected


@criterion("enumeration counts: 6 / 12 / 192 cells, 64 / 128 present")
def test_enumeration_counts():
    assert len(NounForm.all()) == 6
    assert len(AdjForm.all()) == 12
    assert len(VerbForm.all()) == 192
    v1 = inflect("v1", ["lyna"]).table
    assert sum(1 for s in v1.values() if s is not ABSENT) == 64
    v3 = inflect("v3", ["bT|hna", "bT|hana"]).table
    assert sum(1 for s in v3.values() if s is not ABSENT) == 128


@criterion("sentence analysis golden: five tokens, tree, linearization",
           max_seconds=1)
def test_sentence_end_to_end():
    d = shipped_dictionary()
    tokens = "a(i)s kw ktabyN lyny hyN".split()
    by_token = {t: lexicon.analyze(t, Script.ROMAN, d) for t in tokens}

    def pairs(t):
        return {(a.lemma, a.word_class) for a in by_token[t]}

    assert pairs("a(i)s") == {("y(i)h", "DemPron"), ("m(a)yN", "PersPron")}
    assert pairs("kw") == {("kw", "PostP")}
    assert pairs("ktabyN") == {("ktab", "N")}
    assert pairs("lyny") == {("lyna", "Verb")}
    assert pairs("hyN") == {("hwna", "VerbAux")}

    feats = {t: {a.features for a in by_token[t]} for t in tokens}
    assert feats["ktabyN"] == {("Pl", "Nom")}
    assert by_token["ktabyN"][0].inherent == ("Fem",)
    assert feats["lyny"] == {("Inf_Fem",)}
    hyn = feats["hyN"]
    assert len(hyn) == 2
    assert {f[:-1] for f in hyn} == {("Present", "Pers1", "Pl")}
    assert {f[-1] for f in hyn} == {"Masc", "Fem"}

    trees = syntax.parse(tokens, d)
    expected = ("UsePresS (UseNP (UsePron mayN_0) kw_0 (UseN ktab_0)) "
                "(UseVP lyna_0 hwna_0)")
    assert [syntax.format_tree(t) for t in trees] == [expected]
    assert syntax.linearize_roman(trees[0]) == " ".join(tokens)
    assert syntax.linearize(trees[0], d) == "اِس کو کتابیں لینی ہیں"


@criterion("past-tense golden: linearization and parse round trip")
def test_past_sentence():
    d = shipped_dictionary()
    tree = syntax.parse_tree(
        "UsePastS (DemNP yih_0 myra_0 (UseN qlm_0)) (UseVAux hwna_0)", d)
    assert syntax.linearize(tree, d) == "یہ میرا قلم تھا"
    assert syntax.parse("یہ میرا قلم تھا".split(), d) == [tree]


@criterion("extraction equals brute-force oracle on 200 random corpora",
           max_seconds=30)
def test_extraction_oracle():
    from test_extractor import oracle_extract
    rules = extractor.default_rules()
    rng = random.Random(31337)
    stems = ["ban", "skh", "badl", "cakh", "gr", "ktab", "qlm", "bcc",
             "mrd", "byT", "lRk", "cRy"]
    suffixes = ["", "na", "ana", "wana", "a", "E", "w", "wN", "yN", "aN",
                "y", "ya", "at", "an", "gan", "h", "t"]
    for _ in range(200):
        words = [rng.choice(stems) + rng.choice(suffixes)
                 for _ in range(rng.randint(1, 1000))]
        corpus = extractor.tokenize(" ".join(words))
        assert extractor.emit_candidates(extractor.extract(rules, corpus)) \
            == extractor.emit_candidates(oracle_extract(rules, corpus))


@criterion("shipped rule file: 26 rules, 6 verb / 19 noun / 1 adjective")
def test_rule_file_golden():
    rules = extractor.default_rules()
    assert len(rules) == 26
    classes = [morphology.registry()[r.name].word_class for r in rules]
    assert classes.count("Verb") == 6
    assert classes.count("N") == 19
    assert classes.count("Adj") == 1


@criterion("analyzer duality on a 200-entry random lexicon")
def test_analyzer_duality():
    rng = random.Random(606060)
    cons = ["b", "p", "t", "j", "d", "r", "z", "s", "k", "g", "l", "m", "n"]
    lines = []
    seen = set()
    while len(lines) < 200:
        stem = "".join(rng.choice(cons) + rng.choice(["a", "w", "y"])
                       for _ in range(rng.randint(1, 3)))
        paradigm = rng.choice(["n2", "n5", "n3", "v1", "v2", "a1"])
        lemma = stem
        if paradigm.startswith("v"):
            lemma += "na"
        elif paradigm in ("n5", "n3"):
            lemma += rng.choice(cons)
        if (paradigm, lemma) in seen:
            continue
        seen.add((paradigm, lemma))
        lines.append("%s %s" % (paradigm, lemma))
    d = lexicon.compile_text("\n".join(lines))
    open_entries = [e for e in d.entries if e.paradigm is not None]
    assert len(open_entries) == 200
    # every generated surface analyzes back to exactly the generating cells
    expected = {}
    for entry in d.entries:
        for form, surface in entry.defined_cells():
            expected.setdefault(surface, set()).add(
                (entry.lemma, entry.lemma_id, tuple(form.tokens())))
    for surface, want in expected.items():
        got = {(a.lemma, a.lemma_id, a.features)
               for a in lexicon.analyze(surface, Script.ROMAN, d)}
        assert got == want


@criterion("performance: 5,000-entry lexicon, 100,000-token analysis",
           max_seconds=5)
def test_performance_smoke():
    cons = ["b", "p", "t", "j", "d", "r", "z", "s", "k", "g", "l", "m", "n"]
    rng = random.Random(8080)
    lines = []
    seen = set()
    while len(lines) < 5000:
        lemma = "".join(rng.choice(cons) + rng.choice(["a", "w", "y"])
                        for _ in range(rng.randint(2, 4))) + rng.choice(cons)
        if lemma in seen:
            continue
        seen.add(lemma)
        lines.append("n5 %s" % lemma)
    d = lexicon.compile_text("\n".join(lines))
    surfaces = list(d.fullform_index)
    tokens = [surfaces[i % len(surfaces)] for i in range(100000)]
    hits = 0
    for tok in tokens:
        hits += len(lexicon.analyze(tok, Script.ROMAN, d))
    assert hits >= 100000


@criterion("curation soundness over HTTP, durable across restart")
def test_curation_soundness(tmp_path):
    state = tmp_path / "state"
    state.mkdir()
    base = "n5 ktab\nv1 lyna\n"
    (state / "lexicon.txt").write_text(base)
    client = TestClient(create_app(str(state)))
    corpus = ("banna banana banwana sykhna sykhana sykhwana "
              "parhna parhana parhwana badlna badlana badlwana "
              "cakhna cakhana cakhwana grna grana grwana")
    lid = client.post("/extract", json={"corpus": corpus,
                                        "script": "roman"}).json()["list_id"]
    items = client.get("/candidates", params={
        "list": lid, "page_size": 50}).json()["items"]
    v4 = [i for i in items if i["paradigm"] == "v4"]
    assert len(v4) == 6

    def decide(stem, verdict, forms=None):
        body = {"list_id": lid, "paradigm": "v4", "stem": stem,
                "verdict": verdict}
        if forms:
            body["edited_forms"] = forms
        assert client.post("/decisions", json=body).status_code == 200

    accepted = [v4[0]["stem"], v4[1]["stem"], v4[2]["stem"]]
    rejected = [v4[3]["stem"], v4[4]["stem"]]
    edited = v4[5]["stem"]
    for s in accepted:
        decide(s, "accept")
    for s in rejected:
        decide(s, "reject")
    decide(edited, "edit", ["bnna", "bnana", "bnwana"])

    source = client.get("/lexicon/export", params={"format": "lexicon"}).text
    lines = source.splitlines()
    assert lines[:2] == base.splitlines()
    curated = set(lines[2:])
    assert curated == {"v4 %sna %sana %swana" % (s, s, s) for s in accepted} \
        | {"v4 bnna bnana bnwana"}

    export_before = client.get("/lexicon/export",
                               params={"format": "fullform-tsv"}).text
    restarted = TestClient(create_app(str(state)))
    assert restarted.get("/lexicon/export",
                         params={"format": "fullform-tsv"}).text == export_before
    for status in ("pending", "accepted", "rejected"):
        a = client.get("/candidates", params={"list": lid, "status": status,
                                              "page_size": 50}).json()
        b = restarted.get("/candidates", params={"list": lid, "status": status,
                                                 "page_size": 50}).json()
        assert a == b
