import random

import pytest

from urdu_morph import extractor, lexicon, morphology
from urdu_morph.extractor import (Atom, BoolOp, Candidate, RuleError,
                                  default_rules, emit_candidates, extract,
                                  parse_rules, stats, tokenize)
from urdu_morph.translit import Script


class TestTokenize:
    def test_basic(self):
        corpus = tokenize("aa bb, aa")
        assert corpus.tokens == ("aa", "bb", "aa")
        assert corpus.frequencies == {"aa": 2, "bb": 1}
        assert corpus.word_set == {"aa", "bb"}

    def test_diacritics_stay_word_internal(self):
        corpus = tokenize("k(a)wX(i)X.")
        assert corpus.tokens == ("k(a)wX(i)X",)

    def test_empty(self):
        assert tokenize("").tokens == ()

    def test_urdu_input(self):
        corpus = tokenize("کتاب، قلم۔ کتاب", Script.URDU)
        assert corpus.tokens == ("ktab", "qlm", "ktab")

    def test_urdu_commutes_with_transliteration(self):
        from urdu_morph import translit
        text = "کَوشِش کتاب۔ قلم؟ کتاب"
        assert tokenize(text, Script.URDU) == tokenize(
            translit.to_roman(text), Script.ROMAN)


class TestStats:
    def test_empty(self):
        st = stats(tokenize(""))
        assert (st.total_tokens, st.unique_words,
                st.diacritic_tokens, st.diacritic_unique) == (0, 0, 0, 0)

    def test_single_diacritic_word(self):
        st = stats(tokenize("b(a)n"))
        assert st.diacritic_tokens == 1
        assert st.diacritic_unique == 1

    def test_counts(self):
        st = stats(tokenize("aa aa b(a)n cc"))
        assert st.total_tokens == 4
        assert st.unique_words == 3
        assert st.diacritic_tokens == 1

    def test_shipped_sample_corpus(self):
        # 10,000-token shipped sample; counts verified by an independent
        # tokenizer over the roman rendering.
        import importlib.resources
        text = importlib.resources.files("urdu_morph.data").joinpath(
            "sample_corpus.txt").read_text(encoding="utf-8")
        st = stats(tokenize(text, Script.URDU))
        assert st.total_tokens == 10000
        assert st.unique_words == 752
        assert st.diacritic_tokens == 6539
        assert st.diacritic_unique == 447


class TestParseRules:
    V4_RULE = ('paradigm v4 = x + "na" x + "ana" x + "wana"\n'
               '    { x + "na" & (x + "ana" | x + "wana") } ;\n')

    def test_v4_rule(self):
        [rule] = parse_rules(self.V4_RULE)
        assert rule.name == "v4"
        assert rule.patterns == ("na", "ana", "wana")
        assert rule.constraint == BoolOp("&", Atom("na"),
                                         BoolOp("|", Atom("ana"), Atom("wana")))

    def test_shipped_rule_file(self):
        rules = default_rules()
        assert len(rules) == 26
        classes = [morphology.registry()[r.name].word_class for r in rules]
        assert classes.count("Verb") == 6
        assert classes.count("N") == 19
        assert classes.count("Adj") == 1

    def test_shipped_arities_match_registry(self):
        reg = morphology.registry()
        for rule in default_rules():
            assert len(rule.patterns) == reg[rule.name].arity

    def test_empty_rule_rejected(self):
        with pytest.raises(RuleError):
            parse_rules('paradigm v1 = ;')

    def test_unknown_paradigm(self):
        with pytest.raises(RuleError):
            parse_rules('paradigm q9 = x + "na" { x + "na" } ;')

    def test_arity_checked(self):
        with pytest.raises(RuleError):
            parse_rules('paradigm v4 = x + "na" { x + "na" } ;')

    def test_syntax_error_has_position(self):
        with pytest.raises(RuleError) as ei:
            parse_rules('paradigm v1 = y + "na" { x + "na" } ;')
        assert ei.value.line == 1

    def test_unterminated_string(self):
        with pytest.raises(RuleError):
            parse_rules('paradigm v1 = x + "na { x } ;')

    def test_comments(self):
        rules = parse_rules("# nothing\n" + self.V4_RULE)
        assert len(rules) == 1


def oracle_extract(rules, corpus):
    """Brute force: test every (rule, word) pair directly, no shortcuts."""
    words = sorted(corpus.word_set)
    out = []
    done = set()
    for rule in rules:
        first = rule.patterns[0]
        stems = []
        for w in words:
            if len(w) > len(first) and w.endswith(first):
                stems.append(w[:len(w) - len(first)] if first else w)
        for stem in sorted(set(stems)):
            if (rule.name, stem) in done:
                continue

            def ev(node):
                if isinstance(node, Atom):
                    return (stem + node.suffix) in corpus.word_set
                if node.op == "&":
                    return ev(node.left) and ev(node.right)
                return ev(node.left) or ev(node.right)

            if ev(rule.constraint):
                done.add((rule.name, stem))
                forms = tuple(stem + p for p in rule.patterns)
                out.append(Candidate(rule.name, stem, forms,
                                     tuple(f in corpus.word_set for f in forms)))
    return out


V4_ONLY = ('paradigm v4 = x + "na" x + "ana" x + "wana"\n'
           '{ x + "na" & (x + "ana" | x + "wana") } ;\n')


class TestExtract:
    def test_full_family(self):
        corpus = tokenize("banna banana banwana")
        [cand] = extract(parse_rules(V4_ONLY), corpus)
        assert cand.stem == "ban"
        assert cand.forms == ("banna", "banana", "banwana")
        assert cand.attested == (True, True, True)

    def test_unattested_required_atom(self):
        corpus = tokenize("banana")
        assert extract(parse_rules(V4_ONLY), corpus) == []

    def test_partial_attestation_flags(self):
        corpus = tokenize("banna banana")
        [cand] = extract(parse_rules(V4_ONLY), corpus)
        assert cand.attested == (True, True, False)

    def test_ordering_rule_then_stem(self):
        rules = default_rules()
        corpus = tokenize("milna milana badhna badhana bnna bnana bnwana")
        cands = extract(rules, corpus)
        order = [rules.index(next(r for r in rules if r.name == c.paradigm))
                 for c in cands]
        assert order == sorted(order)

    def test_soundness(self):
        corpus = tokenize("banna banana banwana milna milana xyz")
        for cand in extract(default_rules(), corpus):
            rule = next(r for r in default_rules() if r.name == cand.paradigm)
            assert rule.constraint.holds(cand.stem, corpus.word_set)
            for form in cand.forms:
                assert form.startswith(cand.stem)

    def test_monotonicity(self):
        rules = default_rules()
        small = tokenize("banna banana")
        big = tokenize("banna banana banwana milna milana")
        small_set = set(extract(rules, small))
        big_keys = {(c.paradigm, c.stem) for c in extract(rules, big)}
        for cand in small_set:
            assert (cand.paradigm, cand.stem) in big_keys

    def test_oracle_random_corpora(self):
        rules = default_rules()
        rng = random.Random(77)
        stems = ["ban", "mil", "likh", "parh", "ktab", "qlm", "bacc", "gr"]
        suffixes = ["", "na", "ana", "wana", "E", "wN", "w", "yN", "aN", "y", "a"]
        for _ in range(30):
            words = [rng.choice(stems) + rng.choice(suffixes)
                     for _ in range(rng.randint(5, 120))]
            corpus = tokenize(" ".join(words))
            assert emit_candidates(extract(rules, corpus)) == \
                emit_candidates(oracle_extract(rules, corpus))


class TestEmit:
    def test_format(self):
        corpus = tokenize("banna banana banwana")
        data = emit_candidates(extract(parse_rules(V4_ONLY), corpus))
        assert data == b"v4 banna banana banwana\n"

    def test_empty(self):
        assert emit_candidates([]) == b""

    def test_round_trips_into_lexicon(self):
        corpus = tokenize("banna banana banwana ktabyN ktab ktabwN")
        data = emit_candidates(extract(default_rules(), corpus))
        src = lexicon.parse_lexicon(data)
        assert len(src.commands) >= 1
        for cmd in src.commands:
            assert cmd.paradigm in morphology.registry()
