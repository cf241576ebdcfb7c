"""Generate data/sample_corpus.txt: a deterministic 10,000-token Urdu text.

The vocabulary is synthetic (random well-formed roman words rendered to Urdu
script), drawn with a Zipf-like distribution, with sentence punctuation mixed
in. Rerunning this script reproduces the file byte for byte.
"""

import pathlib
import random

from urdu_morph import translit

CONSONANTS = ["b", "p", "t", "T", "j", "c", "d", "D", "r", "R", "z", "s", "X",
              "f", "q", "k", "g", "l", "m", "n", "w", "h", "y", "x", "G"]
VOWELS = ["a", "w", "y", "E", "A"]
DIACRITICS = ["(a)", "(i)", "(u)", "'"]
SUFFIXES = ["", "", "", "na", "ana", "wana", "E", "wN", "yN", "aN", "w", "y"]


def make_word(rng):
    toks = []
    for _ in range(rng.randint(1, 3)):
        toks.append(rng.choice(CONSONANTS))
        if rng.random() < 0.35:
            toks.append(rng.choice(DIACRITICS))
        if rng.random() < 0.6:
            toks.append(rng.choice(VOWELS))
    return "".join(toks) + rng.choice(SUFFIXES)


def main():
    rng = random.Random(20240711)
    vocab = []
    seen = set()
    while len(vocab) < 800:
        w = make_word(rng)
        try:
            translit.default_table().scan_roman(w)
        except translit.TransliterationError:
            continue
        if w not in seen:
            seen.add(w)
            vocab.append(w)
    # Zipf-like weights so a handful of words dominates, as in real text.
    weights = [1.0 / (i + 1) for i in range(len(vocab))]
    tokens = rng.choices(vocab, weights=weights, k=10000)

    out = []
    line = []
    for i, tok in enumerate(tokens, 1):
        line.append(translit.to_urdu(tok))
        if rng.random() < 0.12:
            line[-1] += rng.choice(["۔", "،", "؟"])
        if len(line) >= 12:
            out.append(" ".join(line))
            line = []
    if line:
        out.append(" ".join(line))
    path = pathlib.Path(__file__).resolve().parent.parent / "src" / \
        "urdu_morph" / "data" / "sample_corpus.txt"
    path.write_text("\n".join(out) + "\n", encoding="utf-8")
    print("wrote %s (%d tokens, %d vocab)" % (path, len(tokens), len(vocab)))


if __name__ == "__main__":
    main()
