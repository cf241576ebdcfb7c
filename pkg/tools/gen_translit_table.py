"""Regenerate src/urdu_morph/data/translit_table.tsv.

The roman/phonetic assignments for glyphs not evidenced in common usage are
project conventions; the loader only cares about the structural invariants
(distinct keys, distinct ASCII tokens, unique decodability).
"""

import pathlib

LETTERS = [
    # (codepoint, roman, phonetic, name)
    (0x0627, "a", "ɑ", "alif"),
    (0x0622, "A", "ɑ", "alif madda"),
    (0x0628, "b", "b", "be"),
    (0x067E, "p", "p", "pe"),
    (0x062A, "t", "t̪", "te"),
    (0x0679, "T", "ʈ", "tte"),
    (0x062B, "V", "s", "se"),
    (0x062C, "j", "dʒ", "jim"),
    (0x0686, "c", "tʃ", "che"),
    (0x062D, "H", "h", "baRi he"),
    (0x062E, "x", "x", "khe"),
    (0x062F, "d", "d̪", "dal"),
    (0x0688, "D", "ɖ", "ddal"),
    (0x0630, "Z", "z", "zal"),
    (0x0631, "r", "r", "re"),
    (0x0691, "R", "ɽ", "rre"),
    (0x0632, "z", "z", "ze"),
    (0x0698, "G", "ʒ", "zhe"),
    (0x0633, "s", "s", "sin"),
    (0x0634, "X", "ʃ", "shin"),
    (0x0635, "S", "s", "swad"),
    (0x0636, "W", "z", "zwad"),
    (0x0637, "I", "t̪", "to-e"),
    (0x0638, "U", "z", "zo-e"),
    (0x0639, "e", "ʔ", "ain"),
    (0x063A, "Q", "ɣ", "ghain"),
    (0x0641, "f", "f", "fe"),
    (0x0642, "q", "q", "qaf"),
    (0x06A9, "k", "k", "kaf"),
    (0x06AF, "g", "g", "gaf"),
    (0x0644, "l", "l", "lam"),
    (0x0645, "m", "m", "mim"),
    (0x0646, "n", "n", "nun"),
    (0x06BA, "N", "̃", "nun ghunna"),
    (0x0648, "w", "o", "wao"),
    (0x06C1, "h", "ɦ", "choTi he"),
    (0x06BE, "|h", "ʰ", "do-chashmi he"),
    (0x0621, "^", "ʔ", "hamza"),
    (0x06CC, "y", "i", "choTi ye"),
    (0x06D2, "E", "e", "baRi ye"),
    (0x0623, "~a", "ɑ", "alif hamza above"),
    (0x0624, "~w", "o", "wao hamza above"),
    (0x0626, "~y", "i", "ye hamza above"),
    (0x06C2, "~h", "ɦ", "he goal hamza above"),
    (0x06C3, "~t", "t̪", "te marbuta goal"),
    (0x06D3, "~E", "e", "baRi ye hamza above"),
    (0x06C0, "~e", "ɦ", "he ye above"),
    (0x0625, "~i", "ɪ", "alif hamza below"),
    (0x0672, "~u", "ɑ", "alif wavy hamza above"),
    (0x0673, "~o", "ɑ", "alif wavy hamza below"),
    (0x0629, "*t", "t̪", "Arabic te marbuta"),
    (0x0643, "*k", "k", "Arabic kaf"),
    (0x0647, "*h", "ɦ", "Arabic he"),
    (0x064A, "*y", "i", "Arabic ye"),
    (0x0649, "*a", "ɑ", "alef maksura"),
    (0x0671, "*i", "ɑ", "alef wasla"),
    (0x0640, "_", "", "tatweel"),
]

DIACRITICS = [
    (0x064E, "(a)", "", "zabar"),
    (0x0650, "(i)", "ɪ", "zer"),
    (0x064F, "(u)", "ʊ", "pesh"),
    (0x0652, "'", "", "jazm"),
    (0x0651, "(S)", "ː", "tashdid"),
    (0x064B, "(an)", "ən", "do zabar"),
    (0x064D, "(in)", "ɪn", "do zer"),
    (0x064C, "(un)", "ʊn", "do pesh"),
    (0x0670, "(A)", "ɑ", "khari zabar"),
    (0x0656, "(I)", "i", "khari zer"),
    (0x0657, "(U)", "u", "ulta pesh"),
    (0x0653, "(m)", "ɑ", "madd above"),
    (0x0654, "(h)", "ʔ", "hamza above mark"),
    (0x0655, "(b)", "ʔ", "hamza below mark"),
    (0x0658, "(n)", "̃", "ghunna mark"),
]


def main():
    out = pathlib.Path(__file__).resolve().parents[1] / "src/urdu_morph/data/translit_table.tsv"
    lines = ["# Urdu <-> roman transliteration table: URDU<TAB>ROMAN<TAB>PHONETIC"]
    lines.append("# letters (%d)" % len(LETTERS))
    for cp, roman, phon, name in LETTERS:
        lines.append("%s\t%s\t%s" % (chr(cp), roman, phon))
    lines.append("# diacritic marks (%d)" % len(DIACRITICS))
    for cp, roman, phon, name in DIACRITICS:
        lines.append("%s\t%s\t%s" % (chr(cp), roman, phon))
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print("wrote", out, len(LETTERS), "letters,", len(DIACRITICS), "diacritics")


if __name__ == "__main__":
    main()
