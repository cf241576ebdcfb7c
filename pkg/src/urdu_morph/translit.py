"""Bijective Urdu-script <-> roman transliteration.

The codec is table driven: every table row maps one Urdu codepoint sequence
to one ASCII roman token and one phonetic token.  Both directions are
longest-match scanners, and the loader rejects any table for which
longest-match decoding is ambiguous, so ``to_urdu(to_roman(t)) == t`` and
``to_roman(to_urdu(s)) == s`` hold for every covered string.
"""

from __future__ import annotations

import enum
import html.parser
import importlib.resources
import string
import unicodedata
from dataclasses import dataclass


class Script(enum.Enum):
    URDU = "urdu"
    ROMAN = "roman"


class TableError(ValueError):
    """The table file violates a structural invariant."""


class TransliterationError(ValueError):
    """Input cannot be scanned; carries the failing offset."""

    def __init__(self, message: str, offset: int, residue: str = ""):
        super().__init__(message)
        self.offset = offset
        self.residue = residue


# Arabic-block punctuation and digits pass through both directions unchanged,
# like ASCII whitespace/digits/punctuation.  ASCII characters used inside
# roman tokens are reserved and never pass through.
_ARABIC_PASSTHROUGH = set("۔،؛؟٪٫٬٭") | {
    chr(c) for c in range(0x0660, 0x066A)
} | {chr(c) for c in range(0x06F0, 0x06FA)}

# Unicode blocks counted as Arabic script by the extractor.
_ARABIC_BLOCKS = (
    (0x0600, 0x06FF),
    (0x0750, 0x077F),
    (0x08A0, 0x08FF),
    (0xFB50, 0xFDFF),
    (0xFE70, 0xFEFF),
)


def _is_arabic(ch: str) -> bool:
    cp = ord(ch)
    return any(lo <= cp <= hi for lo, hi in _ARABIC_BLOCKS)


@dataclass(frozen=True)
class TableEntry:
    urdu: str
    roman: str
    phonetic: str


class TranslitTable:
    """Validated, immutable transliteration table."""

    def __init__(self, entries: list[TableEntry]):
        if not entries:
            raise TableError("table must be non-empty")
        self.entries = tuple(entries)
        romans = {}
        urdus = {}
        for i, ent in enumerate(entries):
            row = "row %d (%r)" % (i + 1, ent.roman)
            if not ent.roman:
                raise TableError("empty roman token at %s" % row)
            if not ent.roman.isascii():
                raise TableError("non-ASCII roman token at %s" % row)
            if not ent.urdu:
                raise TableError("empty Urdu key at %s" % row)
            if ent.roman in romans:
                raise TableError("duplicate roman token %r at %s" % (ent.roman, row))
            if ent.urdu in urdus:
                raise TableError("duplicate Urdu key %r at %s" % (ent.urdu, row))
            romans[ent.roman] = ent
            urdus[ent.urdu] = ent
        self._by_roman = romans
        self._by_urdu = urdus
        self._max_roman = max(len(r) for r in romans)
        self._max_urdu = max(len(u) for u in urdus)
        self.reserved_ascii = frozenset("".join(romans))
        # ASCII characters that pass through unchanged in both directions.
        self.passthrough = frozenset(
            c for c in string.digits + string.punctuation + string.whitespace
            if c not in self.reserved_ascii
        ) | frozenset(_ARABIC_PASSTHROUGH)
        self.diacritic_tokens = frozenset(
            e.roman for e in entries
            if all(unicodedata.category(ch) == "Mn" for ch in e.urdu)
        )
        self._check_decodable()

    def _check_decodable(self) -> None:
        # Longest-match scanning must recover every ordered token pair.
        for e1 in self.entries:
            for e2 in self.entries:
                got = self.scan_roman(e1.roman + e2.roman)
                if got != [e1.roman, e2.roman]:
                    raise TableError(
                        "ambiguous token pair %r + %r scans as %r"
                        % (e1.roman, e2.roman, got)
                    )

    def scan_roman(self, text: str, passthrough: bool = False) -> list[str]:
        """Split a roman string into table tokens by longest match.

        With ``passthrough`` enabled, characters from the pass-through set are
        kept as single-character pseudo-tokens.
        """
        out = []
        i = 0
        n = len(text)
        while i < n:
            match = None
            for l in range(min(self._max_roman, n - i), 0, -1):
                cand = text[i:i + l]
                if cand in self._by_roman:
                    match = cand
                    break
            if match is None:
                if passthrough and text[i] in self.passthrough:
                    out.append(text[i])
                    i += 1
                    continue
                raise TransliterationError(
                    "cannot scan roman text at offset %d: %r" % (i, text[i:i + 12]),
                    offset=i, residue=text[i:],
                )
            out.append(match)
            i += len(match)
        return out

    def roman_entry(self, token: str) -> TableEntry:
        return self._by_roman[token]

    def is_token(self, token: str) -> bool:
        return token in self._by_roman


def load_table(source: bytes | str) -> TranslitTable:
    """Parse and validate a table file (URDU<TAB>ROMAN<TAB>PHONETIC lines)."""
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    entries = []
    for lineno, line in enumerate(source.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise TableError("malformed line %d: expected 3 tab-separated fields" % lineno)
        urdu, roman, phonetic = fields
        entries.append(TableEntry(urdu=urdu, roman=roman, phonetic=phonetic))
    return TranslitTable(entries)


_DEFAULT: TranslitTable | None = None


def default_table() -> TranslitTable:
    """The table shipped with the package, loaded once."""
    global _DEFAULT
    if _DEFAULT is None:
        data = importlib.resources.files("urdu_morph.data").joinpath("translit_table.tsv")
        _DEFAULT = load_table(data.read_bytes())
    return _DEFAULT


def to_roman(text: str, table: TranslitTable | None = None) -> str:
    """Transliterate Urdu script to the roman scheme (lossless, hard errors)."""
    table = table or default_table()
    out = []
    i = 0
    n = len(text)
    while i < n:
        match = None
        for l in range(min(table._max_urdu, n - i), 0, -1):
            cand = text[i:i + l]
            if cand in table._by_urdu:
                match = cand
                break
        if match is not None:
            out.append(table._by_urdu[match].roman)
            i += len(match)
            continue
        ch = text[i]
        if ch in table.passthrough:
            out.append(ch)
            i += 1
            continue
        raise TransliterationError(
            "uncovered codepoint U+%04X at offset %d" % (ord(ch), i),
            offset=i, residue=text[i:],
        )
    return "".join(out)


def to_urdu(text: str, table: TranslitTable | None = None) -> str:
    """Transliterate a roman string back to Urdu script."""
    table = table or default_table()
    out = []
    for tok in table.scan_roman(text, passthrough=True):
        if table.is_token(tok):
            out.append(table.roman_entry(tok).urdu)
        else:
            out.append(tok)
    return "".join(out)


def to_phonetic(text: str, table: TranslitTable | None = None) -> str:
    """Render a roman string phonetically, one phonetic token per roman token."""
    table = table or default_table()
    out = []
    for tok in table.scan_roman(text, passthrough=True):
        if table.is_token(tok):
            out.append(table.roman_entry(tok).phonetic)
        else:
            out.append(tok)
    return "".join(out)


class _TextExtractor(html.parser.HTMLParser):
    def __init__(self):
        super().__init__()
        self.chunks = []
        self._skip = 0

    def handle_starttag(self, tag, attrs):
        if tag in ("script", "style"):
            self._skip += 1

    def handle_endtag(self, tag):
        if tag in ("script", "style") and self._skip:
            self._skip -= 1

    def handle_data(self, data):
        if not self._skip:
            self.chunks.append(data)


def extract_urdu_text(document: bytes | str, format: str = "plain") -> str:
    """Keep only Arabic-script runs (plus whitespace between them).

    Deliberately lossy: markup and non-Arabic text are dropped silently.
    """
    if isinstance(document, bytes):
        document = document.decode("utf-8", errors="replace")
    if format == "html":
        parser = _TextExtractor()
        parser.feed(document)
        document = "".join(parser.chunks)
    elif format != "plain":
        raise ValueError("unknown format %r" % format)
    out = []
    pending_ws = ""
    for ch in document:
        if _is_arabic(ch):
            if out and pending_ws:
                out.append(pending_ws)
            pending_ws = ""
            out.append(ch)
        elif ch.isspace():
            pending_ws += ch
        else:
            pending_ws = ""
    return "".join(out)
