"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 data error (bad input files,
unscannable text, unknown paradigms, ...).  Errors go to stderr.
"""

from __future__ import annotations

import importlib.resources
import json
import sys

import click

from . import extractor, lexicon, morphology, syntax, translit
from .translit import Script

DATA_ERRORS = (translit.TableError, translit.TransliterationError,
               morphology.ParadigmError, lexicon.LexiconError,
               extractor.RuleError, syntax.SyntaxError_, ValueError)


def _default_lexicon_bytes() -> bytes:
    return importlib.resources.files("urdu_morph.data").joinpath(
        "test_lexicon.txt").read_bytes()


def _load_dictionary(lexfile: str | None) -> lexicon.Dictionary:
    if lexfile is None:
        data = _default_lexicon_bytes()
    else:
        with open(lexfile, "rb") as fh:
            data = fh.read()
    return lexicon.compile_text(data)


def _script(name: str) -> Script:
    return Script.URDU if name == "urdu" else Script.ROMAN


lexicon_option = click.option(
    "--lexicon", "lexfile", type=click.Path(exists=True), default=None,
    help="Lexicon source file (defaults to the shipped demo lexicon).")


@click.group()
def cli():
    """Urdu morphology toolkit."""


@cli.command("translit")
@click.option("--to", "target", type=click.Choice(["urdu", "roman", "phonetic"]),
              required=True)
@click.argument("text", required=False)
def translit_cmd(target, text):
    """Transliterate TEXT (or stdin) between Urdu script, roman and phonetic."""
    if text is None:
        text = sys.stdin.read().rstrip("\n")
    if target == "roman":
        click.echo(translit.to_roman(text))
    elif target == "urdu":
        click.echo(translit.to_urdu(text))
    else:
        click.echo(translit.to_phonetic(text))


@cli.command()
@click.argument("paradigm")
@click.argument("forms", nargs=-1, required=True)
def inflect(paradigm, forms):
    """Print the full inflection table of PARADIGM applied to FORMS."""
    entry = morphology.inflect(paradigm, list(forms))
    for form, surface in entry.defined_cells():
        feats = " ".join(form.tokens()) or "-"
        click.echo("%s\t%s\t%s" % (feats, surface, translit.to_urdu(surface)))


@cli.command("compile")
@click.argument("lexfile", type=click.Path(exists=True))
def compile_cmd(lexfile):
    """Compile LEXFILE and report entry and form counts."""
    with open(lexfile, "rb") as fh:
        dictionary = lexicon.compile_text(fh.read())
    forms = sum(len(e.defined_cells()) for e in dictionary.entries)
    click.echo("entries: %d" % len(dictionary.entries))
    click.echo("forms: %d" % forms)


@cli.command()
@click.option("--script", "script_name", type=click.Choice(["roman", "urdu"]),
              default="roman", show_default=True)
@lexicon_option
def analyze(script_name, lexfile):
    """Analyze words from stdin, one token per line."""
    dictionary = _load_dictionary(lexfile)
    for line in sys.stdin:
        word = line.strip()
        if not word:
            continue
        for a in lexicon.analyze(word, _script(script_name), dictionary):
            click.echo(a.render())


@cli.command()
@click.argument("lemma")
@lexicon_option
def synth(lemma, lexfile):
    """Print every inflected form of LEMMA."""
    dictionary = _load_dictionary(lexfile)
    for entry, rows in lexicon.synthesize(lemma, dictionary):
        click.echo("# %s (%s)" % (entry.display_id, entry.word_class))
        for feats, roman, urdu in rows:
            click.echo("%s\t%s\t%s" % (" ".join(feats) or "-", roman, urdu))


@cli.command()
@click.option("--script", "script_name", type=click.Choice(["roman", "urdu"]),
              default="roman", show_default=True)
def tokenize(script_name):
    """Tokenize stdin into corpus words."""
    corpus = extractor.tokenize(sys.stdin.read(), _script(script_name))
    for tok in corpus.tokens:
        click.echo(tok)


@cli.command()
@click.option("--script", "script_name", type=click.Choice(["roman", "urdu"]),
              default="roman", show_default=True)
def stats(script_name):
    """Corpus statistics for stdin text."""
    st = extractor.stats(extractor.tokenize(sys.stdin.read(), _script(script_name)))
    click.echo("tokens: %d" % st.total_tokens)
    click.echo("unique: %d" % st.unique_words)
    click.echo("diacritic tokens: %d" % st.diacritic_tokens)
    click.echo("diacritic unique: %d" % st.diacritic_unique)


@cli.command()
@click.option("--rules", "rulefile", type=click.Path(exists=True), default=None,
              help="Rule file (defaults to the shipped 26-rule file).")
@click.option("--corpus", "corpusfile", type=click.Path(exists=True), required=True)
@click.option("--script", "script_name", type=click.Choice(["roman", "urdu"]),
              default="urdu", show_default=True)
@click.option("--format", "fmt", type=click.Choice(["plain", "html"]),
              default="plain", show_default=True)
def extract(rulefile, corpusfile, script_name, fmt):
    """Extract lexicon candidates from a corpus file."""
    if rulefile is None:
        rules = extractor.default_rules()
    else:
        with open(rulefile, "rb") as fh:
            rules = extractor.parse_rules(fh.read())
    with open(corpusfile, "rb") as fh:
        text = fh.read().decode("utf-8", errors="replace")
    if script_name == "urdu":
        text = translit.extract_urdu_text(text, fmt)
    corpus = extractor.tokenize(text, _script(script_name))
    cands = extractor.extract(rules, corpus)
    sys.stdout.write(extractor.emit_candidates(cands).decode("utf-8"))


@cli.command()
@click.option("--format", "fmt", type=click.Choice(list(lexicon.EXPORT_FORMATS)),
              required=True)
@lexicon_option
def export(fmt, lexfile):
    """Export the compiled dictionary."""
    sys.stdout.buffer.write(lexicon.export(_load_dictionary(lexfile), fmt))


@cli.command()
@lexicon_option
def parse(lexfile):
    """Parse sentences from stdin (one per line) to syntax trees."""
    dictionary = _load_dictionary(lexfile)
    for line in sys.stdin:
        toks = line.split()
        if not toks:
            continue
        trees, unknown = syntax.parse_with_diagnostics(toks, dictionary)
        for tok in unknown:
            click.echo("no analysis for token %r" % tok, err=True)
        for tree in trees:
            click.echo(syntax.format_tree(tree))


@cli.command()
@lexicon_option
def linearize(lexfile):
    """Linearize trees from stdin (one per line) to Urdu sentences."""
    dictionary = _load_dictionary(lexfile)
    for line in sys.stdin:
        if not line.strip():
            continue
        tree = syntax.parse_tree(line.strip(), dictionary)
        click.echo(syntax.linearize(tree, dictionary))


@cli.command()
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--state", "state_dir", type=click.Path(), required=True)
def serve(port, host, state_dir):
    """Run the HTTP service."""
    import uvicorn

    from .service import create_app
    uvicorn.run(create_app(state_dir), host=host, port=port)


def main(argv=None):
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except click.exceptions.Abort:
        return 1
    except click.ClickException as exc:
        exc.show(file=sys.stderr)
        return 1
    except DATA_ERRORS as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
