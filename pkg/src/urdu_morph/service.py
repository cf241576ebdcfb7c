"""JSON-over-HTTP service exposing the toolkit plus the curation workflow.

State layout under the state directory:

    lexicon.txt            base lexicon source (created empty if missing)
    candidates/<id>.txt    extracted candidates, emit_candidates format
    candidates/<id>.meta.json  frequencies/attestation for the curation UI
    decisions.log          append-only JSONL decision log, replayed at startup

Decisions supersede each other per (list, paradigm, stem); the full history
stays in the log, so a restart replays to the identical state.
"""

from __future__ import annotations

import datetime
import json
import threading
from pathlib import Path

from fastapi import FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, PlainTextResponse

from . import extractor, lexicon, syntax, translit
from .translit import Script


class ServiceState:
    def __init__(self, state_dir: str):
        self.root = Path(state_dir)
        self.root.mkdir(parents=True, exist_ok=True)
        (self.root / "candidates").mkdir(exist_ok=True)
        self.lexicon_path = self.root / "lexicon.txt"
        if not self.lexicon_path.exists():
            self.lexicon_path.write_text("", encoding="utf-8")
        self.log_path = self.root / "decisions.log"
        self.write_lock = threading.Lock()
        self._cached: tuple[str, lexicon.Dictionary] | None = None

    def dictionary(self) -> lexicon.Dictionary:
        """Compile the curated lexicon, cached until the source changes."""
        source = self.curated_source()
        if self._cached is None or self._cached[0] != source:
            self._cached = (source, lexicon.compile_text(source))
        return self._cached[1]

    # -- candidate lists ----------------------------------------------------

    def new_list_id(self) -> str:
        existing = list((self.root / "candidates").glob("l*.txt"))
        return "l%04d" % (len(existing) + 1)

    def save_candidates(self, list_id: str, candidates, frequencies) -> None:
        txt = extractor.emit_candidates(candidates)
        (self.root / "candidates" / ("%s.txt" % list_id)).write_bytes(txt)
        meta = [{"paradigm": c.paradigm, "stem": c.stem, "forms": list(c.forms),
                 "attested": list(c.attested),
                 "frequency": sum(frequencies.get(f, 0) for f in c.forms)}
                for c in candidates]
        (self.root / "candidates" / ("%s.meta.json" % list_id)).write_text(
            json.dumps(meta, ensure_ascii=False), encoding="utf-8")

    def load_candidates(self, list_id: str) -> list[dict]:
        path = self.root / "candidates" / ("%s.meta.json" % list_id)
        if not path.exists():
            raise HTTPException(status_code=404,
                                detail="unknown candidate list %r" % list_id)
        return json.loads(path.read_text(encoding="utf-8"))

    # -- decisions ----------------------------------------------------------

    def decisions(self) -> list[dict]:
        if not self.log_path.exists():
            return []
        out = []
        for line in self.log_path.read_text(encoding="utf-8").splitlines():
            if line.strip():
                out.append(json.loads(line))
        return out

    def live_decisions(self, list_id: str) -> dict[tuple[str, str], dict]:
        live = {}
        for dec in self.decisions():
            if dec["list_id"] == list_id:
                live[(dec["paradigm"], dec["stem"])] = dec
        return live

    def append_decision(self, decision: dict) -> None:
        with self.write_lock:
            with self.log_path.open("a", encoding="utf-8") as fh:
                fh.write(json.dumps(decision, ensure_ascii=False) + "\n")

    # -- curated lexicon ----------------------------------------------------

    def curated_source(self) -> str:
        """Base lexicon plus accepted candidates (with edits applied)."""
        lines = [self.lexicon_path.read_text(encoding="utf-8").rstrip("\n")]
        for path in sorted((self.root / "candidates").glob("l*.meta.json")):
            list_id = path.name.split(".")[0]
            live = self.live_decisions(list_id)
            for cand in self.load_candidates(list_id):
                dec = live.get((cand["paradigm"], cand["stem"]))
                if dec is None or dec["verdict"] == "reject":
                    continue
                forms = (dec["edited_forms"] if dec["verdict"] == "edit"
                         else cand["forms"])
                lines.append("%s %s" % (cand["paradigm"], " ".join(forms)))
        return "\n".join(line for line in lines if line) + "\n"


def _status_of(decision: dict | None) -> str:
    if decision is None:
        return "pending"
    return "rejected" if decision["verdict"] == "reject" else "accepted"


def create_app(state_dir: str) -> FastAPI:
    state = ServiceState(state_dir)
    app = FastAPI(title="urdu-morph")
    app.state.service = state

    @app.exception_handler(RequestValidationError)
    async def malformed(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    def data_error(exc: Exception) -> HTTPException:
        return HTTPException(status_code=400, detail=str(exc))

    @app.get("/analyze")
    def analyze_endpoint(text: str, script: str = "auto"):
        dictionary = state.dictionary()
        out = []
        for token in text.split():
            if script == "urdu" or (script == "auto"
                                    and any(not c.isascii() for c in token)):
                scr = Script.URDU
            else:
                scr = Script.ROMAN
            try:
                analyses = lexicon.analyze(token, scr, dictionary)
            except translit.TransliterationError as exc:
                raise data_error(exc)
            out.append({"token": token, "analyses": [
                {"line": a.render(), "lemma": a.lemma, "lemma_id": a.lemma_id,
                 "urdu": a.urdu_lemma, "word_class": a.word_class,
                 "features": list(a.features), "inherent": list(a.inherent)}
                for a in analyses]})
        return {"tokens": out}

    @app.get("/translit")
    def translit_endpoint(text: str, to: str):
        try:
            if to == "roman":
                return {"result": translit.to_roman(text)}
            if to == "urdu":
                return {"result": translit.to_urdu(text)}
            if to == "phonetic":
                return {"result": translit.to_phonetic(text)}
        except translit.TransliterationError as exc:
            raise data_error(exc)
        raise data_error(ValueError("to must be urdu, roman or phonetic"))

    @app.get("/synth")
    def synth_endpoint(lemma: str):
        entries = []
        for entry, rows in lexicon.synthesize(lemma, state.dictionary()):
            entries.append({
                "lemma": entry.lemma, "lemma_id": entry.lemma_id,
                "display_id": entry.display_id, "word_class": entry.word_class,
                "rows": [{"features": list(f), "roman": r, "urdu": u}
                         for f, r, u in rows]})
        return {"entries": entries}

    @app.post("/extract")
    async def extract_endpoint(request: Request):
        try:
            body = json.loads(await request.body())
            corpus_text = body["corpus"]
        except (ValueError, KeyError) as exc:
            raise data_error(exc)
        fmt = body.get("format", "plain")
        script = body.get("script", "urdu")
        try:
            if script == "urdu":
                corpus_text = translit.extract_urdu_text(corpus_text, fmt)
                corpus = extractor.tokenize(corpus_text, Script.URDU)
            else:
                corpus = extractor.tokenize(corpus_text, Script.ROMAN)
            candidates = extractor.extract(extractor.default_rules(), corpus)
        except (translit.TransliterationError, extractor.RuleError) as exc:
            raise data_error(exc)
        with state.write_lock:
            list_id = state.new_list_id()
            state.save_candidates(list_id, candidates, corpus.frequencies)
        return {"list_id": list_id, "count": len(candidates)}

    @app.get("/candidates")
    def candidates_endpoint(list: str, status: str = "pending",
                            page: int = 0, page_size: int = 50):
        if status not in ("pending", "accepted", "rejected"):
            raise data_error(ValueError("bad status %r" % status))
        live = state.live_decisions(list)
        items = []
        for cand in state.load_candidates(list):
            dec = live.get((cand["paradigm"], cand["stem"]))
            if _status_of(dec) != status:
                continue
            item = dict(cand)
            item["status"] = _status_of(dec)
            if dec is not None and dec["verdict"] == "edit":
                item["edited_forms"] = dec["edited_forms"]
            items.append(item)
        # Review order: corpus frequency descending, then stem.
        items.sort(key=lambda it: (-it["frequency"], it["stem"]))
        start = page * page_size
        return {"items": items[start:start + page_size],
                "total": len(items), "page": page, "page_size": page_size}

    @app.post("/decisions")
    async def decisions_endpoint(request: Request):
        try:
            body = json.loads(await request.body())
            list_id = body["list_id"]
            paradigm = body["paradigm"]
            stem = body["stem"]
            verdict = body["verdict"]
        except (ValueError, KeyError) as exc:
            raise data_error(exc)
        if verdict not in ("accept", "reject", "edit"):
            raise data_error(ValueError("bad verdict %r" % verdict))
        known = {(c["paradigm"], c["stem"]) for c in state.load_candidates(list_id)}
        if (paradigm, stem) not in known:
            raise HTTPException(status_code=404,
                                detail="unknown candidate %s/%s" % (paradigm, stem))
        edited = body.get("edited_forms")
        if verdict == "edit" and not edited:
            raise HTTPException(status_code=409,
                                detail="edit verdict requires edited_forms")
        if verdict in ("accept", "edit"):
            # Accepted forms go into the curated lexicon, so they must scan;
            # a reviewer fixes unscannable extractions with an edit verdict.
            cand = next(c for c in state.load_candidates(list_id)
                        if (c["paradigm"], c["stem"]) == (paradigm, stem))
            forms = edited if verdict == "edit" else cand["forms"]
            table = translit.default_table()
            for form in forms:
                try:
                    table.scan_roman(form)
                except translit.TransliterationError as exc:
                    raise HTTPException(
                        status_code=400,
                        detail="form %r does not scan: %s" % (form, exc))
        decision = {
            "list_id": list_id, "paradigm": paradigm, "stem": stem,
            "verdict": verdict, "edited_forms": edited,
            "reviewer": body.get("reviewer", ""),
            "timestamp": body.get("timestamp")
            or datetime.datetime.now(datetime.timezone.utc).isoformat(),
        }
        state.append_decision(decision)
        return {"ok": True}

    @app.get("/lexicon/export")
    def export_endpoint(format: str = "fullform-tsv"):
        source = state.curated_source()
        if format == "lexicon":
            return PlainTextResponse(source)
        try:
            dictionary = lexicon.compile_text(source)
            data = lexicon.export(dictionary, format)
        except (lexicon.LexiconError, ValueError) as exc:
            raise data_error(exc)
        media = "application/json" if format == "json" else "text/plain"
        return PlainTextResponse(data.decode("utf-8"), media_type=media)

    @app.get("/keyboard-layout")
    def keyboard_endpoint():
        table = translit.default_table()
        keys = [{"urdu": e.urdu, "roman": e.roman, "phonetic": e.phonetic,
                 "diacritic": e.roman in table.diacritic_tokens}
                for e in table.entries]
        return {"keys": keys}

    @app.get("/parse")
    def parse_endpoint(text: str):
        trees, unknown = syntax.parse_with_diagnostics(
            text.split(), state.dictionary())
        return {"trees": [syntax.format_tree(t) for t in trees],
                "unknown_tokens": unknown}

    @app.get("/linearize")
    def linearize_endpoint(tree: str):
        try:
            node = syntax.parse_tree(tree, state.dictionary())
            return {"result": syntax.linearize(node, state.dictionary())}
        except syntax.SyntaxError_ as exc:
            raise data_error(exc)

    return app
