"""FastAPI application wrapping the spell-checking core.

The index is loaded once at application start (explicit path or the
NGRAMSPELL_INDEX environment variable) and then shared read-only across
requests, which is safe because a loaded index is immutable.
"""

from __future__ import annotations

import os
from pathlib import Path

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..baselines import hamming, lcs, levenshtein, soundex
from ..correct import CheckOptions, correct_text
from ..detect import detect_errors
from ..candidates import generate_candidates
from ..index import NgramIndex
from ..tokenize import tokenize
from .schemas import (
    CandidateRecord,
    CandidatesRequest,
    CandidatesResponse,
    CheckRequest,
    CheckResponse,
    CorrectionRecord,
    DetectedErrorRecord,
    DetectRequest,
    DetectResponse,
    DistanceResponse,
    HealthResponse,
    LcsResponse,
    SoundexResponse,
    StringPairRequest,
    WordRequest,
)


def create_app(index_path: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="ngramspell", version=__version__)
    path = str(index_path) if index_path else os.environ.get("NGRAMSPELL_INDEX")
    app.state.index = NgramIndex.load(path) if path else None
    app.state.index_path = path

    def require_index() -> NgramIndex:
        if app.state.index is None:
            raise HTTPException(status_code=503, detail="no index loaded")
        return app.state.index

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        index = app.state.index
        return HealthResponse(
            status="ok",
            index_loaded=index is not None,
            index_path=app.state.index_path,
            orders=index.order_sizes() if index is not None else None,
        )

    @app.post("/check", response_model=CheckResponse)
    def check(req: CheckRequest) -> CheckResponse:
        index = require_index()
        opts = CheckOptions(
            k=req.k, backoff=req.backoff, realword=req.realword, tau=req.tau
        )
        report = correct_text(req.text, index, p=req.threads, options=opts)
        return CheckResponse(
            corrected_text=report.corrected_text,
            corrections=[
                CorrectionRecord(
                    token_index=c.token_index,
                    original=c.original,
                    chosen=c.chosen,
                    kind=c.kind.value,
                    nominee_frequency=c.nominee_frequency,
                    fallback_used=c.fallback_used,
                )
                for c in report.corrections
            ],
        )

    @app.post("/detect", response_model=DetectResponse)
    def detect(req: DetectRequest) -> DetectResponse:
        index = require_index()
        errors = detect_errors(tokenize(req.text), index, p=req.threads)
        return DetectResponse(
            errors=[
                DetectedErrorRecord(
                    token_index=e.token_index, word=e.word, kind=e.kind.value
                )
                for e in errors
            ]
        )

    @app.post("/candidates", response_model=CandidatesResponse)
    def candidates(req: CandidatesRequest) -> CandidatesResponse:
        index = require_index()
        try:
            result = generate_candidates(req.word, index, k=req.k)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        return CandidatesResponse(
            error_word=result.error_word,
            candidates=[
                CandidateRecord(
                    word=c.word,
                    shared_bigrams=c.shared_bigrams,
                    length_delta=c.length_delta,
                )
                for c in result.candidates
            ],
        )

    @app.post("/baseline/soundex", response_model=SoundexResponse)
    def baseline_soundex(req: WordRequest) -> SoundexResponse:
        try:
            return SoundexResponse(code=soundex(req.word))
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc

    @app.post("/baseline/editdist", response_model=DistanceResponse)
    def baseline_editdist(req: StringPairRequest) -> DistanceResponse:
        return DistanceResponse(distance=levenshtein(req.a, req.b))

    @app.post("/baseline/hamming", response_model=DistanceResponse)
    def baseline_hamming(req: StringPairRequest) -> DistanceResponse:
        try:
            return DistanceResponse(distance=hamming(req.a, req.b))
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc

    @app.post("/baseline/lcs", response_model=LcsResponse)
    def baseline_lcs(req: StringPairRequest) -> LcsResponse:
        length, witness = lcs(req.a, req.b)
        return LcsResponse(length=length, subsequence=witness)

    return app
