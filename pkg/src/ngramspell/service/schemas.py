"""Request/response models for the HTTP service."""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field


class HealthResponse(BaseModel):
    status: str
    index_loaded: bool
    index_path: Optional[str] = None
    orders: Optional[dict[int, int]] = None


class CheckRequest(BaseModel):
    text: str
    k: int = Field(default=5, ge=1)
    threads: int = Field(default=1, ge=1)
    realword: bool = False
    tau: float = Field(default=2.0, ge=0)
    backoff: bool = True


class CorrectionRecord(BaseModel):
    token_index: int
    original: str
    chosen: Optional[str]
    kind: str
    nominee_frequency: int
    fallback_used: bool


class CheckResponse(BaseModel):
    corrected_text: str
    corrections: list[CorrectionRecord]


class DetectRequest(BaseModel):
    text: str
    threads: int = Field(default=1, ge=1)


class DetectedErrorRecord(BaseModel):
    token_index: int
    word: str
    kind: str


class DetectResponse(BaseModel):
    errors: list[DetectedErrorRecord]


class CandidatesRequest(BaseModel):
    word: str
    k: int = Field(default=5, ge=1)


class CandidateRecord(BaseModel):
    word: str
    shared_bigrams: int
    length_delta: int


class CandidatesResponse(BaseModel):
    error_word: str
    candidates: list[CandidateRecord]


class WordRequest(BaseModel):
    word: str


class SoundexResponse(BaseModel):
    code: str


class StringPairRequest(BaseModel):
    a: str
    b: str


class DistanceResponse(BaseModel):
    distance: int


class LcsResponse(BaseModel):
    length: int
    subsequence: str
