"""HTTP service exposing scales, progressions, chord rendering, and MIDI export.

All endpoints are pure functions of their inputs over immutable tables, so
identical requests always produce identical bodies. Long progression lists
are paged; nothing is recomputed per request beyond a cached enumeration.
"""

from __future__ import annotations

import functools
from pathlib import Path
from typing import Any, Iterable

from fastapi import FastAPI, HTTPException, Query, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import dataset as dataset_io
from .errors import MidiRangeError
from .graph import (
    NumericProgression,
    default_table,
    count_by_matrix_power,
    enumerate_progressions,
    explain_invalid,
    parse_progression,
)
from .midi import PlaybackConfig, get_music_notes, to_timed_events, write_smf
from .scales import Mode, Scale, chords_in_scale, enumerate_scales, parse_scale_id
from .variations import alternates, realize_progression

import io

MIN_LENGTH = 2
MAX_LENGTH = 8
MAX_PROGRESSION_TOKENS = 32
DEFAULT_PAGE_SIZE = 100
MAX_PAGE_SIZE = 1000


def _bad_request(error: str, message: str) -> HTTPException:
    return HTTPException(status_code=400, detail={"error": error, "message": message})


@functools.lru_cache(maxsize=32)
def _cached_progressions(mode: Mode, length: int) -> tuple[NumericProgression, ...]:
    return tuple(enumerate_progressions(default_table(mode), length))


def _parse_mode(text: str) -> Mode:
    try:
        return Mode(text)
    except ValueError:
        raise _bad_request("invalid_mode", f"mode must be 'major' or 'minor', got {text!r}")


def _parse_scale(text: str) -> Scale:
    try:
        return parse_scale_id(text)
    except ValueError as exc:
        raise _bad_request("invalid_scale", str(exc))


def _parse_body_progression(value: str | list[str], mode: Mode) -> NumericProgression:
    text = value if isinstance(value, str) else ",".join(value)
    try:
        progression = parse_progression(text, mode)
    except ValueError as exc:
        raise _bad_request("invalid_progression", str(exc))
    if len(progression.tokens) > MAX_PROGRESSION_TOKENS:
        raise _bad_request(
            "invalid_progression",
            f"progression longer than {MAX_PROGRESSION_TOKENS} tokens",
        )
    reason = explain_invalid(progression, default_table(mode))
    if reason is not None:
        raise _bad_request("invalid_progression", reason)
    return progression


def keys_in_chords(chords: Iterable) -> list[list[str]]:
    """Note-name triples per chord, e.g. [["C","E","G"], ...]."""
    return [[str(note) for note in chord.notes] for chord in chords]


class DatasetBackend:
    """Pre-generated dataset rows, indexed for request serving.

    Serves the numeric progression lists and the rendered scale progressions
    recorded in the file; anything the file does not cover falls back to
    computation, and both paths must agree.
    """

    def __init__(self, rows: Iterable[dataset_io.DatasetRow]):
        self._progressions: dict[tuple[str, int], list[tuple[str, ...]]] = {}
        self._symbols: dict[tuple[str, tuple[str, ...]], tuple[str, ...]] = {}
        seen: set[tuple[str, int, tuple[str, ...]]] = set()
        for row in rows:
            key = (row.mode, len(row.number_progression), row.number_progression)
            if key not in seen:
                seen.add(key)
                self._progressions.setdefault(key[:2], []).append(row.number_progression)
            self._symbols[(row.scale_id, row.number_progression)] = row.scale_progression

    @classmethod
    def from_path(cls, path: str | Path) -> "DatasetBackend":
        path = Path(path)
        with open(path, encoding="utf-8") as fp:
            if path.suffix == ".jsonl":
                return cls(dataset_io.parse_jsonl(fp))
            return cls(dataset_io.parse_csv(fp))

    def progressions(self, mode: Mode, length: int) -> list[tuple[str, ...]] | None:
        return self._progressions.get((mode.value, length))

    def scale_progression(
        self, scale_id: str, tokens: tuple[str, ...]
    ) -> tuple[str, ...] | None:
        return self._symbols.get((scale_id, tokens))


def build_base_progression_response(
    scale: Scale,
    progression: NumericProgression,
    backend: DatasetBackend | None = None,
) -> dict[str, Any]:
    """The full record behind one scale + progression selection."""
    base_chords = realize_progression(scale, progression.tokens)
    symbols = None
    if backend is not None:
        symbols = backend.scale_progression(scale.id, progression.token_texts)
    if symbols is None:
        symbols = tuple(chord.symbol for chord in base_chords)

    variation_entries = []
    for alt_scale, alt_progression in alternates(scale, progression).alternates:
        alt_chords = realize_progression(alt_scale, alt_progression.tokens)
        variation_entries.append(
            {
                "scaleId": alt_scale.id,
                "scaleProgression": [chord.symbol for chord in alt_chords],
                "keysInChord": keys_in_chords(alt_chords),
            }
        )

    return {
        "scaleId": scale.id,
        "numericProgression": list(progression.token_texts),
        "scaleProgression": list(symbols),
        "keysInChord": keys_in_chords(base_chords),
        "chordsInScale": [chord.symbol for chord in chords_in_scale(scale)],
        "variations": variation_entries,
    }


class BaseProgressionRequest(BaseModel):
    scale: str
    progression: str | list[str]


class MidiRequest(BaseModel):
    scale: str
    progression: str | list[str]
    tempo: int = PlaybackConfig().tempo_bpm
    octave: int = PlaybackConfig().octave


def create_app(dataset_path: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="chordwalk", docs_url=None, redoc_url=None)
    # the explorer UI is typically served from another origin (e.g. a dev server)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    backend = DatasetBackend.from_path(dataset_path) if dataset_path else None
    scale_ids = [scale.id for scale in enumerate_scales()]

    @app.exception_handler(RequestValidationError)
    async def malformed_request(request: Request, exc: RequestValidationError) -> JSONResponse:
        return JSONResponse(
            status_code=400,
            content={"detail": {"error": "invalid_request", "message": str(exc.errors())}},
        )

    @app.get("/health")
    def health() -> dict[str, str]:
        return {"status": "ok"}

    @app.get("/scales")
    def scales() -> dict[str, list[str]]:
        return {"scales": scale_ids}

    @app.get("/progressions")
    def progressions(
        mode: str,
        length: int,
        page: int = Query(default=1),
        page_size: int = Query(default=DEFAULT_PAGE_SIZE, alias="pageSize"),
    ) -> dict[str, Any]:
        parsed_mode = _parse_mode(mode)
        if not MIN_LENGTH <= length <= MAX_LENGTH:
            raise _bad_request(
                "invalid_length", f"length must be in {MIN_LENGTH}..{MAX_LENGTH}, got {length}"
            )
        if page < 1:
            raise _bad_request("invalid_page", f"page must be >= 1, got {page}")
        if not 1 <= page_size <= MAX_PAGE_SIZE:
            raise _bad_request(
                "invalid_page", f"pageSize must be in 1..{MAX_PAGE_SIZE}, got {page_size}"
            )
        items: list[tuple[str, ...]] | None = None
        if backend is not None:
            items = backend.progressions(parsed_mode, length)
        if items is None:
            items = [p.token_texts for p in _cached_progressions(parsed_mode, length)]
        total = len(items)
        start = (page - 1) * page_size
        window = items[start : start + page_size]
        return {
            "mode": parsed_mode.value,
            "length": length,
            "page": page,
            "pageSize": page_size,
            "totalCount": total,
            "totalPages": -(-total // page_size),
            "items": [list(tokens) for tokens in window],
        }

    @app.post("/base-progression")
    def base_progression(body: BaseProgressionRequest) -> dict[str, Any]:
        scale = _parse_scale(body.scale)
        progression = _parse_body_progression(body.progression, scale.mode)
        return build_base_progression_response(scale, progression, backend)

    @app.post("/midi")
    def midi(body: MidiRequest) -> Response:
        scale = _parse_scale(body.scale)
        progression = _parse_body_progression(body.progression, scale.mode)
        try:
            config = PlaybackConfig(tempo_bpm=body.tempo, octave=body.octave)
        except ValueError as exc:
            field = "invalid_tempo" if "tempo" in str(exc) else "invalid_octave"
            raise _bad_request(field, str(exc))
        chords = realize_progression(scale, progression.tokens)
        try:
            placed = get_music_notes([chord.notes for chord in chords], config)
        except MidiRangeError as exc:
            raise _bad_request("midi_range", str(exc))
        events = to_timed_events(placed, config)
        buffer = io.BytesIO()
        write_smf(events, config, buffer)
        filename = f"{scale.id}-{'-'.join(progression.token_texts)}.mid"
        return Response(
            content=buffer.getvalue(),
            media_type="audio/midi",
            headers={"Content-Disposition": f'attachment; filename="{filename}"'},
        )

    return app


def serve(port: int, dataset_path: str | Path | None = None, host: str = "127.0.0.1") -> None:
    """Run the service until interrupted (uvicorn handles graceful shutdown)."""
    import uvicorn

    uvicorn.run(create_app(dataset_path), host=host, port=port, log_level="info")
