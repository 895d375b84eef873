"""Chord-movement transition tables and exhaustive progression enumeration.

A transition table is a directed graph over degree tokens. Progressions are
every walk of a given length that starts on the tonic and only follows
edges. Two independent routes compute the number of such walks: depth-first
enumeration and powers of the adjacency matrix; tests hold them equal.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Iterable, Mapping

from .errors import MalformedTableError
from .scales import SUBTONIC_MAJOR_TEXT, SUBTONIC_MAJOR_TOKEN, Mode

START_TOKEN = 1


def token_text(token: int) -> str:
    """Display form of a token; 8 renders as "7Maj" everywhere user-visible."""
    return SUBTONIC_MAJOR_TEXT if token == SUBTONIC_MAJOR_TOKEN else str(token)


def parse_token(text: str, mode: Mode) -> int:
    """Parse a display token ("1".."7", or "7Maj" in minor)."""
    stripped = text.strip()
    if stripped.lower() == SUBTONIC_MAJOR_TEXT.lower():
        token = SUBTONIC_MAJOR_TOKEN
    else:
        try:
            token = int(stripped)
        except ValueError:
            raise ValueError(f"bad degree token {text!r}") from None
    if token not in mode.degree_tokens:
        raise ValueError(
            f"token {token_text(token)} is not defined for {mode.value} progressions"
        )
    return token


@dataclass(frozen=True)
class NumericProgression:
    """A scale-agnostic progression: a mode plus a token sequence."""

    mode: Mode
    tokens: tuple[int, ...]

    def __str__(self) -> str:
        return ",".join(token_text(t) for t in self.tokens)

    @property
    def token_texts(self) -> tuple[str, ...]:
        return tuple(token_text(t) for t in self.tokens)


def parse_progression(text: str, mode: Mode) -> NumericProgression:
    """Parse a comma-separated token list like "1,5,6,4" or "1,7Maj,3,4"."""
    parts = [p for p in text.split(",")]
    if not parts or parts == [""]:
        raise ValueError("empty progression")
    return NumericProgression(mode, tuple(parse_token(p, mode) for p in parts))


@dataclass(frozen=True)
class TransitionTable:
    """Ordered successor lists per token, rooted at the tonic.

    Invariants checked on construction: the start token is 1, every token is
    reachable from it, successor lists are non-empty and duplicate-free, and
    every successor is itself a declared token.
    """

    mode: Mode
    edges: Mapping[int, tuple[int, ...]]
    start: int = START_TOKEN

    def __post_init__(self) -> None:
        if self.start != START_TOKEN:
            raise MalformedTableError(f"start token must be {START_TOKEN}, got {self.start}")
        valid = set(self.mode.degree_tokens)
        declared = set(self.edges)
        if not declared:
            raise MalformedTableError("table declares no tokens")
        for token, successors in self.edges.items():
            if token not in valid:
                raise MalformedTableError(f"unknown token {token!r} for {self.mode.value}")
            if not successors:
                raise MalformedTableError(f"token {token_text(token)} has no successors")
            if len(set(successors)) != len(successors):
                raise MalformedTableError(f"duplicate successors for token {token_text(token)}")
            for nxt in successors:
                if nxt not in declared:
                    raise MalformedTableError(
                        f"successor {token_text(nxt)} of {token_text(token)} is not declared"
                    )
        if self.start not in declared:
            raise MalformedTableError(f"start token {START_TOKEN} is not declared")
        unreachable = declared - self._reachable()
        if unreachable:
            names = ", ".join(token_text(t) for t in sorted(unreachable))
            raise MalformedTableError(f"tokens not reachable from the tonic: {names}")

    def _reachable(self) -> set[int]:
        seen = {self.start}
        frontier = [self.start]
        while frontier:
            token = frontier.pop()
            for nxt in self.edges[token]:
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        return seen

    def successors(self, token: int) -> tuple[int, ...]:
        return self.edges[token]


# Default charts, successor lists in the order the movement rules state them.
DEFAULT_MAJOR_TABLE = TransitionTable(
    Mode.MAJOR,
    {
        1: (1, 2, 3, 4, 5, 6, 7),
        2: (7, 5),
        3: (4, 6),
        4: (2, 7, 5, 1),
        5: (6, 1),
        6: (4, 2),
        7: (1,),
    },
)

DEFAULT_MINOR_TABLE = TransitionTable(
    Mode.MINOR,
    {
        1: (1, 2, 3, 4, 5, 6, 7, 8),
        2: (7, 5),
        3: (4, 6),
        4: (2, 7, 5, 1),
        5: (6, 1),
        6: (4, 2),
        7: (1,),
        8: (3,),
    },
)


def default_table(mode: Mode) -> TransitionTable:
    return DEFAULT_MAJOR_TABLE if mode is Mode.MAJOR else DEFAULT_MINOR_TABLE


def enumerate_progressions(table: TransitionTable, length: int) -> list[NumericProgression]:
    """Every token walk of the given length from the tonic, in deterministic order.

    Depth-first, following each successor list in its stored order, so the
    output is stable byte-for-byte across runs. length=1 yields just [1].
    """
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    out: list[NumericProgression] = []
    prefix = [table.start]

    def walk() -> None:
        if len(prefix) == length:
            out.append(NumericProgression(table.mode, tuple(prefix)))
            return
        for nxt in table.successors(prefix[-1]):
            prefix.append(nxt)
            walk()
            prefix.pop()

    walk()
    return out


def count_by_matrix_power(table: TransitionTable, length: int) -> int:
    """Number of length-L walks from the tonic, via adjacency-matrix powers.

    Exact integer arithmetic throughout (Python ints never overflow), so the
    result is usable as an independent oracle for enumerate_progressions.
    """
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    tokens = sorted(table.edges)
    index = {token: i for i, token in enumerate(tokens)}
    n = len(tokens)
    matrix = [[0] * n for _ in range(n)]
    for token, successors in table.edges.items():
        for nxt in successors:
            matrix[index[token]][index[nxt]] = 1

    def matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
        return [
            [sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)
        ]

    power = length - 1
    result = [[int(i == j) for j in range(n)] for i in range(n)]
    base = matrix
    while power:
        if power & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        power >>= 1
    return sum(result[index[table.start]])


def validate(progression: NumericProgression, table: TransitionTable) -> bool:
    """True iff the progression starts on the tonic and only follows edges."""
    tokens = progression.tokens
    if not tokens or tokens[0] != table.start:
        return False
    for current, nxt in zip(tokens, tokens[1:]):
        if nxt not in table.edges.get(current, ()):
            return False
    return True


def explain_invalid(progression: NumericProgression, table: TransitionTable) -> str | None:
    """The first broken movement rule, or None if the progression is valid."""
    tokens = progression.tokens
    if not tokens:
        return "progression is empty"
    if tokens[0] != table.start:
        return f"progressions must start on the tonic (token {token_text(table.start)})"
    for current, nxt in zip(tokens, tokens[1:]):
        if nxt not in table.edges.get(current, ()):
            return (
                f"no allowed movement from {token_text(current)} to {token_text(nxt)}"
            )
    return None


def read_transition_table(path: "str | Path") -> TransitionTable:
    """Load a transition-table document from a JSON file."""
    with open(path, encoding="utf-8") as fp:
        try:
            document = json.load(fp)
        except json.JSONDecodeError as exc:
            raise MalformedTableError(f"{path}: not valid JSON ({exc})") from None
    if not isinstance(document, Mapping):
        raise MalformedTableError(f"{path}: document must be a JSON object")
    return load_transition_table(document)


def load_transition_table(document: Mapping[str, Any]) -> TransitionTable:
    """Build a table from a parsed document.

    Expected shape (tokens as display text, successor lists in order):

        {"mode": "major",
         "start": "1",                      # optional, must be "1"
         "edges": {"1": ["1", "2"], ...}}

    Raises MalformedTableError on schema or invariant violations.
    """
    try:
        mode = Mode(document["mode"])
    except (KeyError, ValueError):
        raise MalformedTableError("document must set \"mode\" to \"major\" or \"minor\"") from None
    edges_doc = document.get("edges")
    if not isinstance(edges_doc, Mapping):
        raise MalformedTableError("document must map \"edges\" to successor lists per token")

    def to_token(text: Any) -> int:
        try:
            return parse_token(str(text), mode)
        except ValueError as exc:
            raise MalformedTableError(str(exc)) from None

    edges: dict[int, tuple[int, ...]] = {}
    for key, successors in edges_doc.items():
        if isinstance(successors, (str, bytes)) or not isinstance(successors, Iterable):
            raise MalformedTableError(f"successors of {key!r} must be a list of tokens")
        edges[to_token(key)] = tuple(to_token(s) for s in successors)
    start = to_token(document.get("start", START_TOKEN))
    return TransitionTable(mode, edges, start)
