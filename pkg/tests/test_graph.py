import itertools
import json
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chordwalk.errors import MalformedTableError
from chordwalk.graph import (
    DEFAULT_MAJOR_TABLE,
    DEFAULT_MINOR_TABLE,
    NumericProgression,
    TransitionTable,
    count_by_matrix_power,
    default_table,
    enumerate_progressions,
    explain_invalid,
    load_transition_table,
    parse_progression,
    parse_token,
    read_transition_table,
    token_text,
    validate,
)
from chordwalk.scales import Mode

TABLE_DIR = Path(__file__).resolve().parent.parent / "data" / "transition_tables"


def test_default_edges_follow_the_movement_rules():
    assert DEFAULT_MAJOR_TABLE.successors(1) == (1, 2, 3, 4, 5, 6, 7)
    assert DEFAULT_MAJOR_TABLE.successors(2) == (7, 5)
    assert DEFAULT_MAJOR_TABLE.successors(3) == (4, 6)
    assert DEFAULT_MAJOR_TABLE.successors(4) == (2, 7, 5, 1)
    assert DEFAULT_MAJOR_TABLE.successors(5) == (6, 1)
    assert DEFAULT_MAJOR_TABLE.successors(6) == (4, 2)
    assert DEFAULT_MAJOR_TABLE.successors(7) == (1,)
    assert DEFAULT_MINOR_TABLE.successors(1) == (1, 2, 3, 4, 5, 6, 7, 8)
    assert DEFAULT_MINOR_TABLE.successors(8) == (3,)


def test_enumerate_length_one_is_just_the_tonic():
    progressions = enumerate_progressions(DEFAULT_MAJOR_TABLE, 1)
    assert [p.tokens for p in progressions] == [(1,)]
    assert count_by_matrix_power(DEFAULT_MAJOR_TABLE, 1) == 1


def test_enumerate_length_two_major():
    progressions = enumerate_progressions(DEFAULT_MAJOR_TABLE, 2)
    assert [str(p) for p in progressions] == [
        "1,1", "1,2", "1,3", "1,4", "1,5", "1,6", "1,7",
    ]


def test_enumerate_length_two_minor_ends_with_subtonic():
    progressions = enumerate_progressions(DEFAULT_MINOR_TABLE, 2)
    assert len(progressions) == 8
    assert str(progressions[-1]) == "1,7Maj"


@pytest.mark.parametrize(
    "table,length,expected",
    [
        (DEFAULT_MAJOR_TABLE, 2, 7),
        (DEFAULT_MINOR_TABLE, 2, 8),
        (DEFAULT_MAJOR_TABLE, 3, 20),
        (DEFAULT_MAJOR_TABLE, 4, 63),
        (DEFAULT_MINOR_TABLE, 4, 70),
    ],
)
def test_anchored_counts(table, length, expected):
    assert count_by_matrix_power(table, length) == expected
    assert len(enumerate_progressions(table, length)) == expected


@pytest.mark.parametrize("table", [DEFAULT_MAJOR_TABLE, DEFAULT_MINOR_TABLE], ids=["major", "minor"])
def test_oracle_equivalence(table):
    for length in range(1, 9):
        assert len(enumerate_progressions(table, length)) == count_by_matrix_power(table, length)


@pytest.mark.parametrize("table", [DEFAULT_MAJOR_TABLE, DEFAULT_MINOR_TABLE], ids=["major", "minor"])
def test_counts_grow_monotonically(table):
    counts = [count_by_matrix_power(table, length) for length in range(1, 9)]
    assert counts == sorted(counts)


@pytest.mark.parametrize("table", [DEFAULT_MAJOR_TABLE, DEFAULT_MINOR_TABLE], ids=["major", "minor"])
@pytest.mark.parametrize("length", [2, 3, 4])
def test_enumeration_sound_complete_and_unique(table, length):
    enumerated = enumerate_progressions(table, length)
    assert all(validate(p, table) for p in enumerated)
    token_lists = [p.tokens for p in enumerated]
    assert len(set(token_lists)) == len(token_lists)
    # third, naive route: filter the full cartesian product
    tokens = sorted(table.edges)
    brute = [
        (1, *rest)
        for rest in itertools.product(tokens, repeat=length - 1)
        if validate(NumericProgression(table.mode, (1, *rest)), table)
    ]
    assert sorted(token_lists) == sorted(brute)


def test_enumeration_is_deterministic():
    first = "\n".join(str(p) for p in enumerate_progressions(DEFAULT_MINOR_TABLE, 5))
    second = "\n".join(str(p) for p in enumerate_progressions(DEFAULT_MINOR_TABLE, 5))
    assert first == second


def test_enumerate_rejects_zero_length():
    with pytest.raises(ValueError):
        enumerate_progressions(DEFAULT_MAJOR_TABLE, 0)


def test_validate_reference_cases():
    major = DEFAULT_MAJOR_TABLE
    assert validate(parse_progression("1,4,2,5", Mode.MAJOR), major)
    assert not validate(parse_progression("1,7,5,1", Mode.MAJOR), major)
    assert not validate(parse_progression("2,5,1,1", Mode.MAJOR), major)


def test_explain_invalid_names_the_rule():
    major = DEFAULT_MAJOR_TABLE
    assert explain_invalid(parse_progression("1,4,2,5", Mode.MAJOR), major) is None
    assert "7 to 5" in explain_invalid(parse_progression("1,7,5,1", Mode.MAJOR), major)
    assert "tonic" in explain_invalid(parse_progression("2,5,1,1", Mode.MAJOR), major)


def test_token_text_and_parse():
    assert token_text(8) == "7Maj"
    assert token_text(3) == "3"
    assert parse_token("7Maj", Mode.MINOR) == 8
    assert parse_token("7maj", Mode.MINOR) == 8
    with pytest.raises(ValueError):
        parse_token("7Maj", Mode.MAJOR)
    with pytest.raises(ValueError):
        parse_token("9", Mode.MINOR)
    with pytest.raises(ValueError):
        parse_token("x", Mode.MAJOR)


def test_parse_progression():
    progression = parse_progression("1,7Maj,3,4", Mode.MINOR)
    assert progression.tokens == (1, 8, 3, 4)
    assert str(progression) == "1,7Maj,3,4"
    with pytest.raises(ValueError):
        parse_progression("", Mode.MAJOR)


def _default_major_document():
    return {
        "mode": "major",
        "start": "1",
        "edges": {
            "1": ["1", "2", "3", "4", "5", "6", "7"],
            "2": ["7", "5"],
            "3": ["4", "6"],
            "4": ["2", "7", "5", "1"],
            "5": ["6", "1"],
            "6": ["4", "2"],
            "7": ["1"],
        },
    }


def test_load_default_major_document_matches_builtin():
    table = load_transition_table(_default_major_document())
    assert table.edges == dict(DEFAULT_MAJOR_TABLE.edges)
    assert table.mode is Mode.MAJOR


def test_load_rejects_missing_token_edges():
    document = _default_major_document()
    del document["edges"]["7"]
    with pytest.raises(MalformedTableError):
        load_transition_table(document)


def test_load_rejects_bad_start():
    document = _default_major_document()
    document["start"] = "2"
    with pytest.raises(MalformedTableError):
        load_transition_table(document)


def test_load_rejects_unknown_token():
    document = _default_major_document()
    document["edges"]["8"] = ["1"]
    with pytest.raises(MalformedTableError):
        load_transition_table(document)


def test_load_rejects_empty_successors():
    document = _default_major_document()
    document["edges"]["7"] = []
    with pytest.raises(MalformedTableError):
        load_transition_table(document)


def test_load_rejects_unreachable_token():
    document = _default_major_document()
    document["edges"]["1"] = ["1", "2", "4", "5", "6", "7"]  # 3 still declared, unreachable
    with pytest.raises(MalformedTableError, match="reachable"):
        load_transition_table(document)


def test_load_rejects_bad_mode():
    with pytest.raises(MalformedTableError):
        load_transition_table({"mode": "dorian", "edges": {"1": ["1"]}})


def test_custom_edge_changes_count():
    document = _default_major_document()
    document["edges"]["7"] = ["1", "3"]
    table = load_transition_table(document)
    # out-degree of 7 rises from 1 to 2, so the length-3 count gains one walk
    assert count_by_matrix_power(table, 3) == 21
    assert len(enumerate_progressions(table, 3)) == 21


def test_read_transition_table_files(tmp_path):
    major = read_transition_table(TABLE_DIR / "major-no-tonic-repeat.json")
    minor = read_transition_table(TABLE_DIR / "minor-no-tonic-repeat.json")
    assert major.successors(1) == (2, 3, 4, 5, 6, 7)
    assert count_by_matrix_power(major, 4) == len(enumerate_progressions(major, 4)) == 40
    assert count_by_matrix_power(minor, 4) == len(enumerate_progressions(minor, 4)) == 45
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(MalformedTableError):
        read_transition_table(bad)


@st.composite
def transition_tables(draw):
    """Random valid tables: a spanning tree from the tonic plus extra edges."""
    mode = draw(st.sampled_from([Mode.MAJOR, Mode.MINOR]))
    tokens = list(mode.degree_tokens)
    count = draw(st.integers(min_value=1, max_value=len(tokens)))
    chosen = tokens[:count]
    edges = {token: set() for token in chosen}
    for i, token in enumerate(chosen[1:], start=1):
        parent = draw(st.sampled_from(chosen[:i]))
        edges[parent].add(token)
    for token in chosen:
        extra = draw(st.lists(st.sampled_from(chosen), max_size=3))
        edges[token].update(extra)
        if not edges[token]:
            edges[token].add(draw(st.sampled_from(chosen)))
    return TransitionTable(mode, {t: tuple(sorted(s)) for t, s in edges.items()})


@given(transition_tables(), st.integers(min_value=1, max_value=5))
@settings(max_examples=60, deadline=None)
def test_random_tables_hold_oracle_equivalence(table, length):
    progressions = enumerate_progressions(table, length)
    assert len(progressions) == count_by_matrix_power(table, length)
    assert all(validate(p, table) for p in progressions)
    assert len({p.tokens for p in progressions}) == len(progressions)


def test_table_document_round_trip_through_json():
    document = json.loads(json.dumps(_default_major_document()))
    assert load_transition_table(document).edges == dict(DEFAULT_MAJOR_TABLE.edges)
