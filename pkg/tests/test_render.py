import json
from pathlib import Path

import pytest

from cospanlin.freeterm import parse
from cospanlin.render import render

GOLDEN = Path(__file__).parent / "golden"
CASES = json.loads((GOLDEN / "cases.json").read_text())


@pytest.mark.parametrize("name", sorted(CASES))
def test_matches_golden_file(name):
    expected = (GOLDEN / f"{name}.txt").read_text()
    assert render(parse(CASES[name])) + "\n" == expected


@pytest.mark.parametrize("name", sorted(CASES))
def test_renders_are_pure_ascii(name):
    assert render(parse(CASES[name])).isascii()


def test_merge_joins_two_wires_into_one():
    rows = render(parse("m")).splitlines()
    assert rows[0] == "--+--" and rows[2].strip() == "-"
    assert "/" in rows[1]


def test_identity_is_a_straight_line():
    assert render(parse("id:1")) == "-----"
    assert render(parse("id:2")) == "-----\n\n-----"


def test_bubble_closes_up():
    rows = render(parse("d ; m")).splitlines()
    assert rows[0].count("+") == 2
    assert "\\" in rows[1] and "/" in rows[1]


def test_empty_picture():
    assert render(parse("id:0")) == ""


def test_width_grows_one_block_per_slice():
    assert len(render(parse("m ; d ; m")).splitlines()[0]) == 15


def test_rejects_two_cells():
    with pytest.raises(TypeError):
        render(parse("eta"))
