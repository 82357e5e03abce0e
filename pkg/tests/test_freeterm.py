import random

import pytest
from hypothesis import given, settings, strategies as st

from cospanlin import cospan as cs
from cospanlin import ordinals as o
from cospanlin.errors import BoundaryError, ParseError
from cospanlin.freeterm import (Eta, Gen, HComp, Id, Iota, Seq, Signature, Slice, SliceForm,
                                Tensor, boundary, eval_one, eval_two, parse, print_term,
                                signature_of, term_from_json, term_to_json, to_slices,
                                two_boundary)
from termgen import random_term, random_terms


def compact(text):
    return eval_one(parse(text)).to_compact()


def test_generator_boundaries():
    assert [boundary(Gen(g)) for g in "mdsr"] == [(2, 1), (1, 2), (0, 1), (1, 0)]


def test_precedence_of_tensor_over_sequence():
    assert parse("d + id:1 ; id:1 + m") == parse("(d + id:1) ; (id:1 + m)")
    assert parse("m ; d") == Seq(Gen("m"), Gen("d"))
    assert parse("id:1 + d") == Tensor(Id(1), Gen("d"))


def test_eval_examples():
    assert compact("d ; m") == {"src": 1, "tgt": 1, "apex": 1, "left": [0], "right": [0]}
    assert compact("id:0") == {"src": 0, "tgt": 0, "apex": 0, "left": [], "right": []}
    frob = compact("(d + id:1) ; (id:1 + m)")
    assert (frob["left"], frob["apex"], frob["right"]) == ([0, 0], 1, [0, 0])
    assert compact("(id:1 + d) ; (m + id:1)") == frob


def test_unit_signature_evaluates_over_opinj():
    f = eval_one(parse("s ; r"))
    assert f.base is cs.OPINJ and f == cs.identity_cospan(cs.OPINJ, 0)
    g = eval_one(parse("r ; s"))
    assert (g.source, g.target, g.apex) == (1, 1, 0)
    assert eval_one(parse("id:2"), Signature.UNIT).base is cs.OPINJ


def test_boundary_errors_carry_a_path():
    with pytest.raises(BoundaryError) as info:
        parse("m ; m")
    assert "2->1 with 2->1" in str(info.value)
    with pytest.raises(BoundaryError) as info:
        boundary(Tensor(Id(1), Seq(Gen("m"), Gen("m"))))
    assert info.value.path == (1,)


def test_mixed_signatures_are_rejected():
    with pytest.raises(BoundaryError):
        eval_one(parse("m + s"))
    with pytest.raises(BoundaryError):
        signature_of(parse("d + r"))


@pytest.mark.parametrize("text, position", [
    ("m ;", 2), ("(m", 2), ("m ; x", 4), ("id:", 0), ("", 0), ("m m", 2), ("iota(m", 6),
])
def test_parse_errors_report_a_position(text, position):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.position == position


def test_two_cell_terms():
    eta = eval_two(parse("eta"))
    assert eta == cs.overline(cs.SURJ, o.NABLA)
    assert two_boundary(parse("eta")) == (Id(2), Seq(Gen("m"), Gen("d")))
    # triangle laws
    assert eval_two(parse("eta * iota(m)")) == eval_two(parse("iota(m)"))
    assert eval_two(parse("iota(d) * eta")) == eval_two(parse("iota(d)"))
    assert eval_two(parse("eta * iota(r)")) == eval_two(parse("iota(r)"))
    assert eval_two(parse("iota(s) * eta")) == eval_two(parse("iota(s)"))
    assert eval_two(parse("eta + iota(id:1)")).src == cs.identity_cospan(cs.SURJ, 3)


def test_vertical_composite_is_checked_semantically():
    # the target m ; d of eta is the same cospan as the Frobenius composite
    t = parse("eta ; iota((d + id:1) ; (id:1 + m))")
    assert eval_two(t).tgt == eval_one(parse("m ; d"))
    with pytest.raises(BoundaryError):
        parse("eta ; iota(id:2)")
    with pytest.raises(BoundaryError):
        parse("eta * iota(d)")


def test_unit_eta_signature_is_inferred():
    t = parse("eta * iota(r)")
    assert isinstance(t, HComp) and t.first == Eta(Signature.UNIT)
    assert eval_two(parse("eta")).base is cs.SURJ


def test_slices():
    form = to_slices(parse("d + id:1 ; id:1 + m"))
    assert form.slices == (Slice(0, "d", 1), Slice(1, "m", 0))
    assert str(form) == "d + id:1 ; id:1 + m"
    assert str(to_slices(parse("id:3"))) == "id:3"
    # the left factor of a tensor is sequenced first
    assert to_slices(parse("m + d")).slices == (Slice(0, "m", 1), Slice(1, "d", 0))
    with pytest.raises(BoundaryError):
        SliceForm(2, 1, (Slice(0, "d", 0),))


def test_printing_is_canonical():
    for text in ["m ; d", "d + id:1 ; id:1 + m", "m + (m ; d)", "(m ; d) + m",
                 "m ; (d ; m)", "eta * iota(m)", "(eta ; iota(m ; d)) + iota(id:1)",
                 "iota(d) * (eta * iota(m))"]:
        t = parse(text)
        assert parse(print_term(t)) == t
    assert print_term(parse("(m ; d) ; m")) == "m ; d ; m"
    assert print_term(parse("m ; (d ; m)")) == "m ; (d ; m)"


def test_json_round_trip():
    for text in ["m ; d", "s ; r", "eta * iota(r)", "eta + iota(id:1)", "id:0"]:
        t = parse(text)
        assert term_from_json(term_to_json(t)) == t


def test_print_parse_round_trip_corpus():
    corpus = random_terms(seed=7, count=200, max_generators=8)
    for t in corpus:
        again = parse(print_term(t))
        assert again == t
        assert eval_one(again) == eval_one(t)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2 ** 32), st.integers(1, 8), st.integers(1, 4))
def test_slices_preserve_evaluation(seed, k, domain):
    t = random_term(random.Random(seed), k, domain)
    assert eval_one(to_slices(t).to_term()) == eval_one(t)
    assert eval_one(t).source == domain
