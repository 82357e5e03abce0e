import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from cospanlin import cospan as cs
from cospanlin import ordinals as o
from cospanlin.errors import BoundaryError
from cospanlin.freeterm import Slice, SliceForm, eval_one, parse, to_slices
from cospanlin.rewrite import (Rule, canonical_phases, classify, equal_terms,
                               inversion_measure, is_normal, normalize, normalize_slices,
                               pushout_word, read_off, rewrite_step, slices_for_cospan)
from termgen import random_term, slice_words


def test_pop():
    normal, trace = normalize(parse("d ; m"))
    assert normal.slices == () and str(normal) == "id:1"
    assert trace.rules == ["Pop@0"]


def test_already_normal():
    normal, trace = normalize(parse("m ; d"))
    assert normal == to_slices(parse("m ; d"))
    assert trace.rules == []


def test_frobenius_both_ways():
    normal, trace = normalize(parse("(d + id:1) ; (id:1 + m)"))
    assert [s.gen for s in normal.slices] == ["m", "d"]
    assert trace.rules == ["FrobLeft@0"]
    normal2, trace2 = normalize(parse("(id:1 + d) ; (m + id:1)"))
    assert normal2 == normal
    assert trace2.rules == ["FrobRight@0"]


def test_slide_keeps_disjoint_strands_apart():
    rule, out = classify(Slice(0, "d", 2), Slice(2, "m", 0))
    assert rule is Rule.SLIDE
    assert out == [Slice(1, "m", 0), Slice(0, "d", 1)]
    rule, out = classify(Slice(2, "d", 0), Slice(0, "m", 1))
    assert rule is Rule.SLIDE
    assert out == [Slice(0, "m", 1), Slice(1, "d", 0)]


def test_every_local_rule_preserves_evaluation():
    for w in range(1, 6):
        for a in range(w):
            split = Slice(a, "d", w - a - 1)
            for c in range(w):
                merge = Slice(c, "m", w - c - 1)
                _, out = classify(split, merge)
                before = SliceForm(w, w, (split, merge))
                after = SliceForm(w, w, tuple(out))
                assert eval_one(before.to_term()) == eval_one(after.to_term())


def test_trace_replays_and_serializes():
    t = parse("d + d ; id:1 + m + id:1 ; m + id:1 ; d + id:1 ; id:1 + m")
    normal, trace = normalize(t)
    assert trace.replay() == normal
    data = trace.to_json()
    assert all({"rule", "at", "before", "after"} <= set(step) for step in data)
    assert len([s for s in trace.steps if s.rule is not Rule.ASSOC]) <= inversion_measure(to_slices(t))


def test_replay_detects_tampering():
    normal, trace = normalize(parse("(d + id:1) ; (id:1 + m)"))
    step = trace.steps[0]
    trace.steps[0] = type(step)(Rule.POP, step.position, step.before, step.after)
    with pytest.raises(ValueError):
        trace.replay()


def test_unit_terms_are_not_rewritten():
    with pytest.raises(BoundaryError):
        normalize(parse("s ; r"))


def test_inversion_measure():
    assert inversion_measure(to_slices(parse("d ; m"))) == 1
    assert inversion_measure(to_slices(parse("m ; d"))) == 0
    assert inversion_measure(to_slices(parse("d ; d + id:1 ; m + id:1 ; m"))) == 4
    assert is_normal(to_slices(parse("m + id:1 ; m ; d")))


def test_normal_forms_are_canonical_words():
    for w in slice_words(2, 5):
        normal, _ = normalize_slices(w)
        assert is_normal(normal)
        assert canonical_phases(normal) == normal
        assert normal == slices_for_cospan(read_off(normal).left, read_off(normal).right)


def _rightmost_normalize(s):
    """An independent strategy: always rewrite the rightmost redex."""
    slices = list(s.slices)
    while True:
        spots = [i for i in range(len(slices) - 1)
                 if slices[i].gen == "d" and slices[i + 1].gen == "m"]
        if not spots:
            break
        i = spots[-1]
        _, out = classify(slices[i], slices[i + 1])
        slices[i:i + 2] = out
    return canonical_phases(SliceForm(s.domain, s.codomain, tuple(slices)))


def test_confluence_across_strategies():
    for d in range(3):
        for w in slice_words(d, 5):
            assert _rightmost_normalize(w) == normalize_slices(w)[0]


def test_equal_terms():
    assert equal_terms(parse("d ; m"), parse("id:1"))
    assert equal_terms(parse("(d + id:1) ; (id:1 + m)"), parse("(id:1 + d) ; (m + id:1)"))
    assert not equal_terms(parse("m ; d"), parse("id:2"))
    with pytest.raises(BoundaryError):
        equal_terms(parse("m"), parse("id:1"))


def test_pushout_word_reads_off_the_pushout():
    for m in range(6):
        maps = o.surjections_from(m)
        for f, g in itertools.product(maps, repeat=2):
            normal, _ = normalize_slices(pushout_word(f, g))
            p0, p1 = o.pushout_surjections(f, g)
            assert read_off(normal) == cs.make_cospan(cs.SURJ, p0, p1)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2 ** 32), st.integers(0, 10), st.integers(1, 4))
def test_normalize_is_sound_and_bounded(seed, k, domain):
    t = random_term(random.Random(seed), k, domain)
    normal, trace = normalize(t)
    assert eval_one(normal.to_term()) == eval_one(t)
    assert read_off(normal) == eval_one(t)
    rewrites = [s for s in trace.steps if s.rule is not Rule.ASSOC]
    assert len(rewrites) <= inversion_measure(to_slices(t))
