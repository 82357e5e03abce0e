"""Normalization of merge/split words by moving splits past merges.

A word is a :class:`~cospanlin.freeterm.SliceForm` over ``m`` and ``d``.
Whenever a split slice is immediately followed by a merge slice, exactly
one of four situations occurs:

* the merge joins the two strands the split produced: pop the bubble;
* the merge joins the split's right output with the strand to its right,
  or the strand to its left with the split's left output: Frobenius;
* the two touch disjoint strands: slide the merge in front.

Each step removes at least one (split, later merge) pair, so rewriting
stops after at most :func:`inversion_measure` steps with every merge ahead
of every split.  The two phases are then re-bracketed canonically, which
makes the normal form a complete invariant: two words have the same
normal form exactly when they evaluate to the same cospan.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Optional

from . import cospan as cs
from . import ordinals
from .errors import BoundaryError
from .freeterm import (OneCellTerm, Signature, Slice, SliceForm, boundary, eval_one,
                       signature_of, to_slices)


class Rule(Enum):
    POP = "Pop"
    FROB_LEFT = "FrobLeft"
    FROB_RIGHT = "FrobRight"
    SLIDE = "Slide"
    #: canonical re-bracketing of the merge and split phases
    ASSOC = "Assoc"


@dataclass(frozen=True)
class RewriteStep:
    rule: Rule
    position: int
    before: SliceForm
    after: SliceForm

    def to_json(self) -> dict:
        return {"rule": self.rule.value, "at": self.position,
                "before": [s.to_json() for s in self.before.slices],
                "after": [s.to_json() for s in self.after.slices]}


@dataclass
class RewriteTrace:
    initial: SliceForm
    steps: list[RewriteStep] = field(default_factory=list)

    def __len__(self):
        return len(self.steps)

    @property
    def rules(self) -> list[str]:
        return [f"{s.rule.value}@{s.position}" for s in self.steps]

    def replay(self) -> SliceForm:
        """Re-apply every step, checking each one is what the rules produce."""
        current = self.initial
        for step in self.steps:
            if step.before != current:
                raise ValueError(f"trace broken before {step.rule.value}@{step.position}")
            if step.rule is Rule.ASSOC:
                expected = canonical_phases(current)
            else:
                found = rewrite_step(current)
                if found is None or found[1:] != (step.rule, step.position):
                    raise ValueError(f"{step.rule.value}@{step.position} does not apply")
                expected = found[0]
            if expected != step.after:
                raise ValueError(f"{step.rule.value}@{step.position} gives a different word")
            current = step.after
        return current

    def to_json(self) -> list[dict]:
        return [step.to_json() for step in self.steps]


def _check_semialgebra(s: SliceForm):
    for sl in s.slices:
        if sl.gen not in ("m", "d"):
            raise BoundaryError(f"slice {sl!r} is not in the semialgebra signature")


def inversion_measure(s: SliceForm) -> int:
    """Number of (split, later merge) pairs."""
    _check_semialgebra(s)
    splits = count = 0
    for sl in s.slices:
        if sl.gen == "d":
            splits += 1
        else:
            count += splits
    return count


def is_normal(s: SliceForm) -> bool:
    return inversion_measure(s) == 0


def classify(split: Slice, merge: Slice) -> tuple[Rule, list[Slice]]:
    """Rule and replacement slices for a split immediately followed by a merge."""
    a, c = split.left_pad, merge.left_pad
    w = split.domain
    if c == a:
        return Rule.POP, []
    if c == a + 1:
        return Rule.FROB_LEFT, [Slice(a, "m", w - a - 2), Slice(a, "d", w - a - 2)]
    if c == a - 1:
        return Rule.FROB_RIGHT, [Slice(a - 1, "m", w - a - 1), Slice(a - 1, "d", w - a - 1)]
    if c <= a - 2:
        return Rule.SLIDE, [Slice(c, "m", w - c - 2), Slice(a - 1, "d", w - a - 1)]
    return Rule.SLIDE, [Slice(c - 1, "m", w - c - 1), Slice(a, "d", w - a - 2)]


def rewrite_step(s: SliceForm) -> Optional[tuple[SliceForm, Rule, int]]:
    """Rewrite the leftmost adjacent split/merge pair; ``None`` when normal."""
    _check_semialgebra(s)
    slices = s.slices
    for i in range(len(slices) - 1):
        if slices[i].gen == "d" and slices[i + 1].gen == "m":
            rule, replacement = classify(slices[i], slices[i + 1])
            new = slices[:i] + tuple(replacement) + slices[i + 2:]
            return SliceForm(s.domain, s.codomain, new), rule, i
    return None


def phases(s: SliceForm) -> tuple[ordinals.MonotoneMap, ordinals.MonotoneMap]:
    """The legs ``(left, right)`` read off a word with all merges first."""
    if not is_normal(s):
        raise ValueError("word still has a split before a merge")
    merges = [sl for sl in s.slices if sl.gen == "m"]
    splits = [sl for sl in s.slices if sl.gen == "d"]
    left = ordinals.compose_all((_merge_map(sl) for sl in merges), s.domain)
    right = ordinals.compose_all((_merge_map(sl) for sl in reversed(splits)), s.codomain)
    return left, right


@lru_cache(maxsize=4096)
def _merge_map(sl: Slice) -> ordinals.MonotoneMap:
    return ordinals.GeneratorLayer(sl.left_pad, sl.right_pad).to_map()


def slices_for_cospan(left: ordinals.MonotoneMap, right: ordinals.MonotoneMap) -> SliceForm:
    """Canonical word for the cospan ``(left, apex, right)``."""
    merges = [Slice(l.left_pad, "m", l.right_pad) for l in ordinals.factorize_surjection(left)]
    splits = [Slice(l.left_pad, "d", l.right_pad)
              for l in reversed(ordinals.factorize_surjection(right))]
    return SliceForm(left.domain, right.domain, tuple(merges + splits))


def canonical_phases(s: SliceForm) -> SliceForm:
    return slices_for_cospan(*phases(s))


def normalize_slices(s: SliceForm) -> tuple[SliceForm, RewriteTrace]:
    trace = RewriteTrace(s)
    bound = inversion_measure(s)
    current = s
    while (found := rewrite_step(current)) is not None:
        new, rule, i = found
        trace.steps.append(RewriteStep(rule, i, current, new))
        current = new
        if len(trace) > bound:
            raise RuntimeError("rewriting exceeded its termination measure")
    canonical = canonical_phases(current)
    if canonical != current:
        trace.steps.append(RewriteStep(Rule.ASSOC, 0, current, canonical))
    return canonical, trace


def normalize(t: OneCellTerm) -> tuple[SliceForm, RewriteTrace]:
    if signature_of(t) is not Signature.SEMIALGEBRA:
        raise BoundaryError("only semialgebra terms are rewritten")
    return normalize_slices(to_slices(t))


def read_off(s: SliceForm) -> cs.Cospan:
    """The cospan named by a normal word."""
    left, right = phases(s)
    return cs.make_cospan(cs.SURJ, left, right)


def equal_terms(a: OneCellTerm, b: OneCellTerm) -> bool:
    """Decide equality twice, by evaluation and by normal forms.

    Raises ``RuntimeError`` if the two routes disagree.
    """
    if boundary(a) != boundary(b):
        raise BoundaryError(f"terms have boundaries {boundary(a)} and {boundary(b)}")
    by_eval = eval_one(a, Signature.SEMIALGEBRA) == eval_one(b, Signature.SEMIALGEBRA)
    by_rewrite = normalize(a)[0] == normalize(b)[0]
    if by_eval != by_rewrite:
        raise RuntimeError(f"evaluation says {by_eval}, normal forms say {by_rewrite}")
    return by_eval


def pushout_word(f: ordinals.MonotoneMap, g: ordinals.MonotoneMap) -> SliceForm:
    """The word ``z(f) ; y(g)``: splits undoing ``f``, then merges doing ``g``."""
    splits = [Slice(l.left_pad, "d", l.right_pad)
              for l in reversed(ordinals.factorize_surjection(f))]
    merges = [Slice(l.left_pad, "m", l.right_pad) for l in ordinals.factorize_surjection(g)]
    return SliceForm(f.codomain, g.codomain, tuple(splits + merges))
