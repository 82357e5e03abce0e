"""Strict monoidal 2-categories that can host a Como-algebra or Como-unit.

Every law check and the induced-functor construction talk to an instance
only through :class:`InstanceInterface`.  Three families ship here:

* :class:`CospanInstance` wraps ``Cospan(SURJ)`` or ``Cospan(OPINJ)``;
* :class:`TerminalInstance` has one cell in every dimension;
* :class:`SyntacticInstance` has words in ``m``/``d`` as 1-cells, taken
  modulo agreement under a list of interpretations, and codiscrete
  2-cells (exactly one between any parallel pair).  Choosing the
  interpretations chooses which equations hold, which is how the
  law-violating instances used by mutation tests are built.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from .. import cospan as cs
from ..errors import BoundaryError
from ..freeterm import Slice, SliceForm, eval_one


class InstanceInterface:
    """Abstract strict monoidal 2-category.

    Composition is diagrammatic throughout: ``compose(f, g)`` is "f then g"
    and ``hcomp(a, b)`` puts ``a`` first.  Cells of every dimension must
    support ``==`` and ``hash``; equality is the instance's equality.
    """

    name: str = "abstract"

    # objects
    def unit(self) -> Any:
        raise NotImplementedError

    def tensor_obj(self, x, y) -> Any:
        raise NotImplementedError

    def power(self, x, n: int) -> Any:
        out = self.unit()
        for _ in range(n):
            out = self.tensor_obj(out, x)
        return out

    # 1-cells
    def identity(self, x) -> Any:
        raise NotImplementedError

    def dom(self, f) -> Any:
        raise NotImplementedError

    def cod(self, f) -> Any:
        raise NotImplementedError

    def compose(self, f, g) -> Any:
        raise NotImplementedError

    def tensor(self, f, g) -> Any:
        raise NotImplementedError

    def compose_all(self, cells: Sequence, start) -> Any:
        out = self.identity(start)
        for c in cells:
            out = self.compose(out, c)
        return out

    # 2-cells
    def iota(self, f) -> Any:
        raise NotImplementedError

    def cell_src(self, a) -> Any:
        raise NotImplementedError

    def cell_tgt(self, a) -> Any:
        raise NotImplementedError

    def vcomp(self, a, b) -> Any:
        raise NotImplementedError

    def hcomp(self, a, b) -> Any:
        raise NotImplementedError

    def tensor2(self, a, b) -> Any:
        raise NotImplementedError

    def is_identity_cell(self, a) -> bool:
        return a == self.iota(self.cell_src(a))

    # witnesses
    def show(self, c) -> Any:
        """JSON-friendly rendering of a cell of any dimension."""
        return repr(c)

    def __repr__(self):
        return f"<instance {self.name}>"


# -- cospans ---------------------------------------------------------------

class CospanInstance(InstanceInterface):
    """``Cospan(base)`` with objects the naturals."""

    def __init__(self, base: cs.BaseCategory):
        self.base = base
        self.name = f"cospan-{'slin' if base is cs.SURJ else 'opinj'}"

    def unit(self):
        return 0

    def tensor_obj(self, x, y):
        return x + y

    def power(self, x, n):
        return x * n

    def identity(self, x):
        return cs.identity_cospan(self.base, x)

    def dom(self, f):
        return f.source

    def cod(self, f):
        return f.target

    def compose(self, f, g):
        return cs.compose_cospans(f, g)

    def tensor(self, f, g):
        return cs.tensor_cospans(f, g)

    def iota(self, f):
        return cs.identity_cell(f)

    def cell_src(self, a):
        return a.src

    def cell_tgt(self, a):
        return a.tgt

    def vcomp(self, a, b):
        return cs.vcomp(a, b)

    def hcomp(self, a, b):
        return cs.hcomp(a, b)

    def tensor2(self, a, b):
        return cs.tensor_two_cells(a, b)

    def show(self, c):
        if isinstance(c, cs.Cospan):
            return c.to_compact()
        if isinstance(c, cs.TwoCell):
            return {"src": c.src.to_compact(), "tgt": c.tgt.to_compact(),
                    "alpha": list(c.apex_map.images)}
        return c


# -- terminal --------------------------------------------------------------

class TerminalInstance(InstanceInterface):
    """One object, one 1-cell, one 2-cell."""

    name = "terminal"
    POINT = "*"

    def unit(self):
        return self.POINT

    def tensor_obj(self, x, y):
        return self.POINT

    def identity(self, x):
        return self.POINT

    def dom(self, f):
        return self.POINT

    def cod(self, f):
        return self.POINT

    def compose(self, f, g):
        return self.POINT

    def tensor(self, f, g):
        return self.POINT

    def iota(self, f):
        return self.POINT

    def cell_src(self, a):
        return self.POINT

    def cell_tgt(self, a):
        return self.POINT

    def vcomp(self, a, b):
        return self.POINT

    def hcomp(self, a, b):
        return self.POINT

    def tensor2(self, a, b):
        return self.POINT

    def show(self, c):
        return c


# -- syntactic -------------------------------------------------------------

@dataclass(frozen=True)
class SetModel:
    """A bi-semigroup on ``{0..size-1}`` in (Set, x): tables for ``m`` and ``d``."""

    name: str
    size: int
    nabla: Callable[[int, int], int]
    delta: Callable[[int], tuple[int, int]]

    def run(self, word: SliceForm) -> tuple:
        """The function ``X^dom -> X^cod`` as its graph, in input order."""
        out = []
        for xs in itertools.product(range(self.size), repeat=word.domain):
            xs = list(xs)
            for sl in word.slices:
                a = sl.left_pad
                if sl.gen == "m":
                    xs[a:a + 2] = [self.nabla(xs[a], xs[a + 1])]
                else:
                    xs[a:a + 1] = list(self.delta(xs[a]))
            out.append(tuple(xs))
        return tuple(out)


#: ``m(x, y) = x``, ``d`` diagonal: separable, left Frobenius only
LEFT_ZERO = SetModel("left-zero", 2, lambda x, y: x, lambda x: (x, x))
#: ``m(x, y) = y``, ``d`` diagonal: separable, right Frobenius only
RIGHT_ZERO = SetModel("right-zero", 2, lambda x, y: y, lambda x: (x, x))
#: ``m`` is AND, ``d`` constantly ``(0, 0)``: Frobenius on both sides, not
#: separable, and ``m ; d ; m != m``
AND_ZERO = SetModel("and-zero", 2, lambda x, y: x & y, lambda x: (0, 0))


def _cospan_reading(word: SliceForm) -> cs.Cospan:
    return eval_one(word.to_term())


@dataclass(frozen=True)
class Word:
    """A 1-cell of a syntactic instance: a representative word and its class key."""

    word: SliceForm = field(compare=False)
    key: tuple

    def __repr__(self):
        return f"Word({self.word})"


@dataclass(frozen=True)
class CodiscreteCell:
    src: Word
    tgt: Word

    def __repr__(self):
        return f"Cell({self.src.word} => {self.tgt.word})"


class SyntacticInstance(InstanceInterface):
    """Words in ``m`` and ``d`` modulo the joint kernel of some interpretations.

    The cospan reading is always one of the interpretations, so anything
    this instance identifies also holds in ``Cospan(SURJ)``.  Adding Set
    models identifies fewer words and lets chosen laws fail.  With no
    extra model the instance is free on a separable Frobenius semialgebra
    (the cospan reading is faithful on words).
    """

    def __init__(self, name: str, models: Sequence[SetModel] = ()):
        self.name = name
        self.models = tuple(models)

    def word(self, slices: SliceForm) -> Word:
        key = (slices.domain, slices.codomain, _cospan_reading(slices),
               tuple(m.run(slices) for m in self.models))
        return Word(slices, key)

    def generator(self, name: str) -> Word:
        dom, cod = {"m": (2, 1), "d": (1, 2)}[name]
        return self.word(SliceForm(dom, cod, (Slice(0, name, 0),)))

    def distinguishing_model(self, f: Word, g: Word) -> str | None:
        """Name of an interpretation telling ``f`` and ``g`` apart."""
        if f.key[:2] != g.key[:2]:
            return "boundary"
        if f.key[2] != g.key[2]:
            return "cospan"
        for model, a, b in zip(self.models, f.key[3], g.key[3]):
            if a != b:
                return model.name
        return None

    def unit(self):
        return 0

    def tensor_obj(self, x, y):
        return x + y

    def power(self, x, n):
        return x * n

    def identity(self, x):
        return self.word(SliceForm(x, x, ()))

    def dom(self, f):
        return f.word.domain

    def cod(self, f):
        return f.word.codomain

    def compose(self, f, g):
        if f.word.codomain != g.word.domain:
            raise BoundaryError(f"cannot compose {f.word.domain}->{f.word.codomain} "
                                f"with {g.word.domain}->{g.word.codomain}")
        return self.word(SliceForm(f.word.domain, g.word.codomain,
                                   f.word.slices + g.word.slices))

    def tensor(self, f, g):
        a, b = f.word, g.word
        left = tuple(Slice(s.left_pad, s.gen, s.right_pad + b.domain) for s in a.slices)
        right = tuple(Slice(s.left_pad + a.codomain, s.gen, s.right_pad) for s in b.slices)
        return self.word(SliceForm(a.domain + b.domain, a.codomain + b.codomain, left + right))

    def iota(self, f):
        return CodiscreteCell(f, f)

    def eta(self) -> CodiscreteCell:
        return CodiscreteCell(self.identity(2),
                              self.compose(self.generator("m"), self.generator("d")))

    def cell(self, src: Word, tgt: Word) -> CodiscreteCell:
        if (self.dom(src), self.cod(src)) != (self.dom(tgt), self.cod(tgt)):
            raise BoundaryError(f"2-cell between non-parallel {src!r} and {tgt!r}")
        return CodiscreteCell(src, tgt)

    def cell_src(self, a):
        return a.src

    def cell_tgt(self, a):
        return a.tgt

    def vcomp(self, a, b):
        if a.tgt != b.src:
            raise BoundaryError(f"vertical composite needs {a.tgt!r} == {b.src!r}")
        return CodiscreteCell(a.src, b.tgt)

    def hcomp(self, a, b):
        return CodiscreteCell(self.compose(a.src, b.src), self.compose(a.tgt, b.tgt))

    def tensor2(self, a, b):
        return CodiscreteCell(self.tensor(a.src, b.src), self.tensor(a.tgt, b.tgt))

    def show(self, c):
        if isinstance(c, Word):
            return str(c.word)
        if isinstance(c, CodiscreteCell):
            return {"src": str(c.src.word), "tgt": str(c.tgt.word)}
        return c


def make_instance(name: str) -> InstanceInterface:
    """Instance by CLI name."""
    factories = {
        "cospan-slin": lambda: CospanInstance(cs.SURJ),
        "cospan-opinj": lambda: CospanInstance(cs.OPINJ),
        "terminal": TerminalInstance,
        "free": lambda: SyntacticInstance("free"),
        "free-no-frobenius": lambda: SyntacticInstance("free-no-frobenius",
                                                       (LEFT_ZERO, RIGHT_ZERO)),
        "free-no-separable": lambda: SyntacticInstance("free-no-separable", (AND_ZERO,)),
    }
    try:
        return factories[name]()
    except KeyError:
        raise ValueError(f"unknown instance {name!r}; expected one of "
                         f"{', '.join(sorted(factories))}") from None


INSTANCE_NAMES = ("cospan-slin", "cospan-opinj", "terminal", "free",
                  "free-no-frobenius", "free-no-separable")
