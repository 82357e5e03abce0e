"""Terms of the free monoidal 2-category on the Como signatures.

Two disjoint signatures share one syntax.  The semialgebra signature has
merge ``m: 2 -> 1``, split ``d: 1 -> 2`` and the 2-cell ``eta: id_2 => m ; d``.
The unit signature has ``s: 0 -> 1``, ``r: 1 -> 0`` and ``eta: id_1 => r ; s``.
Terms evaluate into cospans of surjections and cospans over the opposite
of injections respectively.  Term equality is always semantic; two terms
are never compared as trees.

Grammar (``+`` binds tighter than ``*``, which binds tighter than ``;``)::

    term1  := atom { ";" atom }
    atom   := factor { "+" factor }
    factor := "m" | "d" | "s" | "r" | "id:" nat | "(" term1 ")"
    term2  := atom2 { ";" atom2 }
    atom2  := f2 { "*" f2 }
    f2     := f3 { "+" f3 }
    f3     := "eta" | "iota(" term1 ")" | "(" term2 ")"
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Optional, Union

from . import cospan as cs
from . import ordinals
from .cospan import Cospan, TwoCell
from .errors import BoundaryError, ParseError


class Signature(Enum):
    SEMIALGEBRA = "semialgebra"
    UNIT = "unit"

    @property
    def base(self) -> cs.BaseCategory:
        return cs.SURJ if self is Signature.SEMIALGEBRA else cs.OPINJ


GENERATORS = {
    # name: (domain, codomain, signature)
    "m": (2, 1, Signature.SEMIALGEBRA),
    "d": (1, 2, Signature.SEMIALGEBRA),
    "s": (0, 1, Signature.UNIT),
    "r": (1, 0, Signature.UNIT),
}


# -- 1-cell terms ------------------------------------------------------------

@dataclass(frozen=True)
class Id:
    n: int


@dataclass(frozen=True)
class Gen:
    name: str

    def __post_init__(self):
        if self.name not in GENERATORS:
            raise ValueError(f"unknown generator {self.name!r}")


@dataclass(frozen=True)
class Tensor:
    left: "OneCellTerm"
    right: "OneCellTerm"


@dataclass(frozen=True)
class Seq:
    first: "OneCellTerm"
    second: "OneCellTerm"


OneCellTerm = Union[Id, Gen, Tensor, Seq]

GenNabla = Gen("m")
GenDelta = Gen("d")
GenS = Gen("s")
GenR = Gen("r")


def seq(*terms: OneCellTerm) -> OneCellTerm:
    """Left-nested sequential composite."""
    out = terms[0]
    for t in terms[1:]:
        out = Seq(out, t)
    return out


def tensor(*terms: OneCellTerm) -> OneCellTerm:
    out = terms[0]
    for t in terms[1:]:
        out = Tensor(out, t)
    return out


# -- 2-cell terms ------------------------------------------------------------

@dataclass(frozen=True)
class Iota:
    term: OneCellTerm


@dataclass(frozen=True)
class Eta:
    sig: Signature = Signature.SEMIALGEBRA


@dataclass(frozen=True)
class VComp:
    first: "TwoCellTerm"
    second: "TwoCellTerm"


@dataclass(frozen=True)
class HComp:
    first: "TwoCellTerm"
    second: "TwoCellTerm"


@dataclass(frozen=True)
class Tensor2:
    left: "TwoCellTerm"
    right: "TwoCellTerm"


TwoCellTerm = Union[Iota, Eta, VComp, HComp, Tensor2]
ONE_CELL_TYPES = (Id, Gen, Tensor, Seq)
TWO_CELL_TYPES = (Iota, Eta, VComp, HComp, Tensor2)


def signatures(t) -> set[Signature]:
    """Signatures of the generators occurring in a 1- or 2-cell term."""
    if isinstance(t, Gen):
        return {GENERATORS[t.name][2]}
    if isinstance(t, Id):
        return set()
    if isinstance(t, Eta):
        return {t.sig}
    if isinstance(t, Iota):
        return signatures(t.term)
    a, b = _children(t)
    return signatures(a) | signatures(b)


def signature_of(t, default: Signature = Signature.SEMIALGEBRA) -> Signature:
    sigs = signatures(t)
    if len(sigs) > 1:
        raise BoundaryError("term mixes the semialgebra and unit signatures")
    return sigs.pop() if sigs else default


def _children(t):
    if isinstance(t, (Tensor, Tensor2)):
        return t.left, t.right
    return t.first, t.second


def boundary(t: OneCellTerm, path: tuple[int, ...] = ()) -> tuple[int, int]:
    if isinstance(t, Id):
        if t.n < 0:
            raise BoundaryError(f"identity on negative ordinal {t.n}", path)
        return t.n, t.n
    if isinstance(t, Gen):
        m, n, _ = GENERATORS[t.name]
        return m, n
    if isinstance(t, Tensor):
        a, b = boundary(t.left, path + (0,)), boundary(t.right, path + (1,))
        return a[0] + b[0], a[1] + b[1]
    if isinstance(t, Seq):
        a, b = boundary(t.first, path + (0,)), boundary(t.second, path + (1,))
        if a[1] != b[0]:
            raise BoundaryError(
                f"sequential composite of {a[0]}->{a[1]} with {b[0]}->{b[1]}", path)
        return a[0], b[1]
    raise TypeError(f"not a 1-cell term: {t!r}")


def _eval_gen(name: str) -> Cospan:
    if name == "m":
        return cs.y_embed(cs.SURJ, ordinals.NABLA)
    if name == "d":
        return cs.z_embed(cs.SURJ, ordinals.NABLA)
    if name == "s":
        return cs.z_embed(cs.OPINJ, ordinals.BANG)
    return cs.y_embed(cs.OPINJ, ordinals.BANG)


@lru_cache(maxsize=1 << 16)
def _eval(t: OneCellTerm, base: cs.BaseCategory) -> Cospan:
    if isinstance(t, Id):
        return cs.identity_cospan(base, t.n)
    if isinstance(t, Gen):
        return _eval_gen(t.name)
    if isinstance(t, Tensor):
        return cs.tensor_cospans(_eval(t.left, base), _eval(t.right, base))
    return cs.compose_cospans(_eval(t.first, base), _eval(t.second, base))


def eval_one(t: OneCellTerm, sig: Optional[Signature] = None) -> Cospan:
    """Evaluate a 1-cell term to its cospan.

    Identity-only terms belong to both signatures; ``sig`` picks the target
    (semialgebra by default).
    """
    boundary(t)
    sigs = signatures(t)
    if len(sigs) > 1:
        raise BoundaryError("term mixes the semialgebra and unit signatures")
    sig = sig or (next(iter(sigs)) if sigs else Signature.SEMIALGEBRA)
    if sigs - {sig}:
        raise BoundaryError(f"term is not in the {sig.value} signature")
    return _eval(t, sig.base)


# -- 2-cell boundaries and evaluation --------------------------------------

ETA_BOUNDARY = {
    Signature.SEMIALGEBRA: (Id(2), Seq(GenNabla, GenDelta)),
    Signature.UNIT: (Id(1), Seq(GenR, GenS)),
}


def two_boundary(t: TwoCellTerm, path: tuple[int, ...] = ()) -> tuple[OneCellTerm, OneCellTerm]:
    """Source and target 1-cell terms of a 2-cell term.

    Vertical composites are checked semantically: the target of the first
    must evaluate equal to the source of the second.
    """
    if isinstance(t, Iota):
        boundary(t.term, path + (0,))
        return t.term, t.term
    if isinstance(t, Eta):
        return ETA_BOUNDARY[t.sig]
    a = two_boundary(_children(t)[0], path + (0,))
    b = two_boundary(_children(t)[1], path + (1,))
    if isinstance(t, Tensor2):
        return Tensor(a[0], b[0]), Tensor(a[1], b[1])
    if isinstance(t, HComp):
        left, right = boundary(a[0])[1], boundary(b[0])[0]
        if left != right:
            raise BoundaryError(f"horizontal composite across {left} and {right}", path)
        return Seq(a[0], b[0]), Seq(a[1], b[1])
    sig = signature_of(t)
    if boundary(a[1]) != boundary(b[0]) or eval_one(a[1], sig) != eval_one(b[0], sig):
        raise BoundaryError("vertical composite: target of the first cell differs from "
                            "source of the second", path)
    return a[0], b[1]


def _unit_eta() -> TwoCell:
    # eta: id_1 => r ; s, apex map the op of 0 -> 1
    return cs.overline(cs.OPINJ, ordinals.BANG)


def eval_two(t: TwoCellTerm, sig: Optional[Signature] = None) -> TwoCell:
    sig = sig or signature_of(t)
    if isinstance(t, Iota):
        return cs.identity_cell(eval_one(t.term, sig))
    if isinstance(t, Eta):
        if t.sig is Signature.SEMIALGEBRA:
            return cs.overline(cs.SURJ, ordinals.NABLA)
        return _unit_eta()
    a, b = (eval_two(c, sig) for c in _children(t))
    if isinstance(t, VComp):
        return cs.vcomp(a, b)
    if isinstance(t, HComp):
        return cs.hcomp(a, b)
    return cs.tensor_two_cells(a, b)


# -- slices ------------------------------------------------------------------

@dataclass(frozen=True)
class Slice:
    """One generator with identity padding on either side."""

    left_pad: int
    gen: str
    right_pad: int

    @property
    def domain(self) -> int:
        return self.left_pad + GENERATORS[self.gen][0] + self.right_pad

    @property
    def codomain(self) -> int:
        return self.left_pad + GENERATORS[self.gen][1] + self.right_pad

    def __repr__(self):
        return f"{self.gen}({self.left_pad},{self.right_pad})"

    @lru_cache(maxsize=4096)
    def to_term(self) -> OneCellTerm:
        t: OneCellTerm = Gen(self.gen)
        if self.left_pad:
            t = Tensor(Id(self.left_pad), t)
        if self.right_pad:
            t = Tensor(t, Id(self.right_pad))
        return t

    def to_json(self) -> dict:
        return {"gen": self.gen, "left": self.left_pad, "right": self.right_pad}


@dataclass(frozen=True)
class SliceForm:
    domain: int
    codomain: int
    slices: tuple[Slice, ...]

    def __post_init__(self):
        if not isinstance(self.slices, tuple):
            object.__setattr__(self, "slices", tuple(self.slices))
        width = self.domain
        for k, s in enumerate(self.slices):
            if s.domain != width:
                raise BoundaryError(f"slice {k} ({s!r}) expects width {s.domain}, got {width}")
            width = s.codomain
        if width != self.codomain:
            raise BoundaryError(f"slices end at width {width}, not {self.codomain}")

    def __len__(self):
        return len(self.slices)

    def __iter__(self):
        return iter(self.slices)

    def to_term(self) -> OneCellTerm:
        if not self.slices:
            return Id(self.domain)
        return seq(*(s.to_term() for s in self.slices))

    def to_json(self) -> dict:
        return {"dom": self.domain, "cod": self.codomain,
                "slices": [s.to_json() for s in self.slices]}

    def __str__(self):
        if not self.slices:
            return f"id:{self.domain}"
        return " ; ".join(print_term(s.to_term()) for s in self.slices)


def to_slices(t: OneCellTerm) -> SliceForm:
    """Sequentialize a term: the left factor of a tensor goes first."""
    def go(t) -> list[Slice]:
        if isinstance(t, Id):
            return []
        if isinstance(t, Gen):
            return [Slice(0, t.name, 0)]
        if isinstance(t, Seq):
            return go(t.first) + go(t.second)
        (ma, na), (mb, _) = boundary(t.left), boundary(t.right)
        return ([Slice(s.left_pad, s.gen, s.right_pad + mb) for s in go(t.left)]
                + [Slice(s.left_pad + na, s.gen, s.right_pad) for s in go(t.right)])

    m, n = boundary(t)
    return SliceForm(m, n, tuple(go(t)))


# -- printing and parsing ----------------------------------------------------

def print_term(t) -> str:
    """Canonical text; ``parse(print_term(t)) == t``."""
    if isinstance(t, ONE_CELL_TYPES):
        return _print1(t)
    return _print2(t)


def _print1(t, ctx: str = "seq") -> str:
    if isinstance(t, Id):
        return f"id:{t.n}"
    if isinstance(t, Gen):
        return t.name
    if isinstance(t, Tensor):
        text = f"{_print1(t.left, 'tensor')} + {_print1(t.right, 'tensor_right')}"
        return f"({text})" if ctx == "tensor_right" else text
    text = f"{_print1(t.first, 'seq')} ; {_print1(t.second, 'seq_right')}"
    return f"({text})" if ctx in ("tensor", "tensor_right", "seq_right") else text


def _print2(t, level: int = 0, right: bool = False) -> str:
    if isinstance(t, Iota):
        return f"iota({_print1(t.term)})"
    if isinstance(t, Eta):
        return "eta"
    op, own = {VComp: (" ; ", 0), HComp: (" * ", 1), Tensor2: (" + ", 2)}[type(t)]
    a, b = _children(t)
    text = _print2(a, own) + op + _print2(b, own, right=True)
    if own < level or (own == level and right):
        return f"({text})"
    return text


_TOKEN = re.compile(r"\s*(?:(iota\()|(eta)|(id:)(\d+)|([mdsr])(?![A-Za-z0-9_])|([;+*()]))")


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens, pos = [], 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        match = _TOKEN.match(text, pos)
        if not match:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        start = match.start() + len(match.group(0)) - len(match.group(0).lstrip())
        if match.group(1):
            tokens.append(("iota(", None, start))
        elif match.group(2):
            tokens.append(("eta", None, start))
        elif match.group(3):
            tokens.append(("id", int(match.group(4)), start))
        elif match.group(5):
            tokens.append(("gen", match.group(5), start))
        else:
            tokens.append((match.group(6), None, start))
        pos = match.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind: str):
        tok = self.peek()
        if tok[0] != kind:
            self.fail(f"expected {kind!r}")
        self.i += 1
        return tok

    def fail(self, message: str):
        kind, _, pos = self.peek()
        prev = self.tokens[self.i - 1] if self.i else None
        if kind in ("end", ")") and prev and prev[0] in (";", "+", "*"):
            raise ParseError(f"dangling {prev[0]!r}", prev[2], self.text)
        found = "end of input" if kind == "end" else repr(self.text[pos:pos + 5])
        raise ParseError(f"{message}, found {found}", pos, self.text)

    # 1-cells
    def term1(self):
        t = self.atom1()
        while self.peek()[0] == ";":
            self.i += 1
            t = Seq(t, self.atom1())
        return t

    def atom1(self):
        t = self.factor1()
        while self.peek()[0] == "+":
            self.i += 1
            t = Tensor(t, self.factor1())
        return t

    def factor1(self):
        kind, value, _ = self.peek()
        if kind == "gen":
            self.i += 1
            return Gen(value)
        if kind == "id":
            self.i += 1
            return Id(value)
        if kind == "(":
            self.i += 1
            t = self.term1()
            self.take(")")
            return t
        self.fail("expected a 1-cell term")

    # 2-cells
    def term2(self):
        t = self.atom2()
        while self.peek()[0] == ";":
            self.i += 1
            t = VComp(t, self.atom2())
        return t

    def atom2(self):
        t = self.f2()
        while self.peek()[0] == "*":
            self.i += 1
            t = HComp(t, self.f2())
        return t

    def f2(self):
        t = self.f3()
        while self.peek()[0] == "+":
            self.i += 1
            t = Tensor2(t, self.f3())
        return t

    def f3(self):
        kind = self.peek()[0]
        if kind == "eta":
            self.i += 1
            return Eta()
        if kind == "iota(":
            self.i += 1
            t = self.term1()
            self.take(")")
            return Iota(t)
        if kind == "(":
            self.i += 1
            t = self.term2()
            self.take(")")
            return t
        self.fail("expected a 2-cell term")


def _with_eta_signature(t, sig: Signature):
    if isinstance(t, Eta):
        return Eta(sig)
    if isinstance(t, Iota):
        return t
    a, b = _children(t)
    return type(t)(_with_eta_signature(a, sig), _with_eta_signature(b, sig))


def parse(text: str):
    """Parse a 1-cell or 2-cell term (2-cell iff it mentions ``eta``/``iota``)."""
    p = _Parser(text)
    two = any(kind in ("eta", "iota(") for kind, _, _ in p.tokens)
    t = p.term2() if two else p.term1()
    if p.peek()[0] != "end":
        p.fail("expected end of input")
    if two:
        if any(Signature.UNIT in signatures(i.term) for i in _iotas(t)):
            t = _with_eta_signature(t, Signature.UNIT)
        two_boundary(t)
    else:
        boundary(t)
    return t


def _iotas(t):
    if isinstance(t, Iota):
        yield t
    elif not isinstance(t, Eta):
        for c in _children(t):
            yield from _iotas(c)


# -- JSON ----------------------------------------------------------------------

def term_to_json(t) -> dict:
    def node(t):
        if isinstance(t, Id):
            return {"op": "id", "n": t.n}
        if isinstance(t, Gen):
            return {"op": "gen", "name": t.name}
        if isinstance(t, Eta):
            return {"op": "eta"}
        if isinstance(t, Iota):
            return {"op": "iota", "term": node(t.term)}
        name = {Tensor: "tensor", Seq: "seq", VComp: "vcomp", HComp: "hcomp",
                Tensor2: "tensor2"}[type(t)]
        return {"op": name, "args": [node(c) for c in _children(t)]}

    return {"sig": signature_of(t).value, "term": node(t)}


def term_from_json(data: dict):
    sig = Signature(data["sig"])
    kinds = {"tensor": Tensor, "seq": Seq, "vcomp": VComp, "hcomp": HComp, "tensor2": Tensor2}

    def node(d):
        op = d["op"]
        if op == "id":
            return Id(int(d["n"]))
        if op == "gen":
            return Gen(d["name"])
        if op == "eta":
            return Eta(sig)
        if op == "iota":
            return Iota(node(d["term"]))
        return kinds[op](*(node(c) for c in d["args"]))

    return node(data["term"])
