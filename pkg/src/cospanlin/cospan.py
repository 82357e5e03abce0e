"""The strict monoidal 2-category of cospans over a base with strict pushouts.

Two bases are provided.  ``SURJ`` is monotone surjections, where pushouts
come from :func:`ordinals.pushout_surjections`.  ``OPINJ`` is the opposite
of monotone injections: a base arrow ``X -> Y`` is stored as the injection
``Y -> X``, so a cospan over ``OPINJ`` is held as a span of injections and
composed by pullback.  Everything else in this module is written once
against the :class:`BaseCategory` interface.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from . import ordinals
from .errors import BoundaryError, ClassError
from .ordinals import MonotoneMap


class BaseCategory:
    """A skeletal category of finite ordinals with strict, tensor-compatible pushouts."""

    name: str
    #: the single generating arrow (``2 -> 1`` merge, or ``1 -> 0`` in OPINJ)
    generator: MonotoneMap

    def is_arrow(self, f: MonotoneMap) -> bool:
        raise NotImplementedError

    def dom(self, f: MonotoneMap) -> int:
        raise NotImplementedError

    def cod(self, f: MonotoneMap) -> int:
        raise NotImplementedError

    def compose(self, f: MonotoneMap, g: MonotoneMap) -> MonotoneMap:
        raise NotImplementedError

    def pushout(self, f: MonotoneMap, g: MonotoneMap) -> tuple[MonotoneMap, MonotoneMap]:
        raise NotImplementedError

    def arrows(self, m: int, n: int) -> list[MonotoneMap]:
        raise NotImplementedError

    def layers(self, f: MonotoneMap) -> list[tuple[int, int]]:
        """Canonical factorization of ``f`` into ``id_a + generator + id_b``
        layers, listed in composition order, as ``(a, b)`` pairs."""
        raise NotImplementedError

    def layer_arrow(self, a: int, b: int) -> MonotoneMap:
        return ordinals.tensor(ordinals.tensor(ordinals.identity(a), self.generator),
                               ordinals.identity(b))

    def identity(self, n: int) -> MonotoneMap:
        return ordinals.identity(n)

    def tensor(self, f: MonotoneMap, g: MonotoneMap) -> MonotoneMap:
        return ordinals.tensor(f, g)

    def check(self, f: MonotoneMap) -> MonotoneMap:
        if not self.is_arrow(f):
            raise ClassError(f"{f!r} is not an arrow of {self.name}")
        return f

    def __repr__(self):
        return self.name.upper()


# pushouts are pure and recomputed constantly inside hcomp; memoize them
_pushout_surjections = lru_cache(maxsize=1 << 16)(ordinals.pushout_surjections)
_pullback_injections = lru_cache(maxsize=1 << 16)(ordinals.pullback_injections)


class _Surj(BaseCategory):
    name = "surj"
    generator = ordinals.NABLA

    def is_arrow(self, f):
        return f.is_surjective

    def dom(self, f):
        return f.domain

    def cod(self, f):
        return f.codomain

    def compose(self, f, g):
        return ordinals.compose(f, g)

    def pushout(self, f, g):
        return _pushout_surjections(f, g)

    def arrows(self, m, n):
        return ordinals.surjections(m, n)

    def layers(self, f):
        return [(layer.left_pad, layer.right_pad) for layer in ordinals.factorize_surjection(f)]


class _OpInj(BaseCategory):
    name = "opinj"
    generator = ordinals.BANG

    def is_arrow(self, f):
        return f.is_injective

    def dom(self, f):
        return f.codomain

    def cod(self, f):
        return f.domain

    def compose(self, f, g):
        return ordinals.compose(g, f)

    def pushout(self, f, g):
        return _pullback_injections(f, g)

    def arrows(self, m, n):
        return ordinals.injections(n, m)

    def layers(self, f):
        inserts = ordinals.factorize_injection(f)
        return [(layer.left_pad, layer.right_pad) for layer in reversed(inserts)]


SURJ: BaseCategory = _Surj()
OPINJ: BaseCategory = _OpInj()
BASES = {SURJ.name: SURJ, OPINJ.name: OPINJ}


def base_compose_all(base: BaseCategory, arrows, start: int) -> MonotoneMap:
    result = base.identity(start)
    for f in arrows:
        result = base.compose(result, f)
    return result


# -- 1-cells ---------------------------------------------------------------

@dataclass(frozen=True)
class Cospan:
    """``left: source -> apex <- target :right`` in the base."""

    base: BaseCategory
    source: int
    target: int
    apex: int
    left: MonotoneMap
    right: MonotoneMap

    def __post_init__(self):
        b = self.base
        b.check(self.left)
        b.check(self.right)
        if (b.dom(self.left), b.cod(self.left)) != (self.source, self.apex):
            raise BoundaryError(f"left leg {self.left!r} is not {self.source}->{self.apex}")
        if (b.dom(self.right), b.cod(self.right)) != (self.target, self.apex):
            raise BoundaryError(f"right leg {self.right!r} is not {self.target}->{self.apex}")

    def __repr__(self):
        return (f"Cospan[{self.base.name}]({list(self.left.images)}, {self.apex}, "
                f"{list(self.right.images)}: {self.source}->{self.target})")

    def then(self, other: Cospan) -> Cospan:
        return compose_cospans(self, other)

    def __matmul__(self, other: Cospan) -> Cospan:
        return tensor_cospans(self, other)

    def to_json(self) -> dict:
        return {"base": self.base.name, "src": self.source, "tgt": self.target,
                "apex": self.apex, "left": self.left.to_json(), "right": self.right.to_json()}

    def to_compact(self) -> dict:
        return {"src": self.source, "tgt": self.target, "apex": self.apex,
                "left": list(self.left.images), "right": list(self.right.images)}

    @classmethod
    def from_json(cls, data: dict) -> Cospan:
        return cls(BASES[data["base"]], int(data["src"]), int(data["tgt"]), int(data["apex"]),
                   MonotoneMap.from_json(data["left"]), MonotoneMap.from_json(data["right"]))


def make_cospan(base: BaseCategory, left: MonotoneMap, right: MonotoneMap) -> Cospan:
    return Cospan(base, base.dom(left), base.dom(right), base.cod(left), left, right)


def identity_cospan(base: BaseCategory, n: int) -> Cospan:
    i = base.identity(n)
    return Cospan(base, n, n, n, i, i)


def y_embed(base: BaseCategory, f: MonotoneMap) -> Cospan:
    """``(f, Y, id)``: the covariant embedding of a base arrow ``X -> Y``."""
    base.check(f)
    return make_cospan(base, f, base.identity(base.cod(f)))


def z_embed(base: BaseCategory, f: MonotoneMap) -> Cospan:
    """``(id, Y, f)``: the contravariant embedding, a cospan ``Y -> X``."""
    base.check(f)
    return make_cospan(base, base.identity(base.cod(f)), f)


def _same_base(f, g):
    if f.base is not g.base:
        raise BoundaryError(f"mixing bases {f.base!r} and {g.base!r}")


@lru_cache(maxsize=1 << 16)
def compose_cospans(f: Cospan, g: Cospan) -> Cospan:
    _same_base(f, g)
    if f.target != g.source:
        raise BoundaryError(f"cannot compose cospans {f.source}->{f.target} and "
                            f"{g.source}->{g.target}")
    b = f.base
    p0, p1 = b.pushout(f.right, g.left)
    return make_cospan(b, b.compose(f.left, p0), b.compose(g.right, p1))


@lru_cache(maxsize=1 << 16)
def tensor_cospans(f: Cospan, g: Cospan) -> Cospan:
    _same_base(f, g)
    b = f.base
    return make_cospan(b, b.tensor(f.left, g.left), b.tensor(f.right, g.right))


def enumerate_cospans(base: BaseCategory, source: int, target: int) -> list[Cospan]:
    out = []
    for apex in range(max(source, target) + 1):
        for left in base.arrows(source, apex):
            for right in base.arrows(target, apex):
                out.append(Cospan(base, source, target, apex, left, right))
    return out


# -- 2-cells ---------------------------------------------------------------

@dataclass(frozen=True)
class TwoCell:
    """A base arrow between apexes commuting with both legs."""

    src: Cospan
    tgt: Cospan
    apex_map: MonotoneMap

    def __post_init__(self):
        f, g, alpha = self.src, self.tgt, self.apex_map
        _same_base(f, g)
        b = f.base
        if (f.source, f.target) != (g.source, g.target):
            raise BoundaryError(f"2-cell between non-parallel cospans {f!r} and {g!r}")
        b.check(alpha)
        if (b.dom(alpha), b.cod(alpha)) != (f.apex, g.apex):
            raise BoundaryError(f"apex map {alpha!r} is not {f.apex}->{g.apex}")
        if b.compose(f.left, alpha) != g.left or b.compose(f.right, alpha) != g.right:
            raise BoundaryError(f"apex map {alpha!r} does not commute with the legs")

    @property
    def base(self) -> BaseCategory:
        return self.src.base

    @property
    def is_identity(self) -> bool:
        return self.src == self.tgt and self.apex_map.is_identity

    def __repr__(self):
        return f"TwoCell({self.src!r} => {self.tgt!r} via {list(self.apex_map.images)})"

    def to_json(self) -> dict:
        return {"src": self.src.to_json(), "tgt": self.tgt.to_json(),
                "alpha": self.apex_map.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> TwoCell:
        return cls(Cospan.from_json(data["src"]), Cospan.from_json(data["tgt"]),
                   MonotoneMap.from_json(data["alpha"]))


def make_two_cell(f: Cospan, g: Cospan, alpha: MonotoneMap) -> TwoCell:
    return TwoCell(f, g, alpha)


def identity_cell(f: Cospan) -> TwoCell:
    return TwoCell(f, f, f.base.identity(f.apex))


def find_two_cell(f: Cospan, g: Cospan) -> Optional[TwoCell]:
    """The 2-cell ``f => g`` if there is one.

    In ``SURJ`` the left leg of ``f`` is epi, so the apex map is forced
    pointwise by ``alpha(f.left(i)) = g.left(i)``.  In ``OPINJ`` the stored
    left leg is mono and the stored apex map is forced the same way from
    the other side.
    """
    _same_base(f, g)
    if (f.source, f.target) != (g.source, g.target):
        raise BoundaryError(f"cannot search 2-cells between non-parallel {f!r} and {g!r}")
    b = f.base
    if b is SURJ:
        images: list[Optional[int]] = [None] * f.apex
        for i in range(f.source):
            k = f.left.images[i]
            if images[k] not in (None, g.left.images[i]):
                return None
            images[k] = g.left.images[i]
        candidate = tuple(images)
        domain, codomain = f.apex, g.apex
    else:
        # stored alpha: g.apex -> f.apex with alpha ; f.left == g.left
        where = {k: j for j, k in enumerate(f.left.images)}
        try:
            candidate = tuple(where[k] for k in g.left.images)
        except KeyError:
            return None
        domain, codomain = g.apex, f.apex
    try:
        alpha = MonotoneMap(domain, codomain, candidate)
        return TwoCell(f, g, alpha)
    except (ValueError, TypeError):
        return None


def overline(base: BaseCategory, alpha: MonotoneMap) -> TwoCell:
    """The canonical 2-cell ``id_X => y(alpha);z(alpha)``."""
    base.check(alpha)
    src = identity_cospan(base, base.dom(alpha))
    return TwoCell(src, make_cospan(base, alpha, alpha), alpha)


def vcomp(theta: TwoCell, phi: TwoCell) -> TwoCell:
    if theta.tgt != phi.src:
        raise BoundaryError(f"vertical composite needs {theta.tgt!r} == {phi.src!r}")
    return TwoCell(theta.src, phi.tgt, theta.base.compose(theta.apex_map, phi.apex_map))


def hcomp(theta: TwoCell, phi: TwoCell) -> TwoCell:
    """Horizontal composite via the three-by-three grid of pushouts.

    With ``theta: f => f'`` over ``X -> Y`` and ``phi: g => g'`` over
    ``Y -> Z``: push out the inner legs to get apex ``P``, push ``P`` along
    each apex map, then push those two together.  The diagonal ``P -> P'``
    is the apex map of the composite.
    """
    _same_base(theta.src, phi.src)
    if theta.src.target != phi.src.source:
        raise BoundaryError(f"horizontal composite of cells over "
                            f"{theta.src.source}->{theta.src.target} and "
                            f"{phi.src.source}->{phi.src.target}")
    b = theta.base
    f, g = theta.src, phi.src
    p0, p1 = b.pushout(f.right, g.left)
    q, alpha_ = b.pushout(theta.apex_map, p0)
    r, beta_ = b.pushout(phi.apex_map, p1)
    pp0, pp1 = b.pushout(alpha_, beta_)
    src = make_cospan(b, b.compose(f.left, p0), b.compose(g.right, p1))
    tgt = compose_cospans(theta.tgt, phi.tgt)
    # strictness: the pasted outer square is literally the chosen pushout
    assert b.compose(q, pp0) == b.pushout(theta.tgt.right, phi.tgt.left)[0]
    return TwoCell(src, tgt, b.compose(alpha_, pp0))


def whisker(f: Optional[Cospan], theta: TwoCell, g: Optional[Cospan] = None) -> TwoCell:
    """``f . theta . g`` as horizontal composites with identity cells."""
    if f is not None:
        theta = hcomp(identity_cell(f), theta)
    if g is not None:
        theta = hcomp(theta, identity_cell(g))
    return theta


def tensor_two_cells(theta: TwoCell, phi: TwoCell) -> TwoCell:
    _same_base(theta.src, phi.src)
    b = theta.base
    return TwoCell(tensor_cospans(theta.src, phi.src), tensor_cospans(theta.tgt, phi.tgt),
                   b.tensor(theta.apex_map, phi.apex_map))


def two_cells_from(f: Cospan) -> Iterator[TwoCell]:
    """Every 2-cell with source ``f`` (one per base arrow out of the apex)."""
    b = f.base
    for apex in range(f.apex + 1):
        for alpha in b.arrows(f.apex, apex):
            yield TwoCell(f, make_cospan(b, b.compose(f.left, alpha),
                                         b.compose(f.right, alpha)), alpha)
