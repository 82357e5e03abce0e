"""Finite ordinals and monotone maps.

An ordinal ``n`` is the chain ``0 < 1 < ... < n-1``; a map ``m -> n`` is
stored as its tuple of images.  Two subcategories matter here: monotone
surjections (where every pair of maps has a unique order-preserving
pushout) and monotone injections (unique pullbacks).  Ordinal sum is the
strict tensor everywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import BoundaryError, ClassError


@dataclass(frozen=True)
class MonotoneMap:
    domain: int
    codomain: int
    images: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.images, tuple):
            object.__setattr__(self, "images", tuple(self.images))
        if self.domain < 0 or self.codomain < 0:
            raise ValueError("ordinals are natural numbers")
        if len(self.images) != self.domain:
            raise ValueError(
                f"expected {self.domain} images, got {len(self.images)}")
        for i, k in enumerate(self.images):
            if not 0 <= k < self.codomain:
                raise ValueError(f"image {k} of {i} outside <{self.codomain}>")
            if i and self.images[i - 1] > k:
                raise ValueError(f"not monotone at {i}: {self.images}")

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __repr__(self):
        return f"MonotoneMap({self.domain}->{self.codomain}, {list(self.images)})"

    @property
    def is_surjective(self) -> bool:
        return len(set(self.images)) == self.codomain

    @property
    def is_injective(self) -> bool:
        return all(a < b for a, b in zip(self.images, self.images[1:]))

    @property
    def is_identity(self) -> bool:
        return self.domain == self.codomain and self.images == tuple(range(self.domain))

    def then(self, other: MonotoneMap) -> MonotoneMap:
        return compose(self, other)

    def __add__(self, other: MonotoneMap) -> MonotoneMap:
        return tensor(self, other)

    def to_json(self) -> dict:
        return {"dom": self.domain, "cod": self.codomain, "img": list(self.images)}

    @classmethod
    def from_json(cls, data: dict) -> MonotoneMap:
        return cls(int(data["dom"]), int(data["cod"]), tuple(int(k) for k in data["img"]))


def monotone(images: Sequence[int], codomain: int | None = None) -> MonotoneMap:
    """Build a map from its images; the codomain defaults to the smallest
    ordinal containing them."""
    images = tuple(images)
    if codomain is None:
        codomain = max(images) + 1 if images else 0
    return MonotoneMap(len(images), codomain, images)


@lru_cache(maxsize=256)
def identity(n: int) -> MonotoneMap:
    return MonotoneMap(n, n, tuple(range(n)))


#: the multiplication 2 -> 1
NABLA = MonotoneMap(2, 1, (0, 0))
#: the unique map 0 -> 1
BANG = MonotoneMap(0, 1, ())


def compose(f: MonotoneMap, g: MonotoneMap) -> MonotoneMap:
    """Diagrammatic composite: first ``f``, then ``g``."""
    if f.codomain != g.domain:
        raise BoundaryError(
            f"cannot compose {f.domain}->{f.codomain} with {g.domain}->{g.codomain}")
    return MonotoneMap(f.domain, g.codomain, tuple(g.images[k] for k in f.images))


def compose_all(maps: Iterable[MonotoneMap], start: int) -> MonotoneMap:
    result = identity(start)
    for f in maps:
        result = compose(result, f)
    return result


def tensor(f: MonotoneMap, g: MonotoneMap) -> MonotoneMap:
    """Ordinal sum of maps."""
    shift = f.codomain
    return MonotoneMap(f.domain + g.domain, f.codomain + g.codomain,
                       f.images + tuple(k + shift for k in g.images))


def _require(f: MonotoneMap, surjective: bool = False, injective: bool = False):
    if surjective and not f.is_surjective:
        raise ClassError(f"{f!r} is not surjective")
    if injective and not f.is_injective:
        raise ClassError(f"{f!r} is not injective")


# -- interval partitions ---------------------------------------------------

@dataclass(frozen=True)
class IntervalPartition:
    """A partition of ``<domain>`` into consecutive blocks.

    Block ``k`` is ``[block_ends[k-1], block_ends[k])`` (with an implicit
    leading 0).
    """

    domain: int
    block_ends: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.block_ends, tuple):
            object.__setattr__(self, "block_ends", tuple(self.block_ends))
        ends = self.block_ends
        if any(a >= b for a, b in zip(ends, ends[1:])) or (ends and ends[0] <= 0):
            raise ValueError(f"block ends must be strictly increasing and positive: {ends}")
        if (ends[-1] if ends else 0) != self.domain:
            raise ValueError(f"block ends {ends} do not cover <{self.domain}>")

    @property
    def blocks(self) -> list[tuple[int, ...]]:
        out, start = [], 0
        for end in self.block_ends:
            out.append(tuple(range(start, end)))
            start = end
        return out

    def __len__(self):
        return len(self.block_ends)

    def block_of(self, i: int) -> int:
        for k, end in enumerate(self.block_ends):
            if i < end:
                return k
        raise IndexError(i)

    def quotient_map(self) -> MonotoneMap:
        """The surjection sending each element to its block index."""
        return MonotoneMap(self.domain, len(self),
                           tuple(k for k, b in enumerate(self.blocks) for _ in b))

    def to_json(self) -> dict:
        return {"dom": self.domain, "ends": list(self.block_ends)}

    @classmethod
    def from_json(cls, data: dict) -> IntervalPartition:
        return cls(int(data["dom"]), tuple(int(e) for e in data["ends"]))


def kernel_partition(f: MonotoneMap) -> IntervalPartition:
    _require(f, surjective=True)
    ends = [i + 1 for i in range(f.domain)
            if i == f.domain - 1 or f.images[i] != f.images[i + 1]]
    return IntervalPartition(f.domain, tuple(ends))


def join_partitions(p: IntervalPartition, q: IntervalPartition) -> IntervalPartition:
    """Coarsest interval partition refined by both: the cut points common to
    ``p`` and ``q``."""
    if p.domain != q.domain:
        raise BoundaryError(f"partitions of {p.domain} and {q.domain}")
    return IntervalPartition(p.domain, tuple(sorted(set(p.block_ends) & set(q.block_ends))))


def meet_partitions(p: IntervalPartition, q: IntervalPartition) -> IntervalPartition:
    """Common refinement: cut wherever either partition is cut."""
    if p.domain != q.domain:
        raise BoundaryError(f"partitions of {p.domain} and {q.domain}")
    return IntervalPartition(p.domain, tuple(sorted(set(p.block_ends) | set(q.block_ends))))


# -- pushouts and pullbacks -------------------------------------------------

def pushout_surjections(f: MonotoneMap, g: MonotoneMap) -> tuple[MonotoneMap, MonotoneMap]:
    """The unique pushout of a span of surjections ``a <-f- m -g-> b``.

    Returns ``(p0, p1)`` with ``p0: a -> q``, ``p1: b -> q`` and
    ``f;p0 == g;p1``.
    """
    _require(f, surjective=True)
    _require(g, surjective=True)
    if f.domain != g.domain:
        raise BoundaryError(f"span legs have domains {f.domain} and {g.domain}")
    diagonal = join_partitions(kernel_partition(f), kernel_partition(g)).quotient_map()
    q = diagonal.codomain
    p0 = [0] * f.codomain
    p1 = [0] * g.codomain
    for i in range(f.domain):
        p0[f.images[i]] = diagonal.images[i]
        p1[g.images[i]] = diagonal.images[i]
    return MonotoneMap(f.codomain, q, tuple(p0)), MonotoneMap(g.codomain, q, tuple(p1))


def pullback_injections(f: MonotoneMap, g: MonotoneMap) -> tuple[MonotoneMap, MonotoneMap]:
    """The unique pullback of a cospan of injections ``a -f-> n <-g- b``.

    The apex enumerates the common image in order; returns ``(q0, q1)``
    with ``q0;f == q1;g``.
    """
    _require(f, injective=True)
    _require(g, injective=True)
    if f.codomain != g.codomain:
        raise BoundaryError(f"cospan legs have codomains {f.codomain} and {g.codomain}")
    where_f = {k: i for i, k in enumerate(f.images)}
    where_g = {k: i for i, k in enumerate(g.images)}
    common = sorted(set(where_f) & set(where_g))
    p = len(common)
    return (MonotoneMap(p, f.domain, tuple(where_f[k] for k in common)),
            MonotoneMap(p, g.domain, tuple(where_g[k] for k in common)))


# -- generator layers ---------------------------------------------------------

class LayerKind(Enum):
    MERGE = "merge"
    INSERT = "insert"


@dataclass(frozen=True)
class GeneratorLayer:
    """``id_a + g + id_b`` for the generator ``g`` named by ``kind``."""

    left_pad: int
    right_pad: int
    kind: LayerKind = LayerKind.MERGE

    @property
    def domain(self) -> int:
        width = 2 if self.kind is LayerKind.MERGE else 0
        return self.left_pad + width + self.right_pad

    @property
    def codomain(self) -> int:
        return self.left_pad + 1 + self.right_pad

    def to_map(self) -> MonotoneMap:
        gen = NABLA if self.kind is LayerKind.MERGE else BANG
        return tensor(tensor(identity(self.left_pad), gen), identity(self.right_pad))


def factorize_surjection(f: MonotoneMap) -> list[GeneratorLayer]:
    """Canonical merge layers for a surjection, first-applied first.

    At each step the leftmost adjacent pair with equal image is merged.
    """
    _require(f, surjective=True)
    images = list(f.images)
    layers = []
    while len(images) > f.codomain:
        i = next(i for i in range(len(images) - 1) if images[i] == images[i + 1])
        layers.append(GeneratorLayer(i, len(images) - i - 2, LayerKind.MERGE))
        del images[i + 1]
    return layers


def factorize_injection(f: MonotoneMap) -> list[GeneratorLayer]:
    """Insert layers for an injection, missing points inserted in increasing order."""
    _require(f, injective=True)
    hit = set(f.images)
    layers = []
    width = f.domain
    for k in range(f.codomain):
        if k not in hit:
            # every missing point below k is already inserted, so k sits at position k
            layers.append(GeneratorLayer(k, width - k, LayerKind.INSERT))
            width += 1
    return layers


def compose_layers(layers: Sequence[GeneratorLayer], start: int) -> MonotoneMap:
    return compose_all((layer.to_map() for layer in layers), start)


# -- enumeration -----------------------------------------------------------

class MapClass(Enum):
    ALL = "all"
    SURJECTIVE = "surj"
    INJECTIVE = "inj"


def enumerate_maps(m: int, n: int, cls: MapClass = MapClass.ALL) -> list[MonotoneMap]:
    """All monotone maps ``m -> n`` of the class, in lexicographic order."""
    cls = MapClass(cls)
    if cls is MapClass.SURJECTIVE and (n > m or (n == 0) != (m == 0)):
        return []
    if cls is MapClass.INJECTIVE:
        return [MonotoneMap(m, n, c) for c in itertools.combinations(range(n), m)]
    maps = (MonotoneMap(m, n, c)
            for c in itertools.combinations_with_replacement(range(n), m))
    if cls is MapClass.SURJECTIVE:
        return [f for f in maps if f.is_surjective]
    return list(maps)


def surjections(m: int, n: int) -> list[MonotoneMap]:
    return enumerate_maps(m, n, MapClass.SURJECTIVE)


def surjections_from(m: int) -> list[MonotoneMap]:
    return [f for n in range(m + 1) for f in surjections(m, n)]


def injections(m: int, n: int) -> list[MonotoneMap]:
    return enumerate_maps(m, n, MapClass.INJECTIVE)


def injections_into(n: int) -> list[MonotoneMap]:
    return [f for m in range(n + 1) for f in injections(m, n)]
