"""The strict monoidal 2-functor out of ``Cospan(base)`` induced by generator images.

For ``base = SURJ`` the data is a Como-algebra: the generator ``2 -> 1``
goes to ``nabla`` under the covariant half ``F0`` and to ``delta`` under
the contravariant half ``F1``, and its selected 2-cell is ``eta``.  For
``base = OPINJ`` it is a Como-unit: the generator ``1 -> 0`` goes to
``r`` and ``s``.  Everything else is forced:

* ``F0 f`` composes ``id_a (x) F0(gen) (x) id_b`` over the canonical layers of ``f``;
* ``F1 f`` composes the ``F1`` images of the same layers in reverse;
* a cospan ``(p0, P, p1)`` goes to ``F0 p0 ; F1 p1``;
* the selection ``xi`` is generated from ``eta`` by
  ``xi_id = iota`` and ``xi_{L ; rest} = xi_L . (F0 L * xi_rest * F1 L)``;
* a 2-cell ``alpha: f => g`` goes to ``F0 f0 * xi_alpha * F1 f1``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Any, Optional

from .. import cospan as cs
from ..errors import LawFailure
from ..ordinals import MonotoneMap
from .instances import InstanceInterface
from .laws import (ComoAlgebraData, ComoUnitData, LawReport, check_como_algebra,
                   check_como_unit)


class InducedFunctor:
    def __init__(self, inst: InstanceInterface, base: cs.BaseCategory, carrier: Any,
                 gen0: Any, gen1: Any, eta: Any):
        self.inst = inst
        self.base = base
        self.carrier = carrier
        self.gen0, self.gen1, self.eta = gen0, gen1, eta
        self.obj = lru_cache(maxsize=None)(self._obj)
        self.f0 = lru_cache(maxsize=None)(self._f0)
        self.f1 = lru_cache(maxsize=None)(self._f1)
        self.xi = lru_cache(maxsize=None)(self._xi)
        self.one = lru_cache(maxsize=None)(self._one)
        self.two = lru_cache(maxsize=None)(self._two)

    def _obj(self, n: int):
        return self.inst.power(self.carrier, n)

    def _padded(self, a: int, gen, b: int):
        inst = self.inst
        return inst.tensor(inst.tensor(inst.identity(self.obj(a)), gen),
                           inst.identity(self.obj(b)))

    def _padded2(self, a: int, cell, b: int):
        inst = self.inst
        return inst.tensor2(inst.tensor2(inst.iota(inst.identity(self.obj(a))), cell),
                            inst.iota(inst.identity(self.obj(b))))

    def layers(self, f: MonotoneMap) -> list[tuple[int, int]]:
        return self.base.layers(f)

    def _f0(self, f: MonotoneMap):
        """Covariant half: a base arrow ``X -> Y`` to a 1-cell ``F X -> F Y``."""
        cells = [self._padded(a, self.gen0, b) for a, b in self.layers(f)]
        return self.inst.compose_all(cells, self.obj(self.base.dom(f)))

    def _f1(self, f: MonotoneMap):
        """Contravariant half: a base arrow ``X -> Y`` to a 1-cell ``F Y -> F X``."""
        cells = [self._padded(a, self.gen1, b) for a, b in reversed(self.layers(f))]
        return self.inst.compose_all(cells, self.obj(self.base.cod(f)))

    def _xi(self, f: MonotoneMap):
        """The selected 2-cell ``id_{F X} => F0 f ; F1 f``."""
        return self._xi_layers(tuple(self.layers(f)), self.base.dom(f))

    def _xi_layers(self, layers: tuple[tuple[int, int], ...], start: int):
        inst = self.inst
        if not layers:
            return inst.iota(inst.identity(self.obj(start)))
        (a, b), rest = layers[0], layers[1:]
        first = self._padded2(a, self.eta, b)
        mid = self.base.cod(self.base.layer_arrow(a, b))
        inner = self._xi_layers(rest, mid)
        whiskered = inst.hcomp(inst.hcomp(inst.iota(self._padded(a, self.gen0, b)), inner),
                               inst.iota(self._padded(a, self.gen1, b)))
        return inst.vcomp(first, whiskered)

    def _one(self, c: cs.Cospan):
        return self.inst.compose(self.f0(c.left), self.f1(c.right))

    def __call__(self, x):
        """Apply to an object, a cospan or a 2-cell of ``Cospan(base)``."""
        if isinstance(x, int):
            return self.obj(x)
        if isinstance(x, cs.Cospan):
            return self.one(x)
        if isinstance(x, cs.TwoCell):
            return self.two(x)
        raise TypeError(f"cannot apply the induced functor to {x!r}")

    def _two(self, theta: cs.TwoCell):
        inst = self.inst
        f = theta.src
        return inst.hcomp(inst.hcomp(inst.iota(self.f0(f.left)), self.xi(theta.apex_map)),
                          inst.iota(self.f1(f.right)))


def functor_from_algebra(inst: InstanceInterface, alg: ComoAlgebraData) -> InducedFunctor:
    """The induced functor without checking any laws first (for mutation tests)."""
    return InducedFunctor(inst, cs.SURJ, alg.carrier, alg.nabla, alg.delta, alg.eta)


def functor_from_unit(inst: InstanceInterface, unit: ComoUnitData) -> InducedFunctor:
    return InducedFunctor(inst, cs.OPINJ, unit.carrier, unit.r, unit.s, unit.eta)


def induced_functor(inst: InstanceInterface, alg: ComoAlgebraData,
                    report: Optional[LawReport] = None) -> InducedFunctor:
    """The unique strict monoidal 2-functor ``Cospan(SURJ) -> inst`` sending the
    universal Como-algebra to ``alg``; raises :class:`LawFailure` if ``alg``
    is not a Como-algebra."""
    report = report or check_como_algebra(inst, alg)
    if not report.ok:
        names = ", ".join(r.law for r in report.failures())
        raise LawFailure(f"not a Como-algebra in {inst.name}: {names}", report)
    return functor_from_algebra(inst, alg)


def induced_unit_functor(inst: InstanceInterface, unit: ComoUnitData) -> InducedFunctor:
    """The unique strict monoidal 2-functor ``Cospan(OPINJ) -> inst`` sending
    ``(1, !, ?, eta)`` to ``unit``."""
    report = check_como_unit(inst, unit)
    if not report.ok:
        names = ", ".join(r.law for r in report.failures())
        raise LawFailure(f"not a Como-unit in {inst.name}: {names}", report)
    return functor_from_unit(inst, unit)
