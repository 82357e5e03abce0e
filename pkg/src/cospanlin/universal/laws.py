"""Como-algebras and Como-units in an instance, and the laws they must satisfy."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Optional

from .. import cospan as cs
from .. import ordinals
from ..errors import CospanLinError
from .instances import (CospanInstance, InstanceInterface, SyntacticInstance,
                        TerminalInstance)


class Verdict(Enum):
    PASS = "pass"
    FAIL = "fail"
    #: the law could not even be stated: composites have the wrong boundary
    STRUCTURAL = "structural"


@dataclass
class LawResult:
    law: str
    verdict: Verdict
    witness: Optional[dict] = None

    @property
    def ok(self) -> bool:
        return self.verdict is Verdict.PASS

    def to_json(self) -> dict:
        return {"law": self.law, "verdict": self.verdict.value, "witness": self.witness}


@dataclass
class LawReport:
    results: list[LawResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def __getitem__(self, law: str) -> LawResult:
        for r in self.results:
            if r.law == law:
                return r
        raise KeyError(law)

    def __contains__(self, law: str) -> bool:
        return any(r.law == law for r in self.results)

    def failures(self) -> list[LawResult]:
        return [r for r in self.results if not r.ok]

    def add(self, law: str, holds: bool, witness: Optional[dict] = None) -> LawResult:
        result = LawResult(law, Verdict.PASS if holds else Verdict.FAIL,
                           None if holds else witness)
        self.results.append(result)
        return result

    def merge(self, other: LawReport) -> LawReport:
        return LawReport(self.results + other.results)

    def to_json(self) -> dict:
        return {"ok": self.ok, "laws": [r.to_json() for r in self.results]}

    def table(self) -> str:
        width = max((len(r.law) for r in self.results), default=4)
        return "\n".join(f"{r.law:<{width}}  {r.verdict.value.upper()}" for r in self.results)


def check_equal(report: LawReport, inst: InstanceInterface, law: str,
                lhs: Callable[[], Any], rhs: Callable[[], Any]) -> LawResult:
    """Record whether two lazily built cells agree.

    A boundary error while building either side is a structural failure.
    """
    try:
        a, b = lhs(), rhs()
    except CospanLinError as exc:
        result = LawResult(law, Verdict.STRUCTURAL, {"error": str(exc)})
        report.results.append(result)
        return result
    return report.add(law, a == b, {"lhs": inst.show(a), "rhs": inst.show(b)})


# -- data ------------------------------------------------------------------

@dataclass(frozen=True)
class ComoAlgebraData:
    """``(X, nabla, delta, eta)`` with ``eta: id_{X(x)X} => nabla ; delta``."""

    carrier: Any
    nabla: Any
    delta: Any
    eta: Any


@dataclass(frozen=True)
class ComoUnitData:
    """``(X, s, r, eta)`` with ``s: I -> X``, ``r: X -> I`` and ``eta: id_X => r ; s``."""

    carrier: Any
    s: Any
    r: Any
    eta: Any


def canonical_como_algebra(inst: InstanceInterface) -> ComoAlgebraData:
    """The evident Como-algebra on the generating object of a shipped instance."""
    if isinstance(inst, CospanInstance):
        if inst.base is not cs.SURJ:
            raise ValueError("Cospan(OPINJ) carries a Como-unit, not a Como-algebra")
        base = inst.base
        return ComoAlgebraData(1, cs.y_embed(base, ordinals.NABLA),
                               cs.z_embed(base, ordinals.NABLA),
                               cs.overline(base, ordinals.NABLA))
    if isinstance(inst, TerminalInstance):
        p = inst.POINT
        return ComoAlgebraData(p, p, p, p)
    if isinstance(inst, SyntacticInstance):
        return ComoAlgebraData(1, inst.generator("m"), inst.generator("d"), inst.eta())
    raise ValueError(f"no canonical Como-algebra for {inst!r}")


def canonical_como_unit(inst: InstanceInterface) -> ComoUnitData:
    if isinstance(inst, CospanInstance) and inst.base is cs.OPINJ:
        base = inst.base
        return ComoUnitData(1, cs.z_embed(base, ordinals.BANG), cs.y_embed(base, ordinals.BANG),
                            cs.overline(base, ordinals.BANG))
    if isinstance(inst, TerminalInstance):
        p = inst.POINT
        return ComoUnitData(p, p, p, p)
    raise ValueError(f"no canonical Como-unit for {inst!r}")


class _Ops:
    """Shorthand for building composites around an algebra."""

    def __init__(self, inst: InstanceInterface, alg: ComoAlgebraData):
        self.inst, self.alg = inst, alg
        self.X = alg.carrier
        self.idX = inst.identity(alg.carrier)

    def seq(self, *cells):
        out = cells[0]
        for c in cells[1:]:
            out = self.inst.compose(out, c)
        return out

    def left(self, f):
        """``X (x) f``"""
        return self.inst.tensor(self.idX, f)

    def right(self, f):
        """``f (x) X``"""
        return self.inst.tensor(f, self.idX)

    def h(self, *cells):
        out = cells[0]
        for c in cells[1:]:
            out = self.inst.hcomp(out, c)
        return out

    def i(self, f):
        return self.inst.iota(f)


# -- one-dimensional laws ----------------------------------------------------

def check_semialgebra(inst: InstanceInterface, alg: ComoAlgebraData) -> LawReport:
    """Associativity, coassociativity, separability and both Frobenius equations."""
    o = _Ops(inst, alg)
    n, d = alg.nabla, alg.delta
    report = LawReport()
    check_equal(report, inst, "associativity",
                lambda: o.seq(o.right(n), n), lambda: o.seq(o.left(n), n))
    check_equal(report, inst, "coassociativity",
                lambda: o.seq(d, o.right(d)), lambda: o.seq(d, o.left(d)))
    check_equal(report, inst, "separability", lambda: o.seq(d, n), lambda: o.idX)
    check_equal(report, inst, "frobenius-left",
                lambda: o.seq(o.right(d), o.left(n)), lambda: o.seq(n, d))
    check_equal(report, inst, "frobenius-right",
                lambda: o.seq(o.left(d), o.right(n)), lambda: o.seq(n, d))
    return report


def _eta_boundary(report: LawReport, inst, alg, o: _Ops) -> bool:
    def source():
        return inst.cell_src(alg.eta)

    def target():
        return inst.cell_tgt(alg.eta)

    a = check_equal(report, inst, "eta-source", source,
                    lambda: inst.identity(inst.tensor_obj(alg.carrier, alg.carrier)))
    b = check_equal(report, inst, "eta-target", target, lambda: o.seq(alg.nabla, alg.delta))
    for r in (a, b):
        if not r.ok:
            r.verdict = Verdict.STRUCTURAL
    return a.ok and b.ok


def check_como_algebra(inst: InstanceInterface, alg: ComoAlgebraData) -> LawReport:
    """Semialgebra laws plus the triangle laws ``eta * nabla = iota`` and
    ``delta * eta = iota`` (the counit is the identity, so it is not data)."""
    report = check_semialgebra(inst, alg)
    o = _Ops(inst, alg)
    if not _eta_boundary(report, inst, alg, o):
        return report
    check_equal(report, inst, "triangle-nabla",
                lambda: o.h(alg.eta, o.i(alg.nabla)), lambda: o.i(alg.nabla))
    check_equal(report, inst, "triangle-delta",
                lambda: o.h(o.i(alg.delta), alg.eta), lambda: o.i(alg.delta))
    return report


# -- two-dimensional Frobenius and mates ---------------------------------------

FROBENIUS_2D = ("nabla-left", "nabla-right", "delta-left", "delta-right")


def check_frobenius_2d(inst: InstanceInterface, alg: ComoAlgebraData) -> LawReport:
    """The four exchange equations between ``eta`` and ``nabla``/``delta``.

    * nabla-left:  ``(eta (x) X) * (X (x) nabla) = (X (x) nabla) * eta``
    * nabla-right: ``(X (x) eta) * (nabla (x) X) = (nabla (x) X) * eta``
    * delta-left:  ``(delta (x) X) * (X (x) eta) = eta * (delta (x) X)``
    * delta-right: ``(X (x) delta) * (eta (x) X) = eta * (X (x) delta)``
    """
    o = _Ops(inst, alg)
    n, d, eta = alg.nabla, alg.delta, alg.eta
    iX = o.i(o.idX)
    report = LawReport()
    check_equal(report, inst, "frobenius-2d/nabla-left",
                lambda: o.h(inst.tensor2(eta, iX), o.i(o.left(n))),
                lambda: o.h(o.i(o.left(n)), eta))
    check_equal(report, inst, "frobenius-2d/nabla-right",
                lambda: o.h(inst.tensor2(iX, eta), o.i(o.right(n))),
                lambda: o.h(o.i(o.right(n)), eta))
    check_equal(report, inst, "frobenius-2d/delta-left",
                lambda: o.h(o.i(o.right(d)), inst.tensor2(iX, eta)),
                lambda: o.h(eta, o.i(o.right(d))))
    check_equal(report, inst, "frobenius-2d/delta-right",
                lambda: o.h(o.i(o.left(d)), inst.tensor2(eta, iX)),
                lambda: o.h(eta, o.i(o.left(d))))
    return report


class MateSide(Enum):
    NABLA_LEFT = "nabla-left"
    NABLA_RIGHT = "nabla-right"
    DELTA_LEFT = "delta-left"
    DELTA_RIGHT = "delta-right"


def compute_mate(inst: InstanceInterface, alg: ComoAlgebraData, side: MateSide) -> Any:
    """Mate of an associativity (or coassociativity) square, counit taken as ``iota``.

    nabla-left pastes ``(delta (x) X) * (X (x) nabla) * eta`` on top of
    ``(eps (x) X) * nabla * delta``; nabla-right is its mirror image.
    delta-left pastes ``eta * (X (x) delta) * (nabla (x) X)`` on top of
    ``nabla * delta * (eps (x) X)``; delta-right is its mirror image.
    """
    side = MateSide(side)
    o = _Ops(inst, alg)
    n, d, eta = alg.nabla, alg.delta, alg.eta
    if side is MateSide.NABLA_LEFT:
        top = o.h(o.i(o.right(d)), o.i(o.left(n)), eta)
        bottom = o.h(o.i(o.seq(o.right(d), o.right(n))), o.i(n), o.i(d))
    elif side is MateSide.NABLA_RIGHT:
        top = o.h(o.i(o.left(d)), o.i(o.right(n)), eta)
        bottom = o.h(o.i(o.seq(o.left(d), o.left(n))), o.i(n), o.i(d))
    elif side is MateSide.DELTA_LEFT:
        top = o.h(eta, o.i(o.left(d)), o.i(o.right(n)))
        bottom = o.h(o.i(n), o.i(d), o.i(o.seq(o.right(d), o.right(n))))
    else:
        top = o.h(eta, o.i(o.right(d)), o.i(o.left(n)))
        bottom = o.h(o.i(n), o.i(d), o.i(o.seq(o.left(d), o.left(n))))
    return inst.vcomp(top, bottom)


def check_mates(inst: InstanceInterface, alg: ComoAlgebraData) -> LawReport:
    """All four mates are identity 2-cells."""
    report = LawReport()
    for side in MateSide:
        law = f"mate/{side.value}"
        try:
            mate = compute_mate(inst, alg, side)
        except CospanLinError as exc:
            report.results.append(LawResult(law, Verdict.STRUCTURAL, {"error": str(exc)}))
            continue
        report.add(law, inst.is_identity_cell(mate), {"mate": inst.show(mate)})
    return report


# -- Como-units --------------------------------------------------------------

def check_como_unit(inst: InstanceInterface, unit: ComoUnitData) -> LawReport:
    """Split-unit law ``s ; r = id_I`` and the triangles
    ``eta * r = iota_r`` and ``s * eta = iota_s``."""
    report = LawReport()
    s, r, eta = unit.s, unit.r, unit.eta
    check_equal(report, inst, "split-unit", lambda: inst.compose(s, r),
                lambda: inst.identity(inst.unit()))
    a = check_equal(report, inst, "eta-source", lambda: inst.cell_src(eta),
                    lambda: inst.identity(unit.carrier))
    b = check_equal(report, inst, "eta-target", lambda: inst.cell_tgt(eta),
                    lambda: inst.compose(r, s))
    for res in (a, b):
        if not res.ok:
            res.verdict = Verdict.STRUCTURAL
    if not (a.ok and b.ok):
        return report
    check_equal(report, inst, "triangle-r", lambda: inst.hcomp(eta, inst.iota(r)),
                lambda: inst.iota(r))
    check_equal(report, inst, "triangle-s", lambda: inst.hcomp(inst.iota(s), eta),
                lambda: inst.iota(s))
    return report
