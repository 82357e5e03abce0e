"""Exhaustive desk-scale checks: indulgence of pushout squares, functor laws,
instance laws, and the per-element decomposition of injective pullbacks."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Iterable, Iterator, Optional

from .. import cospan as cs
from .. import ordinals
from ..errors import CospanLinError
from ..ordinals import MonotoneMap
from .functor import InducedFunctor
from .instances import InstanceInterface
from .laws import ComoAlgebraData, LawReport, LawResult, Verdict


# -- pushout squares -----------------------------------------------------------

@dataclass(frozen=True)
class Square:
    """A pushout square ``alpha ; p0 = beta ; p1`` in a base category."""

    base: cs.BaseCategory
    alpha: MonotoneMap
    beta: MonotoneMap
    p0: MonotoneMap
    p1: MonotoneMap

    @classmethod
    def of(cls, base: cs.BaseCategory, alpha: MonotoneMap, beta: MonotoneMap) -> Square:
        p0, p1 = base.pushout(alpha, beta)
        return cls(base, alpha, beta, p0, p1)

    @property
    def domain(self) -> int:
        return self.base.dom(self.alpha)

    def tensor(self, other: Square) -> Square:
        b = self.base
        return Square(b, b.tensor(self.alpha, other.alpha), b.tensor(self.beta, other.beta),
                      b.tensor(self.p0, other.p0), b.tensor(self.p1, other.p1))

    def flipped(self) -> Square:
        return Square(self.base, self.beta, self.alpha, self.p1, self.p0)

    def to_json(self) -> dict:
        return {k: list(getattr(self, k).images) for k in ("alpha", "beta", "p0", "p1")}


def arrows_from(base: cs.BaseCategory, m: int) -> list[MonotoneMap]:
    return [f for n in range(m + 1) for f in base.arrows(m, n)]


def pushout_squares(base: cs.BaseCategory, bound: int) -> Iterator[Square]:
    """Every pushout square whose corner has size at most ``bound``."""
    for m in range(bound + 1):
        arrows = arrows_from(base, m)
        for alpha in arrows:
            for beta in arrows:
                yield Square.of(base, alpha, beta)


def base_squares(base: cs.BaseCategory) -> list[Square]:
    """The squares whose indulgence implies all others.

    For surjections: ``(nabla, nabla)``, ``(nabla + 1, 1 + nabla)`` and
    ``(1 + nabla, nabla + 1)``.  For the opposite of injections: the single
    square on two copies of ``1 -> 0``.
    """
    if base is cs.SURJ:
        n, i = ordinals.NABLA, ordinals.identity(1)
        return [Square.of(base, n, n), Square.of(base, n + i, i + n),
                Square.of(base, i + n, n + i)]
    g = base.generator
    return [Square.of(base, g, g)]


def indulges_one(F: InducedFunctor, sq: Square) -> tuple[bool, dict]:
    """``(F1 alpha) ; (F0 beta) = (F0 p0) ; (F1 p1)``."""
    inst = F.inst
    lhs = inst.compose(F.f1(sq.alpha), F.f0(sq.beta))
    rhs = inst.compose(F.f0(sq.p0), F.f1(sq.p1))
    return lhs == rhs, {"square": sq.to_json(), "lhs": inst.show(lhs), "rhs": inst.show(rhs)}


def indulges_two(F: InducedFunctor, sq: Square) -> tuple[bool, dict]:
    """``xi_alpha * F0 beta = F0 beta * xi_p1`` and ``F1 alpha * xi_beta = xi_p0 * F1 alpha``."""
    inst = F.inst
    i0b, i1a = inst.iota(F.f0(sq.beta)), inst.iota(F.f1(sq.alpha))
    try:
        pairs = [(inst.hcomp(F.xi(sq.alpha), i0b), inst.hcomp(i0b, F.xi(sq.p1))),
                 (inst.hcomp(i1a, F.xi(sq.beta)), inst.hcomp(F.xi(sq.p0), i1a))]
    except CospanLinError as exc:
        return False, {"square": sq.to_json(), "error": str(exc)}
    for k, (a, b) in enumerate(pairs):
        if a != b:
            return False, {"square": sq.to_json(), "equation": k,
                           "lhs": inst.show(a), "rhs": inst.show(b)}
    return True, {}


def _first_failure(F, squares: Iterable[Square], test) -> tuple[int, Optional[dict]]:
    count = 0
    for sq in squares:
        count += 1
        ok, witness = test(F, sq)
        if not ok:
            return count, witness
    return count, None


def check_compatibility(F: InducedFunctor, bound: int) -> LawReport:
    """Every pushout square with corner at most ``bound`` is indulged, by the
    1-cell halves and by the selection of 2-cells."""
    report = LawReport()
    for law, test in (("indulgence/1-cell", indulges_one), ("indulgence/2-cell", indulges_two)):
        _, witness = _first_failure(F, pushout_squares(F.base, bound), test)
        report.add(law, witness is None, witness)
    return report


def check_three_squares_suffice(F: InducedFunctor, bound: int,
                                tensor_bound: int = 3) -> LawReport:
    """Desk-scale form of "indulging the base squares is enough".

    Records each base square, then every square up to ``bound``, and passes
    ``implication`` unless the base squares all hold while some other
    square fails.  Also checks that tensoring two indulged squares gives an
    indulged square, and that the tensor of two pushout squares is the
    pushout of the tensored span.
    """
    report = LawReport()
    base_ok = True
    for k, sq in enumerate(base_squares(F.base), start=1):
        for dim, test in (("1-cell", indulges_one), ("2-cell", indulges_two)):
            ok, witness = test(F, sq)
            base_ok &= ok
            report.add(f"base-square-{k}/{dim}", ok, witness)
    every_ok = True
    for dim, test in (("1-cell", indulges_one), ("2-cell", indulges_two)):
        _, witness = _first_failure(F, pushout_squares(F.base, bound), test)
        every_ok &= witness is None
        report.add(f"every-square/{dim}", witness is None, witness)
    report.add("implication", not (base_ok and not every_ok),
               {"base_squares_indulged": base_ok, "every_square_indulged": every_ok})
    report.results.append(check_tensor_of_squares(F, tensor_bound))
    return report


def check_tensor_of_squares(F: InducedFunctor, bound: int) -> LawResult:
    """Tensor of indulged pushout squares is an indulged pushout square."""
    squares = list(pushout_squares(F.base, bound))
    indulged = {sq: indulges_one(F, sq)[0] and indulges_two(F, sq)[0] for sq in squares}
    report = LawReport()
    for s, t in itertools.product(squares, repeat=2):
        st = s.tensor(t)
        if Square.of(F.base, st.alpha, st.beta) != st:
            return report.add("tensor-of-squares", False,
                              {"left": s.to_json(), "right": t.to_json(),
                               "reason": "tensor of pushouts is not the pushout"})
        if indulged[s] and indulged[t]:
            ok1, w1 = indulges_one(F, st)
            ok2, w2 = indulges_two(F, st)
            if not (ok1 and ok2):
                return report.add("tensor-of-squares", False,
                                  {"left": s.to_json(), "right": t.to_json(),
                                   "failure": w1 if not ok1 else w2})
    return report.add("tensor-of-squares", True)


def check_selection_on_squares(F: InducedFunctor, bound: int) -> LawReport:
    """``xi_alpha * xi_beta = xi_gamma`` with ``gamma = alpha ; p0 = beta ; p1``."""
    inst, b = F.inst, F.base
    report = LawReport()
    for sq in pushout_squares(b, bound):
        lhs = inst.hcomp(F.xi(sq.alpha), F.xi(sq.beta))
        rhs = F.xi(b.compose(sq.alpha, sq.p0))
        if lhs != rhs:
            report.add("selection-pushout", False, {"square": sq.to_json(),
                                                   "lhs": inst.show(lhs),
                                                   "rhs": inst.show(rhs)})
            return report
    report.add("selection-pushout", True)
    return report


def check_flipped_orientation(F: InducedFunctor, bound: int) -> dict:
    """Indulgence of the diagonally flipped squares, recorded but never asserted."""
    total = flipped_ok = 0
    for sq in pushout_squares(F.base, bound):
        total += 1
        flipped_ok += indulges_one(F, sq.flipped())[0]
    return {"squares": total, "flipped_indulged": flipped_ok}


# -- functor laws ----------------------------------------------------------------

def _cospans(base: cs.BaseCategory, bound: int) -> dict[tuple[int, int], list[cs.Cospan]]:
    return {(x, y): cs.enumerate_cospans(base, x, y)
            for x in range(bound + 1) for y in range(bound + 1)}


class _Recorder:
    def __init__(self, report: LawReport, inst: InstanceInterface):
        self.report, self.inst = report, inst
        self.failed: dict[str, dict] = {}
        self.counts: dict[str, int] = {}

    def check(self, law: str, lhs, rhs, **context):
        self.counts[law] = self.counts.get(law, 0) + 1
        if law not in self.failed and lhs != rhs:
            self.failed[law] = {**context, "lhs": self.inst.show(lhs),
                                "rhs": self.inst.show(rhs)}

    def attempt(self, law: str, lhs, rhs, **context):
        """Like :meth:`check` with lazily built sides; a boundary error while
        building them counts as a failure."""
        if law in self.failed:
            self.counts[law] = self.counts.get(law, 0) + 1
            return
        try:
            a, b = lhs(), rhs()
        except CospanLinError as exc:
            self.counts[law] = self.counts.get(law, 0) + 1
            self.failed[law] = {**context, "error": str(exc)}
            return
        self.check(law, a, b, **context)

    def finish(self, laws):
        for law in laws:
            self.report.add(law, law not in self.failed, self.failed.get(law))


def check_functor_laws(F: InducedFunctor, bound: int) -> LawReport:
    """``F`` preserves identities, composition, ``vcomp``, ``hcomp`` and the
    tensor on all three levels, over every cospan with objects at most
    ``bound`` and every 2-cell between them."""
    inst, b = F.inst, F.base
    report = LawReport()
    rec = _Recorder(report, inst)
    show = lambda c: c.to_compact() if isinstance(c, cs.Cospan) else c.to_json()
    cospans = _cospans(b, bound)
    cells = {k: [t for f in fs for t in cs.two_cells_from(f)] for k, fs in cospans.items()}

    for n in range(bound + 1):
        rec.attempt("identity/1-cell", lambda: F(cs.identity_cospan(b, n)),
                    lambda: inst.identity(F(n)), n=n)
    for fs in cospans.values():
        for f in fs:
            rec.attempt("identity/2-cell", lambda: F(cs.identity_cell(f)),
                        lambda: inst.iota(F(f)), f=show(f))

    objects = range(bound + 1)
    for x, y, z in itertools.product(objects, repeat=3):
        for f in cospans[x, y]:
            for g in cospans[y, z]:
                rec.attempt("composition", lambda: F(cs.compose_cospans(f, g)),
                            lambda: inst.compose(F(f), F(g)), f=show(f), g=show(g))
        for s in cells[x, y]:
            for t in cells[y, z]:
                rec.attempt("hcomp", lambda: F(cs.hcomp(s, t)), lambda: inst.hcomp(F(s), F(t)),
                            theta=show(s), phi=show(t))
    for ts in cells.values():
        for s in ts:
            for t in cs.two_cells_from(s.tgt):
                rec.attempt("vcomp", lambda: F(cs.vcomp(s, t)), lambda: inst.vcomp(F(s), F(t)),
                            theta=show(s), phi=show(t))

    half = bound // 2
    for m, n in itertools.product(range(bound + 1), repeat=2):
        if m + n <= bound:
            rec.attempt("tensor/objects", lambda: F(m + n), lambda: inst.tensor_obj(F(m), F(n)),
                        m=m, n=n)
    small = [f for (x, y), fs in cospans.items() if x <= half and y <= half for f in fs]
    for f, g in itertools.product(small, repeat=2):
        rec.attempt("tensor/1-cell", lambda: F(cs.tensor_cospans(f, g)),
                    lambda: inst.tensor(F(f), F(g)), f=show(f), g=show(g))
    small_cells = [t for f in small for t in cs.two_cells_from(f)]
    for s, t in itertools.product(small_cells, repeat=2):
        rec.attempt("tensor/2-cell", lambda: F(cs.tensor_two_cells(s, t)),
                    lambda: inst.tensor2(F(s), F(t)), theta=show(s), phi=show(t))

    rec.finish(["identity/1-cell", "identity/2-cell", "composition", "vcomp", "hcomp",
                "tensor/objects", "tensor/1-cell", "tensor/2-cell"])
    return report


def check_identity_functor(F: InducedFunctor, object_bound: int, cospan_bound: int) -> LawReport:
    """For ``F`` into ``Cospan(base)`` itself: ``F`` fixes every object,
    cospan and 2-cell in range."""
    report = LawReport()
    rec = _Recorder(report, F.inst)
    for n in range(object_bound + 1):
        rec.check("fixes-objects", F(n), n, n=n)
    for fs in _cospans(F.base, cospan_bound).values():
        for f in fs:
            rec.check("fixes-1-cells", F(f), f)
            for t in cs.two_cells_from(f):
                rec.check("fixes-2-cells", F(t), t)
    rec.finish(["fixes-objects", "fixes-1-cells", "fixes-2-cells"])
    return report


# -- instance laws ---------------------------------------------------------------

def sample_cells(inst: InstanceInterface, alg: ComoAlgebraData) -> tuple[list, list]:
    """A small stock of 1-cells and 2-cells built from the algebra."""
    X = alg.carrier
    one = [inst.identity(inst.unit()), inst.identity(X), alg.nabla, alg.delta,
           inst.compose(alg.delta, alg.nabla), inst.compose(alg.nabla, alg.delta),
           inst.tensor(alg.nabla, inst.identity(X)), inst.tensor(inst.identity(X), alg.delta)]
    two = [inst.iota(f) for f in one] + [alg.eta, inst.tensor2(alg.eta, inst.iota(inst.identity(X)))]
    return one, two


def check_instance_laws(inst: InstanceInterface, alg: ComoAlgebraData) -> LawReport:
    """Strict monoidal 2-category laws on sampled cells: associativity and
    units of both compositions and the tensor, interchange, and
    functoriality of the tensor."""
    report = LawReport()
    rec = _Recorder(report, inst)
    one, two = sample_cells(inst, alg)

    def attempt(law, lhs, rhs):
        try:
            rec.check(law, lhs(), rhs())
        except CospanLinError:
            pass

    I = inst.unit()
    for f in one:
        idd, idc = inst.identity(inst.dom(f)), inst.identity(inst.cod(f))
        rec.check("1-cell units", inst.compose(idd, f), f)
        rec.check("1-cell units", inst.compose(f, idc), f)
        rec.check("tensor units", inst.tensor(inst.identity(I), f), f)
        rec.check("tensor units", inst.tensor(f, inst.identity(I)), f)
    for f, g, h in itertools.product(one, repeat=3):
        attempt("1-cell associativity", lambda: inst.compose(inst.compose(f, g), h),
                lambda: inst.compose(f, inst.compose(g, h)))
        rec.check("tensor associativity", inst.tensor(inst.tensor(f, g), h),
                  inst.tensor(f, inst.tensor(g, h)))
    for f, g, f2, g2 in itertools.product(one[:6], repeat=4):
        attempt("tensor functoriality",
                lambda: inst.tensor(inst.compose(f, f2), inst.compose(g, g2)),
                lambda: inst.compose(inst.tensor(f, g), inst.tensor(f2, g2)))
    for a in two:
        rec.check("2-cell units", inst.vcomp(inst.iota(inst.cell_src(a)), a), a)
        rec.check("2-cell units", inst.vcomp(a, inst.iota(inst.cell_tgt(a))), a)
        d = inst.iota(inst.identity(inst.dom(inst.cell_src(a))))
        rec.check("2-cell units", inst.hcomp(d, a), a)
    for a, b, c in itertools.product(two, repeat=3):
        attempt("hcomp associativity", lambda: inst.hcomp(inst.hcomp(a, b), c),
                lambda: inst.hcomp(a, inst.hcomp(b, c)))
        rec.check("tensor2 associativity", inst.tensor2(inst.tensor2(a, b), c),
                  inst.tensor2(a, inst.tensor2(b, c)))
    for a, b in itertools.product(two, repeat=2):
        for a2 in [t for t in two if inst.cell_src(t) == inst.cell_tgt(a)]:
            for b2 in [t for t in two if inst.cell_src(t) == inst.cell_tgt(b)]:
                attempt("interchange",
                        lambda: inst.vcomp(inst.hcomp(a, b), inst.hcomp(a2, b2)),
                        lambda: inst.hcomp(inst.vcomp(a, a2), inst.vcomp(b, b2)))
                rec.check("tensor2 functoriality",
                          inst.vcomp(inst.tensor2(a, b), inst.tensor2(a2, b2)),
                          inst.tensor2(inst.vcomp(a, a2), inst.vcomp(b, b2)))
    rec.finish(["1-cell units", "1-cell associativity", "tensor units", "tensor associativity",
                "tensor functoriality", "2-cell units", "hcomp associativity",
                "tensor2 associativity", "interchange", "tensor2 functoriality"])
    return report


# -- injective pullbacks ---------------------------------------------------------

#: the generating pullback: two copies of ``! : 0 -> 1`` with apex 0
BASE_PULLBACK = (ordinals.BANG, ordinals.BANG)


def decompose_pullback(f: MonotoneMap, g: MonotoneMap) -> list[tuple[MonotoneMap, MonotoneMap]]:
    """Split the cospan of injections ``a -f-> n <-g- b`` into one cospan
    per element of ``n``; their ordinal sum is the input.

    Each piece is ``(id_1, id_1)``, ``(id_1, !)``, ``(!, id_1)`` or the
    generating ``(!, !)``.
    """
    ordinals._require(f, injective=True)
    ordinals._require(g, injective=True)
    if f.codomain != g.codomain:
        raise ValueError("cospan legs have different codomains")
    hit_f, hit_g = set(f.images), set(g.images)
    one, bang = ordinals.identity(1), ordinals.BANG
    return [(one if k in hit_f else bang, one if k in hit_g else bang)
            for k in range(f.codomain)]


def is_trivial_pullback(f: MonotoneMap, g: MonotoneMap) -> bool:
    return f.is_identity or g.is_identity


def check_pullback_decomposition(bound: int) -> LawReport:
    """For every cospan of injections into ``n <= bound``: the pieces
    tensor back to the input, every piece is trivial or the generating
    square, and the pullback is the tensor of the pieces' pullbacks."""
    report = LawReport()
    for n in range(bound + 1):
        maps = ordinals.injections_into(n)
        for f, g in itertools.product(maps, repeat=2):
            pieces = decompose_pullback(f, g)
            tf = tg = ordinals.identity(0)
            q0 = q1 = ordinals.identity(0)
            for pf, pg in pieces:
                if not (is_trivial_pullback(pf, pg) or (pf, pg) == BASE_PULLBACK):
                    return _fail(report, f, g, "piece is neither trivial nor generating")
                a, b = ordinals.pullback_injections(pf, pg)
                tf, tg, q0, q1 = tf + pf, tg + pg, q0 + a, q1 + b
            if (tf, tg) != (f, g):
                return _fail(report, f, g, "pieces do not tensor back to the cospan")
            if (q0, q1) != ordinals.pullback_injections(f, g):
                return _fail(report, f, g, "pullback is not the tensor of the pieces")
    report.add("pullback-decomposition", True)
    return report


def _fail(report: LawReport, f, g, reason: str) -> LawReport:
    report.add("pullback-decomposition", False,
               {"f": f.to_json(), "g": g.to_json(), "reason": reason})
    return report
