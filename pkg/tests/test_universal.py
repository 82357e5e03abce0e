import pytest

from cospanlin import cospan as cs
from cospanlin import ordinals as o
from cospanlin.errors import BoundaryError, LawFailure
from cospanlin.freeterm import parse, to_slices
from cospanlin.universal import (AND_ZERO, LEFT_ZERO, RIGHT_ZERO, ComoAlgebraData,
                                 InducedFunctor, MateSide, Square, Verdict, base_squares,
                                 canonical_como_algebra, canonical_como_unit,
                                 check_como_algebra, check_como_unit, check_compatibility,
                                 check_flipped_orientation, check_frobenius_2d,
                                 check_functor_laws, check_identity_functor,
                                 check_instance_laws,
                                 check_pullback_decomposition, check_selection_on_squares,
                                 check_semialgebra, compute_mate, decompose_pullback,
                                 functor_from_algebra, functor_from_unit, indulges_one,
                                 indulges_two, induced_functor, induced_unit_functor,
                                 make_instance, pushout_squares, run_suite)


def algebra_functor(name):
    inst = make_instance(name)
    return functor_from_algebra(inst, canonical_como_algebra(inst))


def unit_functor():
    inst = make_instance("cospan-opinj")
    return functor_from_unit(inst, canonical_como_unit(inst))


FROBENIUS_ROWS = ["frobenius-left", "frobenius-right", "frobenius-2d/nabla-left",
                  "frobenius-2d/nabla-right", "frobenius-2d/delta-left",
                  "frobenius-2d/delta-right"]


@pytest.mark.parametrize("name", ["cospan-slin", "cospan-opinj", "terminal", "free"])
def test_shipped_instances_pass_the_suite(name):
    report = run_suite(name, bound=4)
    assert report.ok, [r.law for r in report.failures()]


def test_unknown_instance():
    with pytest.raises(ValueError):
        make_instance("nope")


def test_no_frobenius_mutation_fails_with_witnesses():
    report = run_suite("free-no-frobenius", bound=4)
    assert not report.ok
    for law in FROBENIUS_ROWS:
        assert report[law].verdict is Verdict.FAIL
        assert report[law].witness
    assert report["separability"].ok and report["associativity"].ok
    assert report["triangle-nabla"].ok and report["triangle-delta"].ok
    assert not report["indulgence/1-cell"].ok
    assert report["base-square-1/1-cell"].ok and not report["base-square-2/1-cell"].ok
    # base squares fail, so the implication holds vacuously
    assert report["implication"].ok


def test_no_frobenius_mutation_fails_on_a_larger_square():
    F = algebra_functor("free-no-frobenius")
    larger = [sq for sq in pushout_squares(F.base, 4) if sq.domain == 4]
    assert any(not indulges_one(F, sq)[0] for sq in larger)


def test_no_separable_mutation():
    report = run_suite("free-no-separable", bound=4)
    assert not report["separability"].ok
    assert not report["triangle-nabla"].ok
    assert report["frobenius-left"].ok and report["frobenius-right"].ok
    assert not report["base-square-1/1-cell"].ok
    inst = make_instance("free-no-separable")
    m, d = inst.generator("m"), inst.generator("d")
    assert inst.compose(inst.compose(m, d), m) != m
    assert inst.distinguishing_model(inst.compose(d, m), inst.identity(1)) == "and-zero"


def test_set_models():
    word = to_slices(parse("d ; m"))
    assert LEFT_ZERO.run(word) == ((0,), (1,))
    assert AND_ZERO.run(word) == ((0,), (0,))
    left = to_slices(parse("d + id:1 ; id:1 + m"))
    right = to_slices(parse("id:1 + d ; m + id:1"))
    middle = to_slices(parse("m ; d"))
    # each model keeps one Frobenius equation and breaks the other
    assert LEFT_ZERO.run(left) == LEFT_ZERO.run(middle) != LEFT_ZERO.run(right)
    assert RIGHT_ZERO.run(right) == RIGHT_ZERO.run(middle) != RIGHT_ZERO.run(left)


def test_free_instance_is_faithful_on_words():
    inst = make_instance("free")
    a = inst.word(to_slices(parse("d + id:1 ; id:1 + m")))
    b = inst.word(to_slices(parse("id:1 + d ; m + id:1")))
    assert a == b
    assert inst.word(to_slices(parse("m ; d"))) != inst.identity(2)


@pytest.mark.parametrize("name", ["cospan-slin", "free", "terminal"])
def test_mates_are_identities(name):
    inst = make_instance(name)
    alg = canonical_como_algebra(inst)
    for side in MateSide:
        assert inst.is_identity_cell(compute_mate(inst, alg, side))


def test_cospan_mates_are_literally_iota():
    inst = make_instance("cospan-slin")
    alg = canonical_como_algebra(inst)
    mate = compute_mate(inst, alg, MateSide.NABLA_LEFT)
    assert mate == cs.identity_cell(mate.src)
    assert mate.src == (cs.z_embed(cs.SURJ, o.NABLA) @ cs.identity_cospan(cs.SURJ, 1)).then(
        cs.identity_cospan(cs.SURJ, 1) @ cs.y_embed(cs.SURJ, o.NABLA))


def test_eta_with_wrong_boundary_is_structural():
    inst = make_instance("cospan-slin")
    alg = canonical_como_algebra(inst)
    bad = ComoAlgebraData(alg.carrier, alg.nabla, alg.delta,
                          cs.identity_cell(cs.identity_cospan(cs.SURJ, 2)))
    report = check_como_algebra(inst, bad)
    assert report["eta-target"].verdict is Verdict.STRUCTURAL
    assert "triangle-nabla" not in report
    with pytest.raises(LawFailure) as info:
        induced_functor(inst, bad)
    assert info.value.report is not None


def test_semialgebra_on_cospans():
    inst = make_instance("cospan-slin")
    report = check_semialgebra(inst, canonical_como_algebra(inst))
    assert report.ok
    assert [r.law for r in report.results] == ["associativity", "coassociativity",
                                               "separability", "frobenius-left",
                                               "frobenius-right"]
    assert check_frobenius_2d(inst, canonical_como_algebra(inst)).ok


def test_como_unit():
    inst = make_instance("cospan-opinj")
    unit = canonical_como_unit(inst)
    report = check_como_unit(inst, unit)
    assert report.ok
    assert unit.s.then(unit.r) == cs.identity_cospan(cs.OPINJ, 0)
    assert induced_unit_functor(inst, unit).carrier == 1
    with pytest.raises(ValueError):
        canonical_como_unit(make_instance("free"))
    with pytest.raises(ValueError):
        canonical_como_algebra(inst)


def test_base_squares():
    sqs = base_squares(cs.SURJ)
    assert [sq.alpha.images for sq in sqs] == [(0, 0), (0, 0, 1), (0, 1, 1)]
    assert all(sq.p0.codomain == 1 and sq.p1.codomain == 1 for sq in sqs)
    (g,) = base_squares(cs.OPINJ)
    assert g.alpha == o.BANG and g.p0.domain == 0


@pytest.mark.parametrize("name, bound", [("cospan-slin", 3), ("terminal", 4), ("free", 3)])
def test_induced_functor_laws(name, bound):
    report = check_functor_laws(algebra_functor(name), bound)
    assert report.ok, [(r.law, r.witness) for r in report.failures()]


def test_induced_unit_functor_laws():
    report = check_functor_laws(unit_functor(), 3)
    assert report.ok


def test_induced_functor_is_the_identity():
    assert check_identity_functor(algebra_functor("cospan-slin"), 5, 3).ok
    assert check_identity_functor(unit_functor(), 5, 3).ok


def test_induced_functor_dispatch():
    F = algebra_functor("cospan-slin")
    assert F(3) == 3
    nabla = cs.y_embed(cs.SURJ, o.NABLA)
    assert F(nabla) == nabla
    eta = cs.overline(cs.SURJ, o.NABLA)
    assert F(eta) == eta
    with pytest.raises(TypeError):
        F("x")


def test_mirrored_f1_breaks_composition():
    class Mirrored(InducedFunctor):
        def _f1(self, f):
            cells = [self._padded(b, self.gen1, a) for a, b in reversed(self.layers(f))]
            return self.inst.compose_all(cells, self.obj(self.base.cod(f)))

    inst = make_instance("cospan-slin")
    alg = canonical_como_algebra(inst)
    F = Mirrored(inst, cs.SURJ, alg.carrier, alg.nabla, alg.delta, alg.eta)
    report = check_functor_laws(F, 3)
    assert not report["composition"].ok
    assert report["composition"].witness


def test_selection_on_pushout_squares():
    assert check_selection_on_squares(algebra_functor("cospan-slin"), 4).ok
    assert check_selection_on_squares(algebra_functor("free"), 4).ok


def test_compatibility_and_orientation():
    F = algebra_functor("cospan-slin")
    assert check_compatibility(F, 4).ok
    info = check_flipped_orientation(F, 4)
    assert info["squares"] > 0 and 0 <= info["flipped_indulged"] <= info["squares"]


def test_indulgence_of_one_square():
    F = algebra_functor("cospan-slin")
    sq = Square.of(cs.SURJ, o.monotone([0, 0, 1]), o.monotone([0, 1, 1]))
    assert sq.p0 == o.NABLA and sq.p1 == o.NABLA
    assert indulges_one(F, sq)[0] and indulges_two(F, sq)[0]
    assert sq.flipped().alpha == sq.beta


@pytest.mark.parametrize("name", ["cospan-slin", "terminal", "free"])
def test_instance_laws(name):
    inst = make_instance(name)
    report = check_instance_laws(inst, canonical_como_algebra(inst))
    assert report.ok, [r.law for r in report.failures()]


def test_syntactic_composition_checks_boundaries():
    inst = make_instance("free")
    with pytest.raises(BoundaryError):
        inst.compose(inst.generator("m"), inst.generator("m"))
    with pytest.raises(BoundaryError):
        inst.cell(inst.generator("m"), inst.identity(1))


def test_pullback_decomposition():
    f, g = o.MonotoneMap(2, 3, (0, 2)), o.MonotoneMap(1, 3, (2,))
    pieces = decompose_pullback(f, g)
    one, bang = o.identity(1), o.BANG
    assert pieces == [(one, bang), (bang, bang), (one, one)]
    assert check_pullback_decomposition(5).ok


def test_report_serialization():
    report = run_suite("terminal", bound=2)
    data = report.to_json()
    assert data["ok"] is True
    assert {"law", "verdict", "witness"} <= set(data["laws"][0])
    assert "associativity" in report.table()
