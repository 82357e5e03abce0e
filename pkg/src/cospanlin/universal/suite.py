"""The full law suite for a named instance, as run by ``cospanlin laws``."""

from __future__ import annotations

from .. import cospan as cs
from .checks import (check_compatibility, check_pullback_decomposition,
                     check_three_squares_suffice)
from .functor import functor_from_algebra, functor_from_unit
from .instances import CospanInstance, make_instance
from .laws import (LawReport, canonical_como_algebra, canonical_como_unit,
                   check_como_algebra, check_como_unit, check_frobenius_2d, check_mates)


def run_suite(name: str, bound: int = 5) -> LawReport:
    """Every law check for the canonical structure on instance ``name``.

    Checks keep running past failures so the report shows each broken law.
    """
    inst = make_instance(name)
    if isinstance(inst, CospanInstance) and inst.base is cs.OPINJ:
        unit = canonical_como_unit(inst)
        F = functor_from_unit(inst, unit)
        return (check_como_unit(inst, unit)
                .merge(check_compatibility(F, bound))
                .merge(check_three_squares_suffice(F, bound))
                .merge(check_pullback_decomposition(bound)))
    alg = canonical_como_algebra(inst)
    F = functor_from_algebra(inst, alg)
    return (check_como_algebra(inst, alg)
            .merge(check_frobenius_2d(inst, alg))
            .merge(check_mates(inst, alg))
            .merge(check_compatibility(F, bound))
            .merge(check_three_squares_suffice(F, bound)))
