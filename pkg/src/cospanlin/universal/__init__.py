"""Universal properties of cospans of ordinals, as executable checks."""

from .checks import (Square, base_squares, check_compatibility, check_flipped_orientation,
                     check_functor_laws, check_identity_functor, check_instance_laws,
                     check_pullback_decomposition, check_selection_on_squares,
                     check_tensor_of_squares, check_three_squares_suffice, decompose_pullback,
                     indulges_one, indulges_two, pushout_squares)
from .functor import (InducedFunctor, functor_from_algebra, functor_from_unit,
                      induced_functor, induced_unit_functor)
from .instances import (AND_ZERO, INSTANCE_NAMES, LEFT_ZERO, RIGHT_ZERO, CodiscreteCell,
                        CospanInstance, InstanceInterface, SetModel, SyntacticInstance,
                        TerminalInstance, Word, make_instance)
from .laws import (ComoAlgebraData, ComoUnitData, LawReport, LawResult, MateSide, Verdict,
                   canonical_como_algebra, canonical_como_unit, check_como_algebra,
                   check_como_unit, check_frobenius_2d, check_mates, check_semialgebra,
                   compute_mate)
from .suite import run_suite

__all__ = [
    "AND_ZERO", "CodiscreteCell", "ComoAlgebraData", "ComoUnitData", "CospanInstance",
    "INSTANCE_NAMES", "InducedFunctor", "InstanceInterface", "LEFT_ZERO", "LawReport",
    "LawResult", "MateSide", "RIGHT_ZERO", "SetModel", "Square", "SyntacticInstance",
    "TerminalInstance", "Verdict", "Word", "base_squares", "canonical_como_algebra",
    "canonical_como_unit", "check_como_algebra", "check_como_unit", "check_compatibility",
    "check_flipped_orientation", "check_frobenius_2d", "check_functor_laws",
    "check_identity_functor", "check_instance_laws", "check_mates",
    "check_pullback_decomposition", "check_selection_on_squares", "check_semialgebra",
    "check_tensor_of_squares", "check_three_squares_suffice", "compute_mate",
    "decompose_pullback", "functor_from_algebra", "functor_from_unit", "indulges_one",
    "indulges_two", "induced_functor", "induced_unit_functor", "make_instance",
    "pushout_squares", "run_suite",
]
