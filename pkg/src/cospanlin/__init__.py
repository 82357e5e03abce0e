"""Cospans of finite ordinals and surjections, executable.

Submodules: ``ordinals`` (monotone maps, pushouts, pullbacks),
``cospan`` (the 2-category of cospans), ``freeterm`` (the term calculus),
``rewrite`` (the normalizer), ``universal`` (induced 2-functors and law
checks), ``render`` and ``cli``.
"""

from .cospan import OPINJ, SURJ, Cospan, TwoCell
from .errors import BoundaryError, ClassError, CospanLinError, LawFailure, ParseError
from .freeterm import eval_one, eval_two, parse, print_term
from .ordinals import MonotoneMap, monotone, pullback_injections, pushout_surjections
from .render import render
from .rewrite import equal_terms, normalize

__version__ = "0.1.0"

__all__ = [
    "BoundaryError", "ClassError", "Cospan", "CospanLinError", "LawFailure", "MonotoneMap",
    "OPINJ", "ParseError", "SURJ", "TwoCell", "equal_terms", "eval_one", "eval_two",
    "monotone", "normalize", "parse", "print_term", "pullback_injections",
    "pushout_surjections", "render",
]
