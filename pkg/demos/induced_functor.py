"""The functor induced by the canonical algebra, and two broken instances."""

from cospanlin import cospan as cs
from cospanlin import ordinals as o
from cospanlin.universal import (canonical_como_algebra, check_identity_functor,
                                 functor_from_algebra, make_instance, run_suite)

inst = make_instance("cospan-slin")
F = functor_from_algebra(inst, canonical_como_algebra(inst))
f = cs.y_embed(cs.SURJ, o.monotone([0, 0, 1]))
print("F(3) =", F(3))
print("F fixes y(f):", F(f) == f)
print("identity up to bound 4:", check_identity_functor(F, 4, 3).ok)

for name in ("free-no-frobenius", "free-no-separable"):
    report = run_suite(name, bound=3)
    print()
    print(name)
    print(report.table())
