"""Normalizing Frobenius terms and reading off the cospan they denote."""

from cospanlin import normalize, parse
from cospanlin.rewrite import read_off

for text in ["d ; m",
             "(d + id:1) ; (id:1 + m)",
             "d + d ; id:1 + m + id:1 ; m + id:1 ; d + id:1 ; id:1 + m"]:
    normal, trace = normalize(parse(text))
    print(text)
    print("  normal:", normal)
    print("  steps: ", trace.rules)
    print("  cospan:", read_off(normal).to_compact())
