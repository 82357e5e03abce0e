"""Pushouts of monotone surjections, computed by joining kernel partitions."""

from cospanlin import ordinals as o

f = o.monotone([0, 0, 1, 2])
g = o.monotone([0, 1, 1, 2])
p0, p1 = o.pushout_surjections(f, g)
print("f  =", f.images, " g  =", g.images)
print("p0 =", p0.images, " p1 =", p1.images, " apex", p0.codomain)

# the diagonal agrees whichever way round the square is walked
print("p0 . f =", o.compose(f, p0).images)
print("p1 . g =", o.compose(g, p1).images)

# pullbacks of injections intersect images
a = o.monotone([0, 2], codomain=3)
b = o.monotone([2], codomain=3)
q0, q1 = o.pullback_injections(a, b)
print("pullback of", a.images, "and", b.images, "->", q0.images, q1.images)
