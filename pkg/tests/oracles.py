"""Brute-force reference implementations used by the tests.

Nothing here imports the library's pushout, pullback or factorization
code: maps are plain tuples, and universal properties are checked by
searching every candidate.
"""

from __future__ import annotations

import itertools
from math import comb


def monotone_tuples(m, n):
    return list(itertools.combinations_with_replacement(range(n), m))


def surjective_tuples(m, n):
    return [t for t in monotone_tuples(m, n) if len(set(t)) == n]


def injective_tuples(m, n):
    return list(itertools.combinations(range(n), m))


def all_surjections_from(m):
    return [(n, t) for n in range(m + 1) for t in surjective_tuples(m, n)]


def all_injections_into(n):
    return [(m, t) for m in range(n + 1) for t in injective_tuples(m, n)]


def after(f, g):
    """Diagrammatic composite of tuples: first ``f`` then ``g``."""
    return tuple(g[k] for k in f)


def brute_pushout(f, a, g, b):
    """Minimal cocone of the span ``a <-f- m -g-> b`` of surjections.

    Searches every cocone of surjections and returns the one through which
    every other factors uniquely.
    """
    cocones = []
    for q in range(max(a, b) + 1):
        for p0 in surjective_tuples(a, q):
            for p1 in surjective_tuples(b, q):
                if after(f, p0) == after(g, p1):
                    cocones.append((q, p0, p1))
    initial = []
    for q, p0, p1 in cocones:
        ok = True
        for r, c0, c1 in cocones:
            mediators = [u for u in monotone_tuples(q, r)
                         if after(p0, u) == c0 and after(p1, u) == c1]
            if len(mediators) != 1:
                ok = False
                break
        if ok:
            initial.append((q, p0, p1))
    assert len(initial) == 1, initial
    return initial[0]


def closure_pushout(f, g):
    """Pushout by the transitive closure of ``i ~ j`` when ``f`` or ``g``
    identifies them; a second, independent oracle."""
    m = len(f)
    parent = list(range(m))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in itertools.combinations(range(m), 2):
        if f[i] == f[j] or g[i] == g[j]:
            parent[find(i)] = find(j)
    roots = []
    for i in range(m):
        r = find(i)
        if r not in roots:
            roots.append(r)
    diag = tuple(roots.index(find(i)) for i in range(m))
    p0 = [None] * (max(f) + 1 if f else 0)
    p1 = [None] * (max(g) + 1 if g else 0)
    for i in range(m):
        p0[f[i]] = diag[i]
        p1[g[i]] = diag[i]
    return len(roots), tuple(p0), tuple(p1)


def brute_pullback(f, a, g, b, n):
    """Maximal cone of the cospan ``a -f-> n <-g- b`` of injections."""
    cones = []
    for p in range(min(a, b) + 1):
        for q0 in injective_tuples(p, a):
            for q1 in injective_tuples(p, b):
                if after(q0, f) == after(q1, g):
                    cones.append((p, q0, q1))
    terminal = []
    for p, q0, q1 in cones:
        ok = True
        for r, c0, c1 in cones:
            mediators = [u for u in monotone_tuples(r, p)
                         if after(u, q0) == c0 and after(u, q1) == c1]
            if len(mediators) != 1:
                ok = False
                break
        if ok:
            terminal.append((p, q0, q1))
    assert len(terminal) == 1, terminal
    return terminal[0]


def recompose_merges(layers, start):
    """Compose ``id_a + nabla + id_b`` layers given as ``(a, b)`` pairs."""
    images = tuple(range(start))
    for a, b in layers:
        layer = tuple(range(a + 1)) + tuple(range(a, a + b + 1))
        images = after(images, layer)
    return images


def commuting_apex_maps(f_left, f_right, f_apex, g_left, g_right, g_apex):
    """Every monotone ``u`` on apexes with ``f_left;u = g_left`` and ``f_right;u = g_right``."""
    return [u for u in monotone_tuples(f_apex, g_apex)
            if after(f_left, u) == g_left and after(f_right, u) == g_right]


def surjection_count(m, n):
    return comb(m - 1, n - 1)
