"""Brute-force reference implementations used only by the tests."""

from itertools import combinations, product


def brute_colorable(vertices, edges, k):
    """Whether some map V -> Z_k satisfies c(u) != s*c(v) on every edge."""
    vertices = list(vertices)
    for values in product(range(k), repeat=len(vertices)):
        c = dict(zip(vertices, values))
        if all(c[u] != (int(s) * c[v]) % k for u, v, s in edges):
            return True
    return False


def brute_chromatic(g):
    if g.order() == 0:
        return 0
    k = 1
    while not brute_colorable(g.vertices, list(g.edges()), k):
        k += 1
    return k


def brute_triples(g):
    """Every (x, y, z) with its codes, straight from the definition."""
    out = {}
    for x, y, z in ((a, b, c) for a, b, c in product(g.vertices, repeat=3) if len({a, b, c}) == 3):
        codes = []
        for a, b in product((1, -1), repeat=2):
            if g.has_edge(x, y, a) or g.has_edge(x, z, b):
                continue
            if g.has_edge(y, z, a * b):
                codes.append((a, b, a * b))
        if codes:
            out[(x, y, z)] = sorted(codes)
    return out


def triangles(vertices):
    return combinations(vertices, 3)
