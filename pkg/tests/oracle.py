"""Literal brute-force construction, kept independent of the library's builders.

Vertices are ("V", g, vertex) and ("E", h, frozenset edge); every unordered
pair is tested against the three adjacency rules as written.
"""

from itertools import combinations


def brute_force_edges(n, edges, x, y, z):
    """Edge set (frozensets of label pairs) of the generalised construction.

    ``x``, ``y`` are sign strings, ``z`` a list of row strings.
    """
    base = {frozenset(e) for e in edges}
    verts = [("V", g, a) for g in range(1, len(x) + 1) for a in range(1, n + 1)]
    verts += [("E", h, e) for h in range(1, len(y) + 1) for e in base]
    out = set()
    for u, v in combinations(verts, 2):
        if u[0] == "E" and v[0] == "V":
            u, v = v, u
        if u[0] == "V" and v[0] == "V":
            if u[1] != v[1]:
                continue
            rel, sign = frozenset((u[2], v[2])) in base, x[u[1] - 1]
        elif u[0] == "E" and v[0] == "E":
            if u[1] != v[1]:
                continue
            rel, sign = len(u[2] & v[2]) == 1, y[u[1] - 1]
        else:
            rel, sign = u[2] in v[2], z[u[1] - 1][v[1] - 1]
        if rel == (sign == "+"):
            out.add(frozenset((u, v)))
    return verts, out


def brute_force_m1(n, edges, x, y, z):
    verts, out = brute_force_edges(n, edges, x, y, z)
    deg = dict.fromkeys(verts, 0)
    for e in out:
        for v in e:
            deg[v] += 1
    return sum(d * d for d in deg.values())
