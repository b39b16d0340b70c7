#!/usr/bin/env python3
"""Oracle for the linear-matroid / Stanley-Reisner / substitution fixture.

Facets of the column matroid of an exact rational matrix (maximal independent
column subsets), minimal non-faces, the squarefree monomial ideal they span,
and the expansion of that ideal under the explicit linear substitution used by
the five-variable fixture. Run: python3 tools/oracle_matroid.py
"""

from fractions import Fraction
from itertools import combinations


def det2(c1, c2):
    return c1[0] * c2[1] - c1[1] * c2[0]


def facets_of(X):
    cols = list(zip(*X))
    r = 2
    out = []
    for sub in combinations(range(len(cols)), r):
        if det2(cols[sub[0]], cols[sub[1]]) != 0:
            out.append(set(sub))
    return out


def minimal_nonfaces(facets, n):
    faces = set()
    for f in facets:
        fs = frozenset(f)
        for k in range(len(fs) + 1):
            for sub in combinations(sorted(fs), k):
                faces.add(frozenset(sub))
    nonfaces = []
    for k in range(1, n + 1):
        for sub in combinations(range(n), k):
            s = frozenset(sub)
            if s in faces:
                continue
            if all(frozenset(t) in faces for r in range(len(s)) for t in combinations(sorted(s), r)):
                nonfaces.append(sorted(s))
    return sorted(nonfaces)


def poly_str(p):
    terms = []
    for mono in sorted(p):
        c = p[mono]
        body = "*".join(
            "y%d" % (i + 1) if e == 1 else "y%d^%d" % (i + 1, e)
            for i, e in enumerate(mono)
            if e
        )
        terms.append(("+" if c > 0 else "-") + (str(abs(c)) + "*" if abs(c) != 1 else "") + body)
    s = " ".join(terms)
    return s[1:] if s.startswith("+") else s


def pmul(p, q):
    out = {}
    for a, ca in p.items():
        for b, cb in q.items():
            k = tuple(x + y for x, y in zip(a, b))
            nv = out.get(k, Fraction(0)) + ca * cb
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
    return out


if __name__ == "__main__":
    X = [[1, 0, 2, 0, 3], [0, 1, 0, 2, 0]]
    facets = facets_of(X)
    print("matrix:", X)
    print("facets (1-based):", sorted(sorted(i + 1 for i in f) for f in facets))
    assert sorted(sorted(i + 1 for i in f) for f in facets) == [
        [1, 2], [1, 4], [2, 3], [2, 5], [3, 4], [4, 5],
    ]
    nf = minimal_nonfaces(facets, 5)
    print("minimal non-faces (1-based):", [[i + 1 for i in s] for s in nf])
    assert [sorted(i + 1 for i in s) for s in nf] == [[1, 3], [1, 5], [2, 4], [3, 5]]
    print("Stanley-Reisner ideal: (x1*x3, x1*x5, x2*x4, x3*x5)")

    # substitution x1 -> y2-y3-y5, x2 -> y1-y4, x3 -> y3, x4 -> y4, x5 -> y5
    def Y(i):
        return {tuple(1 if j == i else 0 for j in range(5)): Fraction(1)}

    def diff(a, b):
        out = dict(a)
        for k, c in b.items():
            nv = out.get(k, Fraction(0)) - c
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
        return out

    x1 = diff(diff(Y(1), Y(2)), Y(4))
    x2 = diff(Y(0), Y(3))
    x3, x4, x5 = Y(2), Y(3), Y(4)
    images = {
        "x1*x3": pmul(x1, x3),
        "x1*x5": pmul(x1, x5),
        "x2*x4": pmul(x2, x4),
        "x3*x5": pmul(x3, x5),
    }
    print("substituted generators:")
    for k in ("x1*x3", "x1*x5", "x2*x4", "x3*x5"):
        print("  %s -> %s" % (k, poly_str(images[k])))

    # change-of-coordinates matrix u = C x for the substitution inverse
    C = [
        [0, 1, 0, 1, 0],
        [1, 0, 1, 0, 1],
        [0, 0, 1, 0, 0],
        [0, 0, 0, 1, 0],
        [0, 0, 0, 0, 1],
    ]
    # verify: with u_i = sum_j C[i][j] x_j, the substitution above is x = C^{-1} u
    # i.e. x1 = u2-u3-u5, x2 = u1-u4, x3 = u3, x4 = u4, x5 = u5.
    import fractions

    n = 5
    aug = [[Fraction(C[i][j]) for j in range(n)] + [Fraction(1 if j == i else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(i for i in range(col, n) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                c = aug[i][col]
                aug[i] = [a - c * b for a, b in zip(aug[i], aug[col])]
    Cinv = [row[n:] for row in aug]
    expect = [
        [0, 1, -1, 0, -1],
        [1, 0, 0, -1, 0],
        [0, 0, 1, 0, 0],
        [0, 0, 0, 1, 0],
        [0, 0, 0, 0, 1],
    ]
    assert Cinv == [[Fraction(v) for v in row] for row in expect]
    print("inverse substitution matrix verified:", expect)
    print("all matroid oracle assertions passed")
