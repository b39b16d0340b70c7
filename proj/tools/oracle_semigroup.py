#!/usr/bin/env python3
"""Brute-force numerical semigroup oracle.

Computes Apery sets, Frobenius numbers, and minimal binomial presentations of
semigroup rings by exhaustive factorization search, independently of the C++
implementation. Values printed here are frozen into the C++ tests.

Presentation algorithm: for every value v of the semigroup up to a proved
bound, build the graph on the set F(v) of factorizations (exponent vectors u
with sum(u_i * n_i) = v), joining two factorizations when their supports
intersect. Each v whose graph is disconnected contributes relations linking
the lexicographically least member of each component to the least component's
representative.

Completeness bound: F(v) is connected for every v >= F + 1 + n_min + n_max,
where F is the Frobenius number of the gcd-normalized semigroup. Proof: all
factorizations using the smallest generator n_min are pairwise adjacent. Given
a factorization u with some u_i > 0, v - n_i - n_min >= F + 1 lies in S, so
picking a factorization y of it gives w = y + e_i + e_min, adjacent to u
(shared index i) and to every factorization using n_min. Hence the whole graph
is within distance two of one clique. Values above the bound therefore
contribute no relations.

The oracle additionally verifies that the emitted relations generate: for
every v up to the bound, the rewrite graph on F(v) (edges a <-> a - p + q for
emitted relation pairs (p, q) with a >= p) must be connected. It also checks
minimality by dropping each relation in turn.

Run: python3 tools/oracle_semigroup.py
"""

import math
from itertools import combinations


def normalize(gens):
    g = 0
    for x in gens:
        g = math.gcd(g, x)
    return [x // g for x in gens], g


def apery(gens, a):
    """Least element of <gens> in each residue class mod a (gens coprime)."""
    INF = None
    dist = [INF] * a
    dist[0] = 0
    # Bellman-Ford style relaxation; values are bounded by a * max(gens).
    changed = True
    while changed:
        changed = False
        for r in range(a):
            if dist[r] is None:
                continue
            for n in gens:
                v = dist[r] + n
                rr = v % a
                if dist[rr] is None or v < dist[rr]:
                    dist[rr] = v
                    changed = True
    return dist


def frobenius(gens):
    a = min(gens)
    ap = apery(gens, a)
    return max(ap) - a


def member(gens, v, _cache={}):
    key = (tuple(gens), v)
    if key in _cache:
        return _cache[key]
    if v == 0:
        r = True
    elif v < 0:
        r = False
    else:
        r = any(member(gens, v - n) for n in gens)
    _cache[key] = r
    return r


def factorizations(gens, v):
    l = len(gens)
    out = []

    def rec(i, rem, cur):
        if i == l - 1:
            if rem % gens[i] == 0:
                out.append(tuple(cur + [rem // gens[i]]))
            return
        for k in range(rem // gens[i] + 1):
            rec(i + 1, rem - k * gens[i], cur + [k])

    if v == 0:
        return [tuple([0] * l)]
    if v < 0:
        return []
    rec(0, v, [])
    return sorted(out)


def support_components(facts):
    parent = list(range(len(facts)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        parent[find(i)] = find(j)

    for i, j in combinations(range(len(facts)), 2):
        if any(a > 0 and b > 0 for a, b in zip(facts[i], facts[j])):
            union(i, j)
    comps = {}
    for i in range(len(facts)):
        comps.setdefault(find(i), []).append(facts[i])
    return sorted([sorted(c) for c in comps.values()], key=lambda c: c[0])


def presentation(gens_raw):
    """Relations as pairs of exponent vectors (p, q), p from the least
    component of F(v); values are reported in the raw (unscaled) semigroup."""
    gens, g = normalize(gens_raw)
    F = frobenius(gens)
    bound = F + 1 + min(gens) + max(gens)
    rels = []
    betti_values = []
    for v in range(1, bound + 1):
        if not member(gens, v):
            continue
        fs = factorizations(gens, v)
        if len(fs) < 2:
            continue
        comps = support_components(fs)
        if len(comps) > 1:
            betti_values.append(v * g)
            reps = [c[0] for c in comps]
            for r in reps[1:]:
                rels.append((v * g, reps[0], r))
    return rels, bound * g, betti_values


def rewrite_connected(gens_raw, rels, bound_raw):
    """True iff the rewrite graph on F(v) is connected for every v <= bound."""
    gens, g = normalize(gens_raw)
    pairs = []
    for _, p, q in rels:
        pairs.append((p, q))
        pairs.append((q, p))
    for v in range(1, bound_raw // g + 1):
        fs = factorizations(gens, v)
        if len(fs) < 2:
            continue
        idx = {f: i for i, f in enumerate(fs)}
        parent = list(range(len(fs)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for f in fs:
            for p, q in pairs:
                if all(a >= b for a, b in zip(f, p)):
                    h = tuple(a - b + c for a, b, c in zip(f, p, q))
                    pi, hi = find(idx[f]), find(idx[h])
                    if pi != hi:
                        parent[pi] = hi
        roots = {find(i) for i in range(len(fs))}
        if len(roots) > 1:
            return False, v * g
    return True, None


def binom_str(p, q):
    def mono(u):
        parts = []
        for i, e in enumerate(u):
            if e == 1:
                parts.append("x%d" % (i + 1))
            elif e > 1:
                parts.append("x%d^%d" % (i + 1, e))
        return "*".join(parts) if parts else "1"

    return "%s - %s" % (mono(p), mono(q))


def report(gens):
    print("== semigroup <%s> ==" % ", ".join(map(str, gens)))
    norm, g = normalize(gens)
    print("gcd: %d  normalized: <%s>" % (g, ", ".join(map(str, norm))))
    if g == 1:
        a = min(gens)
        ap = apery(gens, a)
        print("apery(%d): %s" % (a, sorted(ap)))
        print("frobenius: %d" % frobenius(gens))
    else:
        print("apery/frobenius: non-coprime generators (error per contract)")
        print("normalized frobenius: %d" % frobenius(norm))
    rels, bound, betti = presentation(gens)
    print("search bound (raw values): %d" % bound)
    print("betti values: %s" % betti)
    print("relations (%d):" % len(rels))
    for v, p, q in rels:
        wp = sum(a * b for a, b in zip(p, gens))
        wq = sum(a * b for a, b in zip(q, gens))
        assert wp == wq == v, "relation not weight-homogeneous"
        print("  v=%d  %s  [%s | %s]" % (v, binom_str(p, q), p, q))
    ok, bad = rewrite_connected(gens, rels, bound)
    print("generates (rewrite graph connected up to bound): %s" % ok)
    assert ok, "presentation incomplete at v=%s" % bad
    for k in range(len(rels)):
        sub = rels[:k] + rels[k + 1:]
        ok, _ = rewrite_connected(gens, sub, bound)
        assert not ok, "relation %d is redundant" % k
    print("minimal (each relation necessary): True")
    print()


if __name__ == "__main__":
    for gens in ([2, 3], [6, 7, 11, 15], [6, 8, 10, 13], [6, 10, 14, 18]):
        report(gens)
