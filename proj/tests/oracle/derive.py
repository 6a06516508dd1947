# Copyright 2026 The insproc Authors
# SPDX-License-Identifier: Apache-2.0
"""Independent oracle for the values frozen into the C++ tests.

Plain permutation enumeration over fractions.Fraction; shares no code with the
library. Run: python3 tests/oracle/derive.py
"""
from fractions import Fraction
from itertools import permutations, product
from functools import lru_cache


def complete(q, w=1):
    return {(i, j): Fraction(w) for i in range(q) for j in range(q) if i != j}


def multipartite(q, r, w=1):
    n = q * r
    return {(i, j): Fraction(w) for i in range(n) for j in range(n) if i % q != j % q}


def weight(g, i, j):
    return g.get((i, j), Fraction(0))


def building(g, x, order):
    present = []
    total = Fraction(1)
    for p in order:
        left = max((s for s in present if s < p), default=None)
        right = min((s for s in present if s > p), default=None)
        if left is not None:
            total *= weight(g, x[left], x[p])
        if right is not None:
            total *= weight(g, x[p], x[right])
        present.append(p)
    return total


def B(g, x):
    x = tuple(x)
    return _B(tuple(sorted(g.items())), x)


@lru_cache(maxsize=None)
def _B(items, x):
    g = dict(items)
    return sum((building(g, x, o) for o in permutations(range(len(x)))), Fraction(0))


def word_weight(g, x):
    w = Fraction(1)
    for a, b in zip(x, x[1:]):
        w *= weight(g, a, b)
    return w


def constants(g, nv, N):
    """C_n for n < N from Σ_v B(xv) = C_n B(x), or the first failure."""
    out = []
    for n in range(1, N):
        ratios = set()
        for x in product(range(nv), repeat=n):
            bx = B(g, x)
            if bx == 0:
                continue
            ratios.add(sum(B(g, x + (v,)) for v in range(nv)) / bx)
            ratios.add(sum(B(g, (v,) + x) for v in range(nv)) / bx)
        if len(ratios) != 1:
            return out, n
        out.append(ratios.pop())
    return out, None


def kdep_lhs(g, nv, x, y, k):
    return sum(B(g, tuple(x) + w + tuple(y)) for w in product(range(nv), repeat=k))


def marginal(g, nv, n):
    table = {x: B(g, x) for x in product(range(nv), repeat=n)}
    z = sum(table.values())
    return {x: b / z for x, b in table.items() if b}, z


def pair_tv(g, nv, n, i, j):
    law, _ = marginal(g, nv, n)
    p1, _ = marginal(g, nv, 1)
    tv = Fraction(0)
    for a in range(nv):
        for b in range(nv):
            joint = sum(p for x, p in law.items() if x[i] == a and x[j] == b)
            tv += abs(joint - p1.get((a,), 0) * p1.get((b,), 0))
    return tv / 2


def t_n(g, nv, i, j, n):
    hi, lo = (n + 1) // 2, n // 2
    return sum(weight(g, i, v) ** hi * weight(g, j, v) ** lo for v in range(nv))


def btilde_direct(g, x):
    ww = word_weight(g, x)
    return B(g, x) / ww


def insertion_tv(g, nv, n):
    """Weighted insertion: (location, v) with probability proportional to the new edges' product."""
    law = {(): Fraction(1)}
    for _ in range(n):
        nxt = {}
        for x, p in law.items():
            choices = []
            for loc in range(len(x) + 1):
                for v in range(nv):
                    w = Fraction(1)
                    if loc > 0:
                        w *= weight(g, x[loc - 1], v)
                    if loc < len(x):
                        w *= weight(g, v, x[loc])
                    if w:
                        choices.append((x[:loc] + (v,) + x[loc:], w))
            total = sum(w for _, w in choices)
            for y, w in choices:
                nxt[y] = nxt.get(y, Fraction(0)) + p * w / total
        law = nxt
    target, _ = marginal(g, nv, n)
    keys = set(law) | set(target)
    return sum(abs(law.get(x, 0) - target.get(x, 0)) for x in keys) / 2


def main():
    k3, k4 = complete(3), complete(4)
    print("K3 constants N=5:", constants(k3, 3, 5))
    print("K4 constants N=5:", constants(k4, 4, 5))
    print("K2 constants N=5:", constants(complete(2), 2, 5))
    print("2K3 constants N=4:", constants(complete(3, 2), 3, 4))
    print("K3 k=1 lhs (1),(1):", kdep_lhs(k3, 3, (0,), (0,), 1), " (1),(2):", kdep_lhs(k3, 3, (0,), (1,), 1))
    print("K4 k=1 lhs (1),(1):", kdep_lhs(k4, 4, (0,), (0,), 1), " (1),(2):", kdep_lhs(k4, 4, (0,), (1,), 1))
    print("K3 k=2 lhs (1),(1):", kdep_lhs(k3, 3, (0,), (0,), 2), " (1),(2):", kdep_lhs(k3, 3, (0,), (1,), 2))
    m3, z3 = marginal(k3, 3, 3)
    print("K3 n=3: Z =", z3, " P(121) =", m3[(0, 1, 0)], " P(123) =", m3[(0, 1, 2)])
    print("K4 B(1213) =", B(k4, (0, 1, 0, 2)))
    print("K4 TV(1,3|P3) =", pair_tv(k4, 4, 3, 0, 2), " K3 TV(1,4|P4) =", pair_tv(k3, 3, 4, 0, 3),
          " K3 TV(1,3|P3) =", pair_tv(k3, 3, 3, 0, 2))
    print("T_1(K4;1,2) =", t_n(k4, 4, 0, 1, 1), " T_2(K3;1,2) =", t_n(k3, 3, 0, 1, 2))
    k2w = complete(3, 2)
    lhs = sum(btilde_direct(k2w, (0, 1, 0, v)) / btilde_direct(k2w, (0, 1, 0))
              - btilde_direct(k2w, (2, 1, 0, v)) / btilde_direct(k2w, (2, 1, 0))
              for v in range(3) if weight(k2w, 0, v))
    print("unif_defect(3,2) direct sum over v ~ 1 =", lhs)
    kite = {}
    for a, b in [(0, 1), (0, 2), (1, 2), (0, 3)]:
        kite[(a, b)] = kite[(b, a)] = Fraction(1)
    # kite (a,b,c,d) = (1,2,3,4): a=0,b=1,c=2,d=3
    a, b, c, d = 0, 1, 2, 3
    terms = [(btilde_direct(kite, (b, a, b, v)) - btilde_direct(kite, (d, a, b, v))) * weight(kite, b, v)
             if weight(kite, b, v) else Fraction(0) for v in range(4)]
    print("kite lhs =", sum(terms), " term at c =", terms[c],
          " bracket =", btilde_direct(kite, (b, a, b)) - btilde_direct(kite, (d, a, b)))
    print("kite insertion TV n=1..3:", [insertion_tv(kite, 4, n) for n in (1, 2, 3)],
          " K3 n=4:", insertion_tv(k3, 3, 4))
    # de Bruijn graph of proper 3-colourings: vertices (a,b), a != b
    tuples = [(p, s) for p in range(3) for s in range(3) if p != s]
    db = {(i, j): Fraction(1) for i, s in enumerate(tuples) for j, t in enumerate(tuples) if s[1] == t[0]}
    print("de Bruijn colourings constants N=5:", constants(db, 6, 5))
    k222 = multipartite(3, 2)
    print("K222 k=2 lhs (1),(1):", kdep_lhs(k222, 6, (0,), (0,), 2), " vs K3 x 4:", 4 * kdep_lhs(k3, 3, (0,), (0,), 2))


if __name__ == "__main__":
    main()
