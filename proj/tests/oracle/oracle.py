#!/usr/bin/env python3
"""Independent dimension oracle for the coordinate computations.

Everything here works in the polynomial ring S = Q[x0..x3] and presents each
quotient as "ambient modulo explicit relation generators", so no canonical
quotient bases, subquotient machinery or modular arithmetic are shared with
the C++ library. Ranks are exact (sparse fraction-free elimination over Z).

Usage: oracle.py [fermat|seed:<n>] ...   prints `key = value` lines.
"""
import itertools
import random
import sys
from math import comb, gcd


def monomials(d):
    if d < 0:
        return []
    out = [e for e in itertools.product(range(d + 1), repeat=4) if sum(e) == d]
    return sorted(out, reverse=True)


def add(a, b):
    return tuple(x + y for x, y in zip(a, b))


X = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]


def exact_rank(columns, nrows=None):
    """Rank of the matrix whose columns are dicts row_key -> int."""
    rows = {}
    # transpose: treat each column as a row vector (rank is the same)
    vecs = []
    for col in columns:
        v = {k: int(c) for k, c in col.items() if c != 0}
        if v:
            vecs.append(v)
    pivots = {}  # key -> reduced vector with that leading key
    order = {}
    rank = 0
    for v in vecs:
        v = dict(v)
        while v:
            lead = min(v, key=keyorder)
            if lead not in pivots:
                g = 0
                for c in v.values():
                    g = gcd(g, c)
                v = {k: c // g for k, c in v.items()}
                pivots[lead] = v
                rank += 1
                break
            p = pivots[lead]
            a, b = p[lead], v[lead]
            nv = {k: a * c for k, c in v.items()}
            for k, c in p.items():
                nv[k] = nv.get(k, 0) - b * c
                if nv[k] == 0:
                    del nv[k]
            g = 0
            for c in nv.values():
                g = gcd(g, c)
            v = {k: c // g for k, c in nv.items()} if g > 1 else nv
    return rank


def keyorder(k):
    return repr(k)


def ideal_gens(forms, d):
    """Generators of the degree-d piece of the ideal (forms), as dicts."""
    out = []
    for f in forms:
        for m in monomials(d - 4):
            out.append({add(m, e): c for e, c in f.items()})
    return out


def fermat():
    return {(4, 0, 0, 0): 1, (0, 4, 0, 0): 1, (0, 0, 4, 0): 1, (0, 0, 0, 4): 1}


def random_quartic(seed):
    rng = random.Random(seed)
    f = {}
    for e in monomials(4):
        c = rng.randint(-9, 9)
        if c:
            f[e] = c
    return f


def tag(prefix, vec):
    return {(prefix, k): c for k, c in vec.items()}


def quotient_dim(forms, d):
    return len(monomials(d)) - exact_rank(ideal_gens(forms, d))


def euler_section_dim(f, k):
    # (V1* (x) S_k) / (V1* (x) I_k + emb(S_{k-1}))
    gens = []
    for i in range(4):
        for g in ideal_gens([f], k):
            gens.append(tag(i, g))
    for m in monomials(k - 1):
        gens.append({(i, add(m, X[i])): 1 for i in range(4)})
    return 4 * len(monomials(k)) - exact_rank(gens)


def hom_m_m4(f):
    # Hom = {a in V1 (x) V1* (x) S_4 : mult(a) in R5} / (V1 (x) R4)
    cols = []
    # columns of A: basis element x_a (x) x_i^* (x) m  ->  x_i^* (x) x_a m
    for a in range(4):
        for i in range(4):
            for m in monomials(4):
                cols.append({(i, add(m, X[a])): 1})
    r5 = []
    for i in range(4):
        for g in ideal_gens([f], 5):
            r5.append(tag(i, g))
    for m in monomials(4):
        r5.append({(i, add(m, X[i])): 1 for i in range(4)})
    r4 = []
    for i in range(4):
        for g in ideal_gens([f], 4):
            r4.append(tag(i, g))
    for m in monomials(3):
        r4.append({(i, add(m, X[i])): 1 for i in range(4)})
    nullity_ab = len(cols) + len(r5) - exact_rank(cols + r5)
    nullity_b = len(r5) - exact_rank(r5)
    return nullity_ab - nullity_b - 4 * exact_rank(r4)


def v2_basis():
    return monomials(2)


def hom_f_o(forms, n):
    """dim ker(V2* (x) H0(M*(n)) -> V1* (x) V_n) over S/(forms)."""
    quad = v2_basis()
    cols = []
    # t = y^* (x) x_k (x) m, m in S_n
    for y in quad:
        for k in range(4):
            for m in monomials(n):
                col = {}
                # multiplication condition: y^* (x) x_k m  in  V2^* (x) S_{n+1}
                col[("mul", y, add(m, X[k]))] = 1
                # contraction: sum_j x_j^* (x) y^*(x_k x_j) m
                for j in range(4):
                    if add(X[k], X[j]) == y:
                        col[("psi", j, m)] = col.get(("psi", j, m), 0) + 1
                cols.append(col)
    gens = []
    for y in quad:
        for g in ideal_gens(forms, n + 1):
            gens.append({("mul", y, k): c for k, c in g.items()})
    for j in range(4):
        for g in ideal_gens(forms, n):
            gens.append({("psi", j, k): c for k, c in g.items()})
    ng = len(gens) - exact_rank(gens)
    nullity = len(cols) + len(gens) - exact_rank(cols + gens) - ng
    # N = V2^* (x) V1 (x) I_n
    return nullity - 10 * 4 * exact_rank(ideal_gens(forms, n))


def main(argv):
    targets = argv[1:] or ["fermat"]
    out = []
    for t in targets:
        if t == "fermat":
            f = fermat()
        else:
            f = random_quartic(int(t.split(":")[1]))
        p = t
        out.append(f"{p}.vxd = " + " ".join(str(quotient_dim([f], d)) for d in range(1, 11)))
        out.append(f"{p}.euler = " + " ".join(str(euler_section_dim(f, k)) for k in (0, 4, 5)))
        out.append(f"{p}.hom-m-m4 = {hom_m_m4(f)}")
        out.append(f"{p}.hom-f-o5 = {hom_f_o([f], 5)}")
        sys.stdout.write("\n".join(out[-4:]) + "\n")
        sys.stdout.flush()
    p3_5 = hom_f_o([], 5)
    p3_1 = hom_f_o([], 1)
    print(f"p3.hom-f-o5 = {p3_5}")
    print(f"p3.hom-f-o1 = {p3_1}")
    print(f"p3.difference = {p3_5 - p3_1}")


if __name__ == "__main__":
    main(sys.argv)
