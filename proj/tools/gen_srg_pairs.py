#!/usr/bin/env python3
"""Regenerates the non-isomorphic SRG pairs under data/corpus.

(26,10,3,4): first two-circulant graph found on Z13, then a
Godsil-McKay switch on a 4-set.
(28,12,6,4): triangular graph T(8) and the Chang graph obtained by
Seidel switching T(8) on a perfect matching of K8.
"""
import itertools
import pathlib
import sys

import networkx as nx
import numpy as np


def is_srg(a, params):
    n, k, lam, mu = params
    if len(a) != n or (a.sum(1) != k).any():
        return False
    eye = np.eye(n, dtype=int)
    return (a @ a == k * eye + lam * a + mu * (1 - eye - a)).all()


def local_invariant(a):
    hist = {}
    n = len(a)
    for x in range(n):
        for y in range(x + 1, n):
            common = np.nonzero(a[x] & a[y])[0]
            key = (int(a[x, y]), int(a[np.ix_(common, common)].sum() // 2))
            hist[key] = hist.get(key, 0) + 1
    return tuple(sorted(hist.items()))


def circulant(m, shifts):
    return np.array([[1 if (b - a) % m in shifts else 0 for b in range(m)] for a in range(m)])


def two_circulant_26():
    m = 13
    pairs = [(d, m - d) for d in range(1, 7)]
    for t in (2, 4, 6, 8):
        s = (10 - t) // 2
        for s0 in itertools.combinations(pairs, s):
            a0 = circulant(m, {x for p in s0 for x in p})
            for s1 in itertools.combinations(pairs, s):
                a1 = circulant(m, {x for p in s1 for x in p})
                for shifts in itertools.combinations(range(1, m), t - 1):
                    b = circulant(m, {0, *shifts})
                    a = np.block([[a0, b], [b.T, a1]])
                    if is_srg(a, (26, 10, 3, 4)):
                        return a
    raise RuntimeError("no two-circulant SRG(26,10,3,4) found")


def gm_switch(a, params, size):
    n = len(a)
    base = local_invariant(a)
    for c in itertools.combinations(range(n), size):
        c = list(c)
        counts = a[:, c].sum(1)
        if any(counts[v] not in (0, size // 2, size) for v in range(n) if v not in c):
            continue
        if len(set(a[np.ix_(c, c)].sum(1))) != 1:
            continue
        b = a.copy()
        for v in range(n):
            if v in c or counts[v] != size // 2:
                continue
            for x in c:
                b[v, x] = b[x, v] = 1 - a[v, x]
        if is_srg(b, params) and local_invariant(b) != base:
            return b
    raise RuntimeError("no Godsil-McKay switch found")


def triangular_and_chang():
    pairs = list(itertools.combinations(range(8), 2))
    n = len(pairs)
    t8 = np.array([[int(x != y and bool(set(p) & set(q))) for y, q in enumerate(pairs)] for x, p in enumerate(pairs)])
    marked = {pairs.index(e) for e in [(0, 1), (2, 3), (4, 5), (6, 7)]}
    chang = t8.copy()
    for x in range(n):
        for y in range(n):
            if x != y and (x in marked) != (y in marked):
                chang[x, y] = 1 - chang[x, y]
    return t8, chang


def write(out_dir, stem, a):
    g6 = nx.to_graph6_bytes(nx.from_numpy_array(a), header=False).decode().strip()
    (out_dir / f"{stem}.g6").write_text(g6 + "\n")


def main():
    out_dir = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "data/corpus")
    out_dir.mkdir(parents=True, exist_ok=True)
    p26 = two_circulant_26()
    q26 = gm_switch(p26, (26, 10, 3, 4), 4)
    t8, chang = triangular_and_chang()
    for stem, a, params in [("srg26-a", p26, (26, 10, 3, 4)), ("srg26-b", q26, (26, 10, 3, 4)),
                            ("srg28-t8", t8, (28, 12, 6, 4)), ("srg28-chang", chang, (28, 12, 6, 4))]:
        assert is_srg(a, params), stem
        write(out_dir, stem, a)
    assert local_invariant(p26) != local_invariant(q26)
    assert local_invariant(t8) != local_invariant(chang)


if __name__ == "__main__":
    main()
