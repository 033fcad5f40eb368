"""Pure-Python kernels. Reference semantics for ``_speedups.pyx``.

All kernels speak 0-indexed vertices. An edge set is given as parallel lists
``eu``/``ev`` (``eu[k] < ev[k]``) and ``compat[k]``, the bitmask of edge
indices cycle-compatible with edge ``k``.

Pattern codes: 0 = separating but neither pattern, 1 = type I, 2 = type II.
"""
from __future__ import annotations

from itertools import product


def search(d, eu, ev, compat, pattern):
    """Depth-first sign assignment in vertex order, values tried ``+1, 0, -1``.

    The first nonzero weight is forced to ``+1``. Returns the first valid
    weighting met, which is the greatest one in lexicographic order, or None.
    """
    lower = [[] for _ in range(d)]
    for k in range(len(eu)):
        lower[ev[k]].append((eu[k], k))
    values = (1, -1) if pattern == 1 else (1, 0, -1)
    type2 = pattern == 2
    w = [0] * d

    def rec(v, pos, neg, nonzero, haszero):
        if v == d:
            return bool(pos and neg and (haszero or not type2))
        for x in values:
            if x == -1 and not nonzero:
                continue
            p, n = pos, neg
            ok = True
            for u, k in lower[v]:
                wu = w[u]
                if type2 and x and wu == x:
                    ok = False
                    break
                s = wu + x
                if s > 0:
                    if n & ~compat[k]:
                        ok = False
                        break
                    p |= 1 << k
                elif s < 0:
                    if p & ~compat[k]:
                        ok = False
                        break
                    n |= 1 << k
            if not ok:
                continue
            w[v] = x
            if rec(v + 1, p, n, nonzero or x != 0, haszero or x == 0):
                return True
        w[v] = 0
        return False

    return tuple(w) if rec(0, 0, 0, False, False) else None


def classify(d, eu, ev, compat, w):
    """Pattern code of ``w`` if it is separating, else -1."""
    pos = []
    neg = 0
    m = len(eu)
    for k in range(m):
        s = w[eu[k]] + w[ev[k]]
        if s > 0:
            pos.append(k)
        elif s < 0:
            neg |= 1 << k
    if not pos or not neg:
        return -1
    for k in pos:
        if neg & ~compat[k]:
            return -1
    if 0 not in w:
        return 1
    for k in range(m):
        a = w[eu[k]]
        if a and a == w[ev[k]]:
            return 0
    return 2


def brute_force(d, eu, ev, compat):
    """Every separating weighting in ``{-1,0,1}^d``, in lexicographic order."""
    out = []
    for w in product((-1, 0, 1), repeat=d):
        code = classify(d, eu, ev, compat, w)
        if code >= 0:
            out.append((w, code))
    return out


def connected_masks(n, lo, hi):
    """Masks in ``[lo, hi)`` whose graph on ``n`` vertices is connected."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    full = (1 << n) - 1
    out = []
    for mask in range(lo, hi):
        adj = [0] * n
        k = 0
        bits = mask
        while bits:
            if bits & 1:
                i, j = pairs[k]
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bits >>= 1
            k += 1
        seen = frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= frontier
        if seen == full:
            out.append(mask)
    return out
