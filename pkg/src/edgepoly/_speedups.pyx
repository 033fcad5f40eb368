# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contracts as ``edgepoly._purepy``."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport calloc, free


cdef struct Ctx:
    int d
    int m
    int pattern
    unsigned char* compat
    int* low_start
    int* low_u
    int* low_e
    signed char* w
    int* pos
    int* neg
    int npos
    int nneg


cdef unsigned char* _compat_matrix(list compat, int m) except NULL:
    cdef unsigned char* mat = <unsigned char*> calloc(m * m + 1, 1)
    cdef int a, b
    if mat == NULL:
        raise MemoryError()
    for a in range(m):
        row = compat[a]
        for b in range(m):
            if (row >> b) & 1:
                mat[a * m + b] = 1
    return mat


cdef bint _rec(Ctx* c, int v, bint nonzero, bint haszero) noexcept nogil:
    cdef signed char vals[3]
    cdef int nvals, t, i, j, k, u, s, save_p, save_n
    cdef signed char x, wu
    cdef bint ok
    if v == c.d:
        return c.npos > 0 and c.nneg > 0 and (haszero or c.pattern == 1)
    if c.pattern == 1:
        vals[0] = 1
        vals[1] = -1
        nvals = 2
    else:
        vals[0] = 1
        vals[1] = 0
        vals[2] = -1
        nvals = 3
    for t in range(nvals):
        x = vals[t]
        if x == -1 and not nonzero:
            continue
        save_p = c.npos
        save_n = c.nneg
        ok = True
        for i in range(c.low_start[v], c.low_start[v + 1]):
            u = c.low_u[i]
            k = c.low_e[i]
            wu = c.w[u]
            if c.pattern == 2 and x != 0 and wu == x:
                ok = False
                break
            s = wu + x
            if s > 0:
                for j in range(c.nneg):
                    if not c.compat[k * c.m + c.neg[j]]:
                        ok = False
                        break
                if not ok:
                    break
                c.pos[c.npos] = k
                c.npos += 1
            elif s < 0:
                for j in range(c.npos):
                    if not c.compat[k * c.m + c.pos[j]]:
                        ok = False
                        break
                if not ok:
                    break
                c.neg[c.nneg] = k
                c.nneg += 1
        if ok:
            c.w[v] = x
            if _rec(c, v + 1, nonzero or x != 0, haszero or x == 0):
                return True
        c.npos = save_p
        c.nneg = save_n
    c.w[v] = 0
    return False


def search(int d, eu, ev, list compat, int pattern):
    cdef int m = len(eu)
    cdef Ctx c
    cdef int k, v, fill
    cdef bint found
    c.d = d
    c.m = m
    c.pattern = pattern
    c.npos = 0
    c.nneg = 0
    c.compat = _compat_matrix(compat, m)
    c.low_start = <int*> calloc(d + 2, sizeof(int))
    c.low_u = <int*> calloc(m + 1, sizeof(int))
    c.low_e = <int*> calloc(m + 1, sizeof(int))
    c.w = <signed char*> calloc(d + 1, 1)
    c.pos = <int*> calloc(m + 1, sizeof(int))
    c.neg = <int*> calloc(m + 1, sizeof(int))
    try:
        if not (c.low_start and c.low_u and c.low_e and c.w and c.pos and c.neg):
            raise MemoryError()
        # CSR of (lower neighbor, edge id) grouped by the larger endpoint
        for k in range(m):
            c.low_start[<int> ev[k] + 1] += 1
        for v in range(d):
            c.low_start[v + 1] += c.low_start[v]
        for v in range(d):
            fill = c.low_start[v]
            for k in range(m):
                if ev[k] == v:
                    c.low_u[fill] = eu[k]
                    c.low_e[fill] = k
                    fill += 1
        with nogil:
            found = _rec(&c, 0, False, False)
        if not found:
            return None
        return tuple([c.w[v] for v in range(d)])
    finally:
        free(c.compat)
        free(c.low_start)
        free(c.low_u)
        free(c.low_e)
        free(c.w)
        free(c.pos)
        free(c.neg)


cdef int _classify(int d, int m, int* eu, int* ev, unsigned char* compat,
                   signed char* w, int* pos, int* neg) noexcept nogil:
    cdef int k, a, b, s, np = 0, nn = 0
    cdef bint haszero = False
    for k in range(m):
        s = w[eu[k]] + w[ev[k]]
        if s > 0:
            pos[np] = k
            np += 1
        elif s < 0:
            neg[nn] = k
            nn += 1
    if np == 0 or nn == 0:
        return -1
    for a in range(np):
        for b in range(nn):
            if not compat[pos[a] * m + neg[b]]:
                return -1
    for k in range(d):
        if w[k] == 0:
            haszero = True
            break
    if not haszero:
        return 1
    for k in range(m):
        if w[eu[k]] != 0 and w[eu[k]] == w[ev[k]]:
            return 0
    return 2


def classify(int d, eu, ev, list compat, w):
    cdef int m = len(eu)
    cdef int k
    cdef int code
    cdef unsigned char* mat = _compat_matrix(compat, m)
    cdef int* ceu = <int*> calloc(m + 1, sizeof(int))
    cdef int* cev = <int*> calloc(m + 1, sizeof(int))
    cdef int* pos = <int*> calloc(m + 1, sizeof(int))
    cdef int* neg = <int*> calloc(m + 1, sizeof(int))
    cdef signed char* cw = <signed char*> calloc(d + 1, 1)
    try:
        if not (ceu and cev and pos and neg and cw):
            raise MemoryError()
        for k in range(m):
            ceu[k] = eu[k]
            cev[k] = ev[k]
        for k in range(d):
            cw[k] = w[k]
        code = _classify(d, m, ceu, cev, mat, cw, pos, neg)
        return code
    finally:
        free(mat)
        free(ceu)
        free(cev)
        free(pos)
        free(neg)
        free(cw)


def brute_force(int d, eu, ev, list compat):
    cdef int m = len(eu)
    cdef int k, code, i
    cdef unsigned char* mat = _compat_matrix(compat, m)
    cdef int* ceu = <int*> calloc(m + 1, sizeof(int))
    cdef int* cev = <int*> calloc(m + 1, sizeof(int))
    cdef int* pos = <int*> calloc(m + 1, sizeof(int))
    cdef int* neg = <int*> calloc(m + 1, sizeof(int))
    cdef signed char* w = <signed char*> calloc(d + 1, 1)
    out = []
    try:
        if not (ceu and cev and pos and neg and w):
            raise MemoryError()
        for k in range(m):
            ceu[k] = eu[k]
            cev[k] = ev[k]
        for k in range(d):
            w[k] = -1
        # odometer over {-1,0,1}^d, last coordinate fastest
        while True:
            code = _classify(d, m, ceu, cev, mat, w, pos, neg)
            if code >= 0:
                out.append((tuple([w[k] for k in range(d)]), code))
            i = d - 1
            while i >= 0 and w[i] == 1:
                w[i] = -1
                i -= 1
            if i < 0:
                break
            w[i] += 1
        return out
    finally:
        free(mat)
        free(ceu)
        free(cev)
        free(pos)
        free(neg)
        free(w)


def connected_masks(int n, long long lo, long long hi):
    cdef uint64_t adj[64]
    cdef int pi[64]
    cdef int pj[64]
    cdef int i, j, k, npairs = 0
    cdef long long mask
    cdef uint64_t seen, frontier, nxt, f, low, full
    # masks are 63-bit, so at most 55 vertex pairs
    if n < 1 or n > 11:
        raise ValueError("n must lie in 1..11")
    for i in range(n):
        for j in range(i + 1, n):
            pi[npairs] = i
            pj[npairs] = j
            npairs += 1
    full = ((<uint64_t> 1) << n) - 1
    out = []
    mask = lo
    while mask < hi:
        for i in range(n):
            adj[i] = 0
        for k in range(npairs):
            if (mask >> k) & 1:
                adj[pi[k]] |= (<uint64_t> 1) << pj[k]
                adj[pj[k]] |= (<uint64_t> 1) << pi[k]
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & (~f + 1)
                i = 0
                while not ((low >> i) & 1):
                    i += 1
                nxt |= adj[i]
                f ^= low
            frontier = nxt & ~seen
            seen |= frontier
        if seen == full:
            out.append(mask)
        mask += 1
    return out
