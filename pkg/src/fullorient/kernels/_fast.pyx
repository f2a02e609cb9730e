# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel; same traversal and results as ``_pure``.

Limited to 64 vertices (one machine word per vertex set).
"""

ctypedef unsigned long long u64

cdef extern from *:
    int popcount "__builtin_popcountll"(u64) nogil
    int ctz "__builtin_ctzll"(u64) nogil

cdef enum:
    MAXN = 64

cdef enum Mode:
    HISTOGRAM = 0
    MINIMUM = 1
    FIRST = 2

cdef struct Ctx:
    int n
    int mode
    u64 lower[MAXN]
    u64 out[MAXN]
    u64 desc[MAXN]
    unsigned long long *hist
    int best
    int lo
    int hi
    u64 clique
    bint stop
    u64 found[MAXN]
    int split
    long long part
    long long nparts
    long long counter


cdef inline int dependent_count(Ctx *c) noexcept nogil:
    cdef int u, total = 0
    cdef u64 o, via, rest
    for u in range(c.n):
        o = c.out[u]
        via = 0
        rest = o
        while rest:
            via |= c.desc[ctz(rest)]
            rest &= rest - 1
        total += popcount(o & via)
    return total


cdef bint has_nontrivial(Ctx *c) noexcept nogil:
    cdef u64 qs = c.clique, inside, via, rest, cand, others
    cdef int u, v
    while qs:
        u = ctz(qs)
        qs &= qs - 1
        inside = c.out[u] & c.clique
        via = 0
        rest = c.out[u]
        while rest:
            via |= c.desc[ctz(rest)]
            rest &= rest - 1
        cand = inside & via
        while cand:
            v = ctz(cand)
            cand &= cand - 1
            others = inside & ~((<u64>1) << v)
            rest = 0
            while others:
                if (c.out[ctz(others)] >> v) & 1:
                    rest = 1
                    break
                others &= others - 1
            if not rest:
                return True
    return False


cdef void leaf(Ctx *c) noexcept nogil:
    cdef int d = dependent_count(c)
    cdef int i
    if c.mode == HISTOGRAM:
        c.hist[d] += 1
    elif c.mode == MINIMUM:
        if c.best < 0 or d < c.best:
            c.best = d
            if d == 0:
                c.stop = True
    else:
        if c.lo <= d <= c.hi and (c.clique == 0 or has_nontrivial(c)):
            for i in range(c.n):
                c.found[i] = c.out[i]
            c.stop = True


cdef void rec(Ctx *c, int k) noexcept nogil:
    cdef u64 saved_out[MAXN]
    cdef u64 saved_desc[MAXN]
    cdef int nbrs[MAXN]
    cdef int deg = 0, j, a
    cdef u64 rest, ins, outs, below, reach_k, x, nx
    cdef long long idx
    if c.stop:
        return
    if k == c.n:
        leaf(c)
        return
    rest = c.lower[k]
    while rest:
        nbrs[deg] = ctz(rest)
        deg += 1
        rest &= rest - 1
    nx = (<u64>1) << deg
    x = 0
    while x < nx:
        ins = 0
        outs = 0
        for j in range(deg):
            if (x >> (deg - 1 - j)) & 1:
                outs |= (<u64>1) << nbrs[j]
            else:
                ins |= (<u64>1) << nbrs[j]
        x += 1
        below = outs
        rest = outs
        while rest:
            below |= c.desc[ctz(rest)]
            rest &= rest - 1
        if below & ins:
            continue
        if k == c.split:
            idx = c.counter
            c.counter += 1
            if idx % c.nparts != c.part:
                continue
        for a in range(k):
            saved_out[a] = c.out[a]
            saved_desc[a] = c.desc[a]
        reach_k = ((<u64>1) << k) | below
        for a in range(k):
            if ((ins >> a) & 1) or (c.desc[a] & ins):
                c.desc[a] |= reach_k
        rest = ins
        while rest:
            c.out[ctz(rest)] |= (<u64>1) << k
            rest &= rest - 1
        c.out[k] = outs
        c.desc[k] = below
        rec(c, k + 1)
        for a in range(k):
            c.out[a] = saved_out[a]
            c.desc[a] = saved_desc[a]
        if c.stop:
            break
    c.out[k] = 0
    c.desc[k] = 0


cdef void setup(Ctx *c, int n, adj, int mode):
    cdef int k
    if n > MAXN:
        raise ValueError("compiled kernel supports at most 64 vertices")
    c.n = n
    c.mode = mode
    c.best = -1
    c.stop = False
    c.clique = 0
    c.split = 0
    c.part = 0
    c.nparts = 1
    c.counter = 0
    c.hist = NULL
    for k in range(n):
        c.lower[k] = (<u64>adj[k]) & (((<u64>1) << k) - 1)
        c.out[k] = 0
        c.desc[k] = 0


def histogram(int n, adj, int split=0, long long part=0, long long nparts=1):
    cdef Ctx c
    cdef int m = sum(bin(a).count("1") for a in adj) // 2
    cdef unsigned long long hist[4097]
    cdef int d
    if m > 4096:
        raise ValueError("too many edges for the compiled kernel")
    setup(&c, n, adj, HISTOGRAM)
    c.split = split
    c.part = part
    c.nparts = nparts
    for d in range(m + 1):
        hist[d] = 0
    c.hist = hist
    if split >= n and part % nparts:
        return [0] * (m + 1)
    with nogil:
        rec(&c, 0)
    return [int(hist[d]) for d in range(m + 1)]


def min_dependent(int n, adj):
    cdef Ctx c
    setup(&c, n, adj, MINIMUM)
    with nogil:
        rec(&c, 0)
    return c.best if c.best >= 0 else None


def first_match(int n, adj, clique, int lo, int hi):
    cdef Ctx c
    cdef int i
    setup(&c, n, adj, FIRST)
    c.clique = <u64>clique
    c.lo = lo
    c.hi = hi
    with nogil:
        rec(&c, 0)
    if not c.stop:
        return None
    return tuple(int(c.found[i]) for i in range(n))
