# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels.

Operation-for-operation mirror of ``_kernels_py`` using 64-bit masks; see
that module for the algorithm commentary.  Limited to 63 vertices."""

from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport free, malloc

BACKEND = "compiled"
MAX_VERTICES = 63

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #  define STARDI_CTZ(x) __builtin_ctzll(x)
    #else
    static int STARDI_CTZ(unsigned long long x) {
        int i = 0;
        while (!(x & 1ULL)) { x >>= 1; ++i; }
        return i;
    }
    #endif
    """
    int STARDI_CTZ(unsigned long long) nogil


cdef bint _cycle_through(int v, uint64_t mask, uint64_t* out) nogil:
    cdef uint64_t S = mask | (<uint64_t>1 << v)
    cdef uint64_t target = <uint64_t>1 << v
    cdef uint64_t frontier = out[v] & mask
    cdef uint64_t reach = 0, nxt, f
    while frontier:
        reach |= frontier
        nxt = 0
        f = frontier
        while f:
            nxt |= out[STARDI_CTZ(f)]
            f &= f - 1
        if nxt & target:
            return True
        frontier = nxt & S & ~reach
    return False


cdef struct _Ctx:
    int n
    int k
    int d
    uint64_t* out
    uint64_t* inn
    uint64_t* adj
    int* order
    int* colours
    uint64_t* window
    int64_t nodes


cdef bint _rec_acyclic(_Ctx* ctx, int idx) nogil:
    ctx.nodes += 1
    if idx == ctx.n:
        return True
    cdef int v = ctx.order[idx]
    cdef uint64_t bit = <uint64_t>1 << v
    cdef int cmax = 1 if idx == 0 else ctx.k
    cdef int c, t, i
    cdef bint ok
    for c in range(cmax):
        ok = True
        for t in range(ctx.d):
            i = c - t
            if i < 0:
                i += ctx.k
            if _cycle_through(v, ctx.window[i], ctx.out):
                ok = False
                break
        if not ok:
            continue
        for t in range(ctx.d):
            i = c - t
            if i < 0:
                i += ctx.k
            ctx.window[i] |= bit
        ctx.colours[v] = c
        if _rec_acyclic(ctx, idx + 1):
            return True
        ctx.colours[v] = -1
        for t in range(ctx.d):
            i = c - t
            if i < 0:
                i += ctx.k
            ctx.window[i] &= ~bit
    return False


cdef bint _rec_circular(_Ctx* ctx, int idx, uint64_t coloured) nogil:
    ctx.nodes += 1
    if idx == ctx.n:
        return True
    cdef int v = ctx.order[idx]
    cdef uint64_t bit = <uint64_t>1 << v
    cdef int cmax = 1 if idx == 0 else ctx.k
    cdef int c, u, diff
    cdef uint64_t f
    cdef bint ok
    for c in range(cmax):
        ok = True
        f = ctx.out[v] & coloured
        while f:
            u = STARDI_CTZ(f)
            f &= f - 1
            diff = ctx.colours[u] - c
            if diff < 0:
                diff += ctx.k
            if diff != 0 and diff < ctx.d:
                ok = False
                break
        if ok:
            f = ctx.inn[v] & coloured
            while f:
                u = STARDI_CTZ(f)
                f &= f - 1
                diff = c - ctx.colours[u]
                if diff < 0:
                    diff += ctx.k
                if diff != 0 and diff < ctx.d:
                    ok = False
                    break
        if ok and _cycle_through(v, ctx.window[c], ctx.out):
            ok = False
        if not ok:
            continue
        ctx.window[c] |= bit
        ctx.colours[v] = c
        if _rec_circular(ctx, idx + 1, coloured | bit):
            return True
        ctx.colours[v] = -1
        ctx.window[c] &= ~bit
    return False


cdef uint64_t _flood(int x, uint64_t S, uint64_t* adj) nogil:
    cdef uint64_t comp = 0
    cdef uint64_t frontier = <uint64_t>1 << x
    cdef uint64_t nxt, f
    while frontier:
        comp |= frontier
        nxt = 0
        f = frontier
        while f:
            nxt |= adj[STARDI_CTZ(f)]
            f &= f - 1
        frontier = nxt & S & ~comp
    return comp


cdef bint _closes_undirected_cycle(int v, uint64_t S, uint64_t* adj) nogil:
    cdef uint64_t nb = adj[v] & S
    if nb & (nb - 1) == 0:
        return False
    cdef uint64_t rem = nb, bit, comp
    while rem:
        bit = rem & (0 - rem)
        comp = _flood(STARDI_CTZ(rem), S, adj)
        if comp & nb & ~bit:
            return True
        rem &= ~comp
    return False


cdef bint _rec_tree(_Ctx* ctx, int idx) nogil:
    ctx.nodes += 1
    if idx == ctx.n:
        return True
    cdef int v = ctx.order[idx]
    cdef uint64_t bit = <uint64_t>1 << v
    cdef int cmax = 1 if idx == 0 else ctx.k
    cdef int c, t, i
    cdef bint ok
    for c in range(cmax):
        ok = True
        for t in range(ctx.d):
            i = c - t
            if i < 0:
                i += ctx.k
            if _closes_undirected_cycle(v, ctx.window[i], ctx.adj):
                ok = False
                break
        if not ok:
            continue
        for t in range(ctx.d):
            i = c - t
            if i < 0:
                i += ctx.k
            ctx.window[i] |= bit
        ctx.colours[v] = c
        if _rec_tree(ctx, idx + 1):
            return True
        ctx.colours[v] = -1
        for t in range(ctx.d):
            i = c - t
            if i < 0:
                i += ctx.k
            ctx.window[i] &= ~bit
    return False


cdef int _ctx_init(_Ctx* ctx, int n, int k, int d) except -1:
    ctx.n = n
    ctx.k = k
    ctx.d = d
    ctx.nodes = 0
    ctx.out = NULL
    ctx.inn = NULL
    ctx.adj = NULL
    ctx.order = <int*>malloc(n * sizeof(int))
    ctx.colours = <int*>malloc(n * sizeof(int))
    ctx.window = <uint64_t*>malloc(k * sizeof(uint64_t))
    if ctx.order == NULL or ctx.colours == NULL or ctx.window == NULL:
        _ctx_free(ctx)
        raise MemoryError()
    cdef int i
    for i in range(n):
        ctx.colours[i] = -1
    for i in range(k):
        ctx.window[i] = 0
    return 0


cdef void _ctx_free(_Ctx* ctx):
    free(ctx.order)
    free(ctx.colours)
    free(ctx.window)
    free(ctx.out)
    free(ctx.inn)
    free(ctx.adj)


cdef uint64_t* _masks_to_c(object masks, int n) except NULL:
    cdef uint64_t* arr = <uint64_t*>malloc(n * sizeof(uint64_t))
    if arr == NULL:
        raise MemoryError()
    cdef int i
    for i in range(n):
        arr[i] = masks[i]
    return arr


cdef _check_size(int n):
    if n > MAX_VERTICES:
        raise ValueError(f"compiled kernel supports at most {MAX_VERTICES} vertices")


def search_acyclic(int n, int k, int d, out_masks, order):
    _check_size(n)
    cdef _Ctx ctx
    _ctx_init(&ctx, n, k, d)
    cdef int i
    try:
        ctx.out = _masks_to_c(out_masks, n)
        for i in range(n):
            ctx.order[i] = order[i]
        if _rec_acyclic(&ctx, 0):
            return tuple(ctx.colours[i] for i in range(n)), ctx.nodes
        return None, ctx.nodes
    finally:
        _ctx_free(&ctx)


def search_circular(int n, int k, int d, out_masks, in_masks, order):
    _check_size(n)
    cdef _Ctx ctx
    _ctx_init(&ctx, n, k, d)
    cdef int i
    try:
        ctx.out = _masks_to_c(out_masks, n)
        ctx.inn = _masks_to_c(in_masks, n)
        for i in range(n):
            ctx.order[i] = order[i]
        if _rec_circular(&ctx, 0, 0):
            return tuple(ctx.colours[i] for i in range(n)), ctx.nodes
        return None, ctx.nodes
    finally:
        _ctx_free(&ctx)


def search_tree(int n, int k, int d, adj_masks, order):
    _check_size(n)
    cdef _Ctx ctx
    _ctx_init(&ctx, n, k, d)
    cdef int i
    try:
        ctx.adj = _masks_to_c(adj_masks, n)
        for i in range(n):
            ctx.order[i] = order[i]
        if _rec_tree(&ctx, 0):
            return tuple(ctx.colours[i] for i in range(n)), ctx.nodes
        return None, ctx.nodes
    finally:
        _ctx_free(&ctx)
