# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled twin of _kernel_py.

Same four entry points, same semantics, same deterministic tie-breaking;
the test suite asserts bit-identical results against the pure kernel.
Graphs are capped at 64 vertices (the library's dense-matrix regime), so
fixed stack buffers are enough.
"""

from libc.string cimport memset

cdef enum:
    MAXN = 64
    MAXSEQ = 2016  # MAXN*(MAXN-1)//2

__all__ = ["peel_subset", "is_sd_subset", "greedy_seed", "chi_exact", "canonical_label"]


cdef int _peel_core(const unsigned char* mat, int n, int t,
                    const int* mem, int k, int* order, int* core) nogil:
    # Returns number of peeled vertices; writes elimination order and the
    # surviving core. Minimum (degree, position) removal.
    cdef int deg[MAXN]
    cdef unsigned char alive[MAXN]
    cdef int i, j, row, pick, pd, removed, d, ci
    for i in range(k):
        row = mem[i] * n
        d = 0
        for j in range(k):
            if j != i:
                d += mat[row + mem[j]]
        deg[i] = d
        alive[i] = 1
    removed = 0
    while removed < k:
        pick = -1
        pd = 0
        for i in range(k):
            if alive[i] and (pick < 0 or deg[i] < pd):
                pick = i
                pd = deg[i]
        if pd >= t:
            break
        alive[pick] = 0
        order[removed] = mem[pick]
        removed += 1
        row = mem[pick] * n
        for j in range(k):
            if alive[j]:
                deg[j] -= mat[row + mem[j]]
    ci = 0
    for i in range(k):
        if alive[i]:
            core[ci] = mem[i]
            ci += 1
    return removed


def peel_subset(bytes mat, int n, int t, members):
    """See _kernel_py.peel_subset."""
    cdef const unsigned char* m = mat
    cdef int k = len(members)
    if k == 0:
        return True, ()
    cdef int mem[MAXN]
    cdef int order[MAXN]
    cdef int core[MAXN]
    cdef int i
    for i in range(k):
        mem[i] = members[i]
    cdef int removed = _peel_core(m, n, t, mem, k, order, core)
    if removed == k:
        return True, tuple(order[i] for i in range(k))
    return False, tuple(core[i] for i in range(k - removed))


cdef bint _is_sd(const unsigned char* mat, int n, int t, const int* mem, int k) nogil:
    cdef int deg[MAXN]
    cdef unsigned char alive[MAXN]
    cdef int i, j, row, d, removed
    cdef bint progress
    if k == 0:
        return 1
    for i in range(k):
        row = mem[i] * n
        d = 0
        for j in range(k):
            if j != i:
                d += mat[row + mem[j]]
        deg[i] = d
        alive[i] = 1
    removed = 0
    progress = 1
    while progress:
        progress = 0
        for i in range(k):
            if alive[i] and deg[i] < t:
                alive[i] = 0
                removed += 1
                row = mem[i] * n
                for j in range(k):
                    if alive[j]:
                        deg[j] -= mat[row + mem[j]]
                progress = 1
    return removed == k


def is_sd_subset(bytes mat, int n, int t, members):
    """See _kernel_py.is_sd_subset."""
    cdef const unsigned char* m = mat
    cdef int k = len(members)
    cdef int mem[MAXN]
    cdef int i
    for i in range(k):
        mem[i] = members[i]
    return bool(_is_sd(m, n, t, mem, k))


cdef int _greedy(const unsigned char* mat, int n, int t, int* colors) nogil:
    # First-fit by vertex index; returns class count, writes 1-based colors.
    cdef int cls[MAXN][MAXN]
    cdef int cls_cnt[MAXN]
    cdef int used = 0
    cdef int v, ci, u, w, row, j
    cdef int probe[MAXN]
    for v in range(n):
        row = v * n
        colors[v] = 0
        for ci in range(used):
            w = 0
            for j in range(cls_cnt[ci]):
                w += mat[row + cls[ci][j]]
            if w < t:
                colors[v] = ci + 1
            else:
                for j in range(cls_cnt[ci]):
                    probe[j] = cls[ci][j]
                probe[cls_cnt[ci]] = v
                if _is_sd(mat, n, t, probe, cls_cnt[ci] + 1):
                    colors[v] = ci + 1
            if colors[v]:
                cls[ci][cls_cnt[ci]] = v
                cls_cnt[ci] += 1
                break
        if colors[v] == 0:
            cls[used][0] = v
            cls_cnt[used] = 1
            used += 1
            colors[v] = used
    return used


def greedy_seed(bytes mat, int n, int t):
    """See _kernel_py.greedy_seed."""
    cdef const unsigned char* m = mat
    cdef int colors[MAXN]
    cdef int i
    if n == 0:
        return 0, ()
    cdef int k = _greedy(m, n, t, colors)
    return k, tuple(colors[i] for i in range(n))


cdef struct ChiCtx:
    const unsigned char* mat
    int n
    int t
    int hard_cap
    int best_k
    long long nodes
    long long budget
    bint aborted
    int color[MAXN]
    int best[MAXN]
    int degs[MAXN]
    int sat[MAXN]
    int weight[MAXN][MAXN + 1]
    int mem[MAXN + 1][MAXN]
    int mem_cnt[MAXN + 1]


cdef void _chi_rec(ChiCtx* c, int placed, int used) nogil:
    cdef int v, bs, bd, u, s, ci, j, mu, old, row
    cdef int probe[MAXN]
    cdef int bumped[MAXN]
    cdef int nb
    if c.aborted or used >= c.best_k:
        return
    if placed == c.n:
        c.best_k = used
        for u in range(c.n):
            c.best[u] = c.color[u]
        return
    v = -1
    bs = -1
    bd = -1
    for u in range(c.n):
        if c.color[u] == 0:
            s = c.sat[u]
            if s > bs or (s == bs and c.degs[u] > bd):
                v = u
                bs = s
                bd = c.degs[u]
    row = v * c.n
    for ci in range(1, used + 2):
        if ci == used + 1:
            if not (used + 1 < c.best_k and used + 1 <= c.hard_cap):
                break
        c.nodes += 1
        if c.nodes > c.budget:
            c.aborted = 1
            return
        if ci <= used and c.weight[v][ci] >= c.t:
            for j in range(c.mem_cnt[ci]):
                probe[j] = c.mem[ci][j]
            probe[c.mem_cnt[ci]] = v
            if not _is_sd(c.mat, c.n, c.t, probe, c.mem_cnt[ci] + 1):
                continue
        # place
        c.color[v] = ci
        c.mem[ci][c.mem_cnt[ci]] = v
        c.mem_cnt[ci] += 1
        nb = 0
        for u in range(c.n):
            if c.color[u] == 0:
                mu = c.mat[row + u]
                if mu:
                    old = c.weight[u][ci]
                    c.weight[u][ci] = old + mu
                    if old < c.t and old + mu >= c.t:
                        c.sat[u] += 1
                    bumped[nb] = u
                    nb += 1
        _chi_rec(c, placed + 1, used if ci <= used else used + 1)
        # unplace
        c.color[v] = 0
        c.mem_cnt[ci] -= 1
        for j in range(nb):
            u = bumped[j]
            old = c.weight[u][ci]
            c.weight[u][ci] = old - c.mat[row + u]
            if c.weight[u][ci] < c.t and old >= c.t:
                c.sat[u] -= 1
        if c.aborted:
            return
        if ci <= used and used >= c.best_k:
            return


def chi_exact(bytes mat, int n, int t, int cap, long long budget):
    """See _kernel_py.chi_exact. Returns (k, colors) or None on abort."""
    cdef const unsigned char* m = mat
    cdef int i
    if n == 0:
        return 0, ()
    cdef int gcolors[MAXN]
    cdef int gk = _greedy(m, n, t, gcolors)
    if gk <= 1:
        return gk, tuple(gcolors[i] for i in range(n))
    cdef ChiCtx c
    c.mat = m
    c.n = n
    c.t = t
    c.hard_cap = cap if (cap and 0 < cap < gk) else gk
    c.best_k = gk
    c.nodes = 0
    c.budget = budget
    c.aborted = 0
    for i in range(n):
        c.best[i] = gcolors[i]
        c.color[i] = 0
        c.sat[i] = 0
        c.degs[i] = 0
        memset(c.weight[i], 0, sizeof(c.weight[i]))
    cdef int u
    for i in range(n):
        for u in range(n):
            c.degs[i] += m[i * n + u]
    for i in range(n + 1):
        c.mem_cnt[i] = 0
    _chi_rec(&c, 0, 0)
    if c.aborted:
        return None
    return c.best_k, tuple(c.best[i] for i in range(n))


cdef struct CanonCtx:
    const unsigned char* mat
    int n
    int degs[MAXN]
    int target[MAXN]
    int perm[MAXN]
    unsigned char used[MAXN]
    unsigned char seq[MAXSEQ]
    unsigned char best[MAXSEQ]
    bint have_best


cdef void _canon_rec(CanonCtx* c, int pos, int length, bint tight) nogil:
    cdef int v, j, rel, td, total
    cdef unsigned char mv, bj
    cdef bint cmp_active, had_best
    if pos == c.n:
        total = c.n * (c.n - 1) // 2
        if not c.have_best:
            for j in range(total):
                c.best[j] = c.seq[j]
            c.have_best = 1
        else:
            rel = 0
            for j in range(total):
                if c.seq[j] != c.best[j]:
                    rel = -1 if c.seq[j] < c.best[j] else 1
                    break
            if rel < 0:
                for j in range(total):
                    c.best[j] = c.seq[j]
        return
    td = c.target[pos]
    for v in range(c.n):
        if c.used[v] or c.degs[v] != td:
            continue
        had_best = c.have_best
        cmp_active = c.have_best and tight
        rel = 0
        for j in range(pos):
            mv = c.mat[c.perm[j] * c.n + v]
            c.seq[length + j] = mv
            if cmp_active and rel == 0:
                bj = c.best[length + j]
                if mv < bj:
                    rel = -1
                elif mv > bj:
                    rel = 1
                    break
        if cmp_active and rel > 0:
            continue
        c.used[v] = 1
        c.perm[pos] = v
        _canon_rec(c, pos + 1, length + pos, 1 if not had_best else (tight and rel == 0))
        c.used[v] = 0


def canonical_label(bytes mat, int n):
    """See _kernel_py.canonical_label."""
    cdef const unsigned char* m = mat
    if n == 0:
        return bytes([0])
    if n == 1:
        return bytes([1])
    cdef CanonCtx c
    cdef int i, u
    c.mat = m
    c.n = n
    c.have_best = 0
    for i in range(n):
        c.degs[i] = 0
        c.used[i] = 0
        for u in range(n):
            c.degs[i] += m[i * n + u]
    tgt = sorted((c.degs[i] for i in range(n)), reverse=True)
    for i in range(n):
        c.target[i] = tgt[i]
    _canon_rec(&c, 0, 0, 1)
    cdef int total = n * (n - 1) // 2
    return bytes([n]) + bytes(bytearray(c.best[i] for i in range(total)))
