"""Pure-Python compute kernels.

The hot loops of the library live here: low-degree peeling, the exact
branch-and-bound color-count search, its greedy seed, and canonical
labeling. A compiled twin with identical signatures lives in
``_kernel_cy.pyx``; :mod:`pointpart.kernel` picks one at import time.

All functions work on the flat multiplicity matrix of a loopless
multigraph: ``bytes`` of length ``n*n``, symmetric, zero diagonal. Keeping
the interface down to bytes-and-ints makes the two kernels trivially
interchangeable and lets the compiled one run without object overhead.
"""

from __future__ import annotations

__all__ = [
    "peel_subset",
    "is_sd_subset",
    "greedy_seed",
    "chi_exact",
    "canonical_label",
]


def peel_subset(mat, n, t, members):
    """Greedy low-degree peel of the subgraph induced by ``members``.

    Repeatedly removes the vertex of minimum (degree, position) while some
    degree is below ``t``. Returns ``(True, order)`` when everything peels
    away, else ``(False, core)`` where ``core`` is the unique maximal
    induced subgraph with minimum degree >= t. With ``members`` sorted
    ascending the tie-break is by smallest vertex index, so certificates
    are stable.
    """
    k = len(members)
    if k == 0:
        return True, ()
    deg = [0] * k
    for i in range(k):
        row = members[i] * n
        d = 0
        for j in range(k):
            if j != i:
                d += mat[row + members[j]]
        deg[i] = d
    alive = [True] * k
    order = []
    for _ in range(k):
        pick = -1
        pd = 0
        for i in range(k):
            if alive[i] and (pick < 0 or deg[i] < pd):
                pick = i
                pd = deg[i]
        if pd >= t:
            break
        alive[pick] = False
        order.append(members[pick])
        row = members[pick] * n
        for j in range(k):
            if alive[j]:
                deg[j] -= mat[row + members[j]]
    if len(order) == k:
        return True, tuple(order)
    return False, tuple(members[i] for i in range(k) if alive[i])


def is_sd_subset(mat, n, t, members):
    """Verdict-only variant of :func:`peel_subset` (member order free)."""
    k = len(members)
    if k == 0:
        return True
    deg = [0] * k
    for i in range(k):
        row = members[i] * n
        d = 0
        for j in range(k):
            if j != i:
                d += mat[row + members[j]]
        deg[i] = d
    alive = [True] * k
    removed = 0
    progress = True
    while progress:
        progress = False
        for i in range(k):
            if alive[i] and deg[i] < t:
                alive[i] = False
                removed += 1
                row = members[i] * n
                for j in range(k):
                    if alive[j]:
                        deg[j] -= mat[row + members[j]]
                progress = True
    return removed == k


def greedy_seed(mat, n, t):
    """First-fit coloring in vertex order; classes are peel-checked.

    Placing v into a class that receives fewer than ``t`` edge ends from v
    cannot break strict t-degeneracy (v stays a low vertex of every
    subgraph containing it), so the peel only runs past that threshold.
    """
    colors = [0] * n
    classes = []
    for v in range(n):
        row = v * n
        placed = False
        for ci, cls in enumerate(classes):
            w = 0
            for u in cls:
                w += mat[row + u]
            if w < t or is_sd_subset(mat, n, t, tuple(cls) + (v,)):
                cls.append(v)
                colors[v] = ci + 1
                placed = True
                break
        if not placed:
            classes.append([v])
            colors[v] = len(classes)
    return len(classes), tuple(colors)


class _BudgetHit(Exception):
    pass


def chi_exact(mat, n, t, cap, budget):
    """Exact minimum class count with witness, or None on budget abort.

    Branch and bound: the most saturated uncolored vertex is placed into
    each feasible existing class and into at most one new class. ``cap``
    may carry a separately-known valid upper bound (e.g. the max-degree
    bound on connected graphs); it tightens the search without supplying a
    witness. The returned witness uses colors 1..k.
    """
    if n == 0:
        return 0, ()
    gk, gcolors = greedy_seed(mat, n, t)
    best_k = gk
    best = list(gcolors)
    hard_cap = cap if (cap and 0 < cap < gk) else gk
    if best_k <= 1:
        return best_k, tuple(best)

    color = [0] * n
    members = [[] for _ in range(n + 1)]
    weight = [[0] * (n + 1) for _ in range(n)]
    sat = [0] * n
    degs = [sum(mat[v * n:(v + 1) * n]) for v in range(n)]
    counter = [0]

    def place(v, c):
        color[v] = c
        members[c].append(v)
        row = v * n
        bumped = []
        for u in range(n):
            if color[u] == 0:
                mu = mat[row + u]
                if mu:
                    wu = weight[u]
                    old = wu[c]
                    wu[c] = old + mu
                    if old < t <= old + mu:
                        sat[u] += 1
                    bumped.append(u)
        return bumped

    def unplace(v, c, bumped):
        color[v] = 0
        members[c].pop()
        row = v * n
        for u in bumped:
            wu = weight[u]
            old = wu[c]
            wu[c] = old - mat[row + u]
            if wu[c] < t <= old:
                sat[u] -= 1

    def rec(placed_count, used):
        nonlocal best_k
        if used >= best_k:
            return
        if placed_count == n:
            best_k = used
            best[:] = color
            return
        v = -1
        bs = -1
        bd = -1
        for u in range(n):
            if color[u] == 0:
                s = sat[u]
                if s > bs or (s == bs and degs[u] > bd):
                    v = u
                    bs = s
                    bd = degs[u]
        w = weight[v]
        for c in range(1, used + 1):
            counter[0] += 1
            if counter[0] > budget:
                raise _BudgetHit
            if w[c] >= t:
                if not is_sd_subset(mat, n, t, tuple(members[c]) + (v,)):
                    continue
            bumped = place(v, c)
            rec(placed_count + 1, used)
            unplace(v, c, bumped)
            if used >= best_k:
                return
        if used + 1 < best_k and used + 1 <= hard_cap:
            counter[0] += 1
            if counter[0] > budget:
                raise _BudgetHit
            bumped = place(v, used + 1)
            rec(placed_count + 1, used + 1)
            unplace(v, used + 1, bumped)

    try:
        rec(0, 0)
    except _BudgetHit:
        return None
    return best_k, tuple(best)


def canonical_label(mat, n):
    """Canonical byte label: two matrices get equal labels iff isomorphic.

    The label is the count byte ``n`` followed by the lexicographically
    smallest pair-multiplicity sequence (pairs enumerated (0,1), (0,2),
    (1,2), (0,3), ...) over all vertex orders whose degree sequence is
    non-increasing. Restricting to degree-sorted orders keeps the search
    small and stays isomorphism-invariant.
    """
    if n == 0:
        return bytes([0])
    if n == 1:
        return bytes([1])
    degs = [sum(mat[v * n:(v + 1) * n]) for v in range(n)]
    target = sorted(degs, reverse=True)
    total = n * (n - 1) // 2
    seq = bytearray(total)
    perm = [0] * n
    used = [False] * n
    best = [None]

    def rec(pos, length, tight):
        if pos == n:
            s = bytes(seq)
            if best[0] is None or s < best[0]:
                best[0] = s
            return
        td = target[pos]
        for v in range(n):
            if used[v] or degs[v] != td:
                continue
            bst = best[0]
            cmp_active = bst is not None and tight
            rel = 0
            for j in range(pos):
                mv = mat[perm[j] * n + v]
                seq[length + j] = mv
                if cmp_active and rel == 0:
                    bj = bst[length + j]
                    if mv < bj:
                        rel = -1
                    elif mv > bj:
                        rel = 1
                        break
            if cmp_active and rel > 0:
                continue
            used[v] = True
            perm[pos] = v
            rec(pos + 1, length + pos, True if bst is None else (tight and rel == 0))
            used[v] = False

    rec(0, 0, True)
    return bytes([n]) + best[0]
