# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; same contract as ``stsbicolor.kernels._pure``."""

from libc.stdlib cimport malloc, calloc, free

cdef enum:
    FOUND = 0
    EXHAUSTED = 1
    BUDGET = 2


cdef inline void _cover(int i, int* top, int* ulink, int* dlink,
                        int* llink, int* rlink, int* length) noexcept nogil:
    cdef int p, q, x, u, d, l, r
    p = dlink[i]
    while p != i:
        q = p + 1
        while q != p:
            x = top[q]
            if x <= 0:
                q = ulink[q]
            else:
                u = ulink[q]
                d = dlink[q]
                dlink[u] = d
                ulink[d] = u
                length[x] -= 1
                q += 1
        p = dlink[p]
    l = llink[i]
    r = rlink[i]
    rlink[l] = r
    llink[r] = l


cdef inline void _uncover(int i, int* top, int* ulink, int* dlink,
                          int* llink, int* rlink, int* length) noexcept nogil:
    cdef int p, q, x, u, d, l, r
    l = llink[i]
    r = rlink[i]
    rlink[l] = i
    llink[r] = i
    p = ulink[i]
    while p != i:
        q = p - 1
        while q != p:
            x = top[q]
            if x <= 0:
                q = dlink[q]
            else:
                u = ulink[q]
                d = dlink[q]
                dlink[u] = q
                ulink[d] = q
                length[x] += 1
                q -= 1
        p = ulink[p]


cdef int _algorithm_x(int n_items, int n_opts, int* top, int* ulink, int* dlink,
                      int* llink, int* rlink, int* length, int* x,
                      long long budget, long long* nodes_out, int* level_out) noexcept nogil:
    cdef int level = 0, state = 2, i = 0, j, p, xl, best
    cdef long long nodes = 0
    while True:
        if state == 2:
            if rlink[0] == 0:
                nodes_out[0] = nodes
                level_out[0] = level
                return FOUND
            best = n_opts + 1
            j = rlink[0]
            while j != 0:
                if length[j] < best:
                    best = length[j]
                    i = j
                    if best == 0:
                        break
                j = rlink[j]
            _cover(i, top, ulink, dlink, llink, rlink, length)
            x[level] = dlink[i]
            state = 5
        if state == 5:
            xl = x[level]
            if xl == i:
                _uncover(i, top, ulink, dlink, llink, rlink, length)
                state = 8
            else:
                nodes += 1
                if nodes > budget:
                    nodes_out[0] = nodes
                    return BUDGET
                p = xl + 1
                while p != xl:
                    j = top[p]
                    if j <= 0:
                        p = ulink[p]
                    else:
                        _cover(j, top, ulink, dlink, llink, rlink, length)
                        p += 1
                level += 1
                state = 2
                continue
        if state == 8:
            if level == 0:
                nodes_out[0] = nodes
                return EXHAUSTED
            level -= 1
            xl = x[level]
            p = xl - 1
            while p != xl:
                j = top[p]
                if j <= 0:
                    p = dlink[p]
                else:
                    _uncover(j, top, ulink, dlink, llink, rlink, length)
                    p -= 1
            i = top[xl]
            x[level] = dlink[xl]
            state = 5


def exact_cover(int n_items, offsets, items, long long budget):
    cdef int n_opts = len(offsets) - 1
    cdef int n_nodes = (n_items + 1) + len(items) + n_opts + 1
    cdef int* top = <int*>calloc(n_nodes, sizeof(int))
    cdef int* ulink = <int*>malloc(n_nodes * sizeof(int))
    cdef int* dlink = <int*>malloc(n_nodes * sizeof(int))
    cdef int* opt_of = <int*>malloc(n_nodes * sizeof(int))
    cdef int* llink = <int*>malloc((n_items + 1) * sizeof(int))
    cdef int* rlink = <int*>malloc((n_items + 1) * sizeof(int))
    cdef int* length = <int*>calloc(n_items + 1, sizeof(int))
    cdef int* x = <int*>malloc((n_items + 1) * sizeof(int))
    cdef int i, o, t, it, u, node, first, last_spacer, status, level = 0
    cdef long long nodes = 0
    if not (top and ulink and dlink and opt_of and llink and rlink and length and x):
        free(top); free(ulink); free(dlink); free(opt_of)
        free(llink); free(rlink); free(length); free(x)
        raise MemoryError()
    try:
        for i in range(n_nodes):
            ulink[i] = i
            dlink[i] = i
            opt_of[i] = -1
        for i in range(n_items + 1):
            llink[i] = i - 1 if i > 0 else n_items
            rlink[i] = i + 1 if i < n_items else 0
        node = n_items + 1
        top[node] = 0
        last_spacer = node
        node += 1
        for o in range(n_opts):
            first = node
            for t in range(<int>offsets[o], <int>offsets[o + 1]):
                it = <int>items[t] + 1
                top[node] = it
                opt_of[node] = o
                u = ulink[it]
                ulink[node] = u
                dlink[u] = node
                dlink[node] = it
                ulink[it] = node
                length[it] += 1
                node += 1
            dlink[last_spacer] = node - 1
            top[node] = -(o + 1)
            ulink[node] = first
            dlink[node] = node
            last_spacer = node
            node += 1
        with nogil:
            status = _algorithm_x(n_items, n_opts, top, ulink, dlink, llink, rlink,
                                  length, x, budget, &nodes, &level)
        if status == FOUND:
            chosen = [opt_of[x[i]] for i in range(level)]
        else:
            chosen = []
        return status, chosen, nodes
    finally:
        free(top); free(ulink); free(dlink); free(opt_of)
        free(llink); free(rlink); free(length); free(x)


cdef struct _BState:
    int v
    int k
    int full
    int* offsets
    int* pairs
    int* col
    int* dom
    int* counts
    int* trail_pt
    int* trail_old
    int trail_len
    long long nodes
    long long budget
    int mode
    int stop
    int out_of_budget


cdef class _Collector:
    cdef dict seen
    cdef list found
    cdef tuple target

    def __cinit__(self, target):
        self.seen = {}
        self.found = []
        self.target = target


cdef int _record(_BState* s, _Collector coll) except -1:
    cdef int i
    pattern = tuple(sorted([s.counts[i] for i in range(s.k)]))
    if pattern not in coll.seen:
        coll.seen[pattern] = True
        if s.mode != 2 or pattern == coll.target:
            coll.found.append((pattern, [s.col[i] for i in range(s.v)]))
    if s.mode == 1 or (s.mode == 2 and pattern == coll.target):
        s.stop = 1
    return 0


cdef int _rec(_BState* s, int p, int used, _Collector coll) except -1:
    cdef int d, c, top_color, new_used, mark, ok, bit, t, q, r, cq, cr, allowed, nd
    if p == s.v:
        if used == s.k:
            _record(s, coll)
        return 0
    d = s.dom[p]
    top_color = used if used < s.k else s.k - 1
    for c in range(top_color + 1):
        if not (d >> c) & 1:
            continue
        new_used = used + 1 if c == used else used
        if s.k - new_used > s.v - p - 1:
            continue
        s.nodes += 1
        if s.nodes > s.budget:
            s.out_of_budget = 1
            return 0
        s.col[p] = c
        s.counts[c] += 1
        mark = s.trail_len
        ok = 1
        bit = 1 << c
        for t in range(s.offsets[p], s.offsets[p + 1]):
            q = s.pairs[2 * t]
            r = s.pairs[2 * t + 1]
            cq = s.col[q]
            cr = s.col[r]
            if cq >= 0 and cr >= 0:
                if (cq == c and cr == c) or (cq != c and cr != c and cq != cr):
                    ok = 0
                    break
                continue
            if cq < 0 and cr < 0:
                continue
            if cq < 0:
                cq = cr
                r = q
            if cq == c:
                allowed = s.full & ~bit
            else:
                allowed = bit | (1 << cq)
            nd = s.dom[r] & allowed
            if nd != s.dom[r]:
                s.trail_pt[s.trail_len] = r
                s.trail_old[s.trail_len] = s.dom[r]
                s.trail_len += 1
                s.dom[r] = nd
                if nd == 0:
                    ok = 0
                    break
        if ok:
            _rec(s, p + 1, new_used, coll)
        while s.trail_len > mark:
            s.trail_len -= 1
            s.dom[s.trail_pt[s.trail_len]] = s.trail_old[s.trail_len]
        s.counts[c] -= 1
        s.col[p] = -1
        if s.stop or s.out_of_budget:
            return 0
    return 0


def bicolor_search(int v, int k, offsets, pairs, long long budget, int mode, target):
    cdef _BState s
    cdef int i
    cdef int n_pairs = len(pairs) // 2
    cdef int trail_cap = n_pairs + 1
    s.v = v
    s.k = k
    s.full = (1 << k) - 1
    s.offsets = <int*>malloc((v + 1) * sizeof(int))
    s.pairs = <int*>malloc((2 * n_pairs + 1) * sizeof(int))
    s.col = <int*>malloc((v + 1) * sizeof(int))
    s.dom = <int*>malloc((v + 1) * sizeof(int))
    s.counts = <int*>calloc(k + 1, sizeof(int))
    s.trail_pt = <int*>malloc(trail_cap * sizeof(int))
    s.trail_old = <int*>malloc(trail_cap * sizeof(int))
    s.trail_len = 0
    s.nodes = 0
    s.budget = budget
    s.mode = mode
    s.stop = 0
    s.out_of_budget = 0
    coll = _Collector(tuple(target) if target is not None else None)
    try:
        if not (s.offsets and s.pairs and s.col and s.dom and s.counts
                and s.trail_pt and s.trail_old):
            raise MemoryError()
        for i in range(v + 1):
            s.offsets[i] = offsets[i]
        for i in range(2 * n_pairs):
            s.pairs[i] = pairs[i]
        for i in range(v):
            s.col[i] = -1
            s.dom[i] = s.full
        _rec(&s, 0, 0, coll)
        if s.out_of_budget:
            status = BUDGET
        elif s.stop:
            status = FOUND
        else:
            status = EXHAUSTED
        return status, coll.found, s.nodes
    finally:
        free(s.offsets); free(s.pairs); free(s.col); free(s.dom)
        free(s.counts); free(s.trail_pt); free(s.trail_old)
