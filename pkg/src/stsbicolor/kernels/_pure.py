"""Pure-Python search kernels.

Reference implementations of the two hot loops. The compiled module
``stsbicolor.kernels._fast`` mirrors these signatures and return values
exactly; the test suite runs both against each other.
"""

FOUND = 0
EXHAUSTED = 1
BUDGET = 2


def exact_cover(n_items, offsets, items, budget):
    """Find one exact cover with Knuth's dancing-links Algorithm X.

    Args:
        n_items: number of primary items, numbered ``0 .. n_items-1``.
        offsets: option ``o`` covers ``items[offsets[o]:offsets[o+1]]``.
        items: flat item list.
        budget: maximum number of option trials before giving up.

    Returns:
        ``(status, chosen, nodes)`` where ``chosen`` lists option indices in
        the order they were selected (empty unless ``status == FOUND``).
    """
    n_opts = len(offsets) - 1
    n_nodes = (n_items + 1) + len(items) + n_opts + 1
    top = [0] * n_nodes
    ulink = list(range(n_nodes))
    dlink = list(range(n_nodes))
    opt_of = [-1] * n_nodes
    llink = [0] * (n_items + 1)
    rlink = [0] * (n_items + 1)
    length = [0] * (n_items + 1)
    for i in range(n_items + 1):
        llink[i] = i - 1 if i > 0 else n_items
        rlink[i] = i + 1 if i < n_items else 0

    node = n_items + 1
    top[node] = 0
    last_spacer = node
    node += 1
    for o in range(n_opts):
        first = node
        for t in range(offsets[o], offsets[o + 1]):
            it = items[t] + 1
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

    def cover(i):
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

    def uncover(i):
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

    x = [0] * (n_items + 1)
    level = 0
    nodes = 0
    state = 2
    i = 0
    while True:
        if state == 2:
            if rlink[0] == 0:
                return FOUND, [opt_of[x[m]] for m in range(level)], nodes
            # minimum remaining values, first item wins ties
            best = n_opts + 1
            j = rlink[0]
            while j != 0:
                if length[j] < best:
                    best = length[j]
                    i = j
                    if best == 0:
                        break
                j = rlink[j]
            cover(i)
            x[level] = dlink[i]
            state = 5
        if state == 5:
            xl = x[level]
            if xl == i:
                uncover(i)
                state = 8
            else:
                nodes += 1
                if nodes > budget:
                    return BUDGET, [], nodes
                p = xl + 1
                while p != xl:
                    j = top[p]
                    if j <= 0:
                        p = ulink[p]
                    else:
                        cover(j)
                        p += 1
                level += 1
                state = 2
                continue
        if state == 8:
            if level == 0:
                return EXHAUSTED, [], nodes
            level -= 1
            # retry the next option at this level
            xl = x[level]
            p = xl - 1
            while p != xl:
                j = top[p]
                if j <= 0:
                    p = dlink[p]
                else:
                    uncover(j)
                    p -= 1
            i = top[xl]
            x[level] = dlink[xl]
            state = 5


class _OutOfBudget(Exception):
    pass


def bicolor_search(v, k, offsets, pairs, budget, mode, target):
    """Backtracking search for strict k-bicolorings of a triple system.

    Points are colored in index order; a point may only open the next unused
    color, so each coloring is visited once up to relabeling. When two points
    of a triple are colored, the third point's domain is narrowed at once.

    Args:
        v: number of points.
        k: number of colors.
        offsets, pairs: for point ``p``, the triples through ``p`` are
            ``{p, pairs[2t], pairs[2t+1]}`` for ``t`` in
            ``range(offsets[p], offsets[p+1])``.
        budget: node limit.
        mode: 0 collects every pattern, 1 stops at the first bicoloring,
            2 stops at the first bicoloring whose pattern equals ``target``.
        target: sorted class sizes, used when ``mode == 2``.

    Returns:
        ``(status, found, nodes)``; ``found`` is a list of
        ``(pattern, coloring)`` pairs with the lexicographically least
        coloring for each pattern, in discovery order.
    """
    full = (1 << k) - 1
    col = [-1] * v
    dom = [full] * v
    counts = [0] * k
    trail = []
    seen = {}
    found = []
    target = tuple(target) if target is not None else None
    nodes = 0
    stop = False

    def rec(p, used):
        nonlocal nodes, stop
        if p == v:
            if used == k:
                pattern = tuple(sorted(counts))
                if pattern not in seen:
                    seen[pattern] = True
                    if mode != 2 or pattern == target:
                        found.append((pattern, list(col)))
                if mode == 1 or (mode == 2 and pattern == target):
                    stop = True
            return
        d = dom[p]
        top_color = used if used < k else k - 1
        for c in range(top_color + 1):
            if not (d >> c) & 1:
                continue
            new_used = used + 1 if c == used else used
            if k - new_used > v - p - 1:
                continue
            nodes += 1
            if nodes > budget:
                raise _OutOfBudget
            col[p] = c
            counts[c] += 1
            mark = len(trail)
            ok = True
            bit = 1 << c
            for t in range(offsets[p], offsets[p + 1]):
                q = pairs[2 * t]
                r = pairs[2 * t + 1]
                cq = col[q]
                cr = col[r]
                if cq >= 0 and cr >= 0:
                    if (cq == c and cr == c) or (cq != c and cr != c and cq != cr):
                        ok = False
                        break
                    continue
                if cq < 0 and cr < 0:
                    continue
                if cq < 0:
                    q, cq = r, cr
                    r = pairs[2 * t]
                else:
                    r = pairs[2 * t + 1]
                # q colored cq, r free
                allowed = (full & ~bit) if cq == c else (bit | (1 << cq))
                nd = dom[r] & allowed
                if nd != dom[r]:
                    trail.append((r, dom[r]))
                    dom[r] = nd
                    if nd == 0:
                        ok = False
                        break
            if ok:
                rec(p + 1, new_used)
            while len(trail) > mark:
                r, old = trail.pop()
                dom[r] = old
            counts[c] -= 1
            col[p] = -1
            if stop:
                return

    try:
        rec(0, 0)
    except _OutOfBudget:
        return BUDGET, found, nodes
    return (FOUND if stop else EXHAUSTED), found, nodes
