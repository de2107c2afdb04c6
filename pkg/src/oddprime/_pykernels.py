"""Pure-Python kernels. Reference for, and fallback to, the compiled ``_kernels``.

Graphs arrive as 0-based neighbor bitmasks (``adj[v]`` has bit ``w`` set iff
``v ~ w``); at most 64 vertices so both backends agree on limits.
"""

import math

MAX_ORDER = 64

FOUND = 0
EXHAUSTED = 1
BUDGET_EXCEEDED = 3


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _clique_cover_size(adj, cand):
    # greedy partition of cand into cliques; its size bounds the independence number
    cliques = []
    for v in _bits(cand):
        for idx, c in enumerate(cliques):
            if c & adj[v] == c:
                cliques[idx] = c | (1 << v)
                break
        else:
            cliques.append(1 << v)
    return len(cliques)


def _greedy_independent(adj, cand):
    size = 0
    while cand:
        v = min(_bits(cand), key=lambda u: (adj[u] & cand).bit_count())
        size += 1
        cand &= ~(adj[v] | (1 << v))
    return size


def independence_number(adj):
    n = len(adj)
    if n > MAX_ORDER:
        raise ValueError(f"order {n} exceeds kernel limit {MAX_ORDER}")
    full = (1 << n) - 1
    best = _greedy_independent(adj, full)

    def expand(cand, size):
        nonlocal best
        # vertices of degree <= 1 inside cand can always be taken
        while cand:
            low = None
            for v in _bits(cand):
                if (adj[v] & cand).bit_count() <= 1:
                    low = v
                    break
            if low is None:
                break
            size += 1
            cand &= ~(adj[low] | (1 << low))
        if not cand:
            if size > best:
                best = size
            return
        if size + _clique_cover_size(adj, cand) <= best:
            return
        v = max(_bits(cand), key=lambda u: (adj[u] & cand).bit_count())
        expand(cand & ~(adj[v] | (1 << v)), size + 1)
        expand(cand & ~(1 << v), size)

    expand(full, 0)
    return best


class _BudgetExceeded(Exception):
    pass


def search_labeling(adj, order, budget):
    """Backtracking search for an odd prime labeling.

    Vertices are filled in ``order``. Label index ``i`` stands for the value
    ``2i + 1``; index 0 (the label 1) is tried last at every vertex. Returns
    ``(status, labels, nodes)`` where ``labels[v]`` is the odd label of vertex
    ``v`` when ``status == FOUND``.
    """
    n = len(adj)
    if n > MAX_ORDER:
        raise ValueError(f"order {n} exceeds kernel limit {MAX_ORDER}")
    values = [2 * i + 1 for i in range(n)]
    full = (1 << n) - 1
    coprime = [sum(1 << j for j in range(n) if math.gcd(values[i], values[j]) == 1) for i in range(n)]
    mult3 = sum(1 << j for j in range(n) if values[j] % 3 == 0)
    mult5 = sum(1 << j for j in range(n) if values[j] % 5 == 0)
    label = [-1] * n
    allowed = [full] * n
    nodes = 0

    def rec(depth, used):
        nonlocal nodes
        if depth == n:
            return True
        v = order[depth]
        dom = allowed[v] & ~used
        rest = order[depth + 1 :]
        for li in list(_bits(dom & ~1)) + ([0] if dom & 1 else []):
            nodes += 1
            if nodes > budget:
                raise _BudgetExceeded
            saved = []
            for w in _bits(adj[v]):
                if label[w] < 0:
                    saved.append((w, allowed[w]))
                    allowed[w] &= coprime[li]
            now_used = used | (1 << li)
            free = ~now_used
            ok = True
            hosts3 = hosts5 = 0
            for w in rest:
                d = allowed[w] & free
                if not d:
                    ok = False
                    break
                if d & mult3:
                    hosts3 += 1
                if d & mult5:
                    hosts5 += 1
            if ok and (mult3 & free).bit_count() <= hosts3 and (mult5 & free).bit_count() <= hosts5:
                label[v] = li
                if rec(depth + 1, now_used):
                    return True
                label[v] = -1
            for w, mask in saved:
                allowed[w] = mask
        return False

    try:
        found = rec(0, 0)
    except _BudgetExceeded:
        return BUDGET_EXCEEDED, [], nodes
    if found:
        return FOUND, [values[li] for li in label], nodes
    return EXHAUSTED, [], nodes
