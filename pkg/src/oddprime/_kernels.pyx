# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same algorithms, results and node counts as ``_pykernels``."""

from libc.string cimport memcpy

ctypedef unsigned long long u64

cdef extern from * nogil:
    int popcount "__builtin_popcountll"(u64)
    int ctz "__builtin_ctzll"(u64)

cdef enum:
    KMAX = 64

MAX_ORDER = KMAX
FOUND = 0
EXHAUSTED = 1
BUDGET_EXCEEDED = 3


cdef inline u64 bit(int v) noexcept nogil:
    return (<u64>1) << v


cdef inline u64 full_mask(int n) noexcept nogil:
    if n == 64:
        return ~(<u64>0)
    return bit(n) - 1


cdef long long _gcd(long long a, long long b) noexcept nogil:
    cdef long long t
    while b:
        t = a % b
        a = b
        b = t
    return a


# ---------------------------------------------------------------- independence

cdef struct MisState:
    int n
    int best
    u64 adj[KMAX]


cdef int _clique_cover_size(MisState* s, u64 cand) noexcept nogil:
    cdef u64 cliques[KMAX]
    cdef int count = 0, idx, v
    cdef bint placed
    while cand:
        v = ctz(cand)
        cand &= cand - 1
        placed = False
        for idx in range(count):
            if cliques[idx] & s.adj[v] == cliques[idx]:
                cliques[idx] |= bit(v)
                placed = True
                break
        if not placed:
            cliques[count] = bit(v)
            count += 1
    return count


cdef int _greedy_independent(MisState* s, u64 cand) noexcept nogil:
    cdef int size = 0, v, best_v, d, best_d
    cdef u64 m
    while cand:
        best_v = -1
        best_d = KMAX + 1
        m = cand
        while m:
            v = ctz(m)
            m &= m - 1
            d = popcount(s.adj[v] & cand)
            if d < best_d:
                best_d = d
                best_v = v
        size += 1
        cand &= ~(s.adj[best_v] | bit(best_v))
    return size


cdef void _expand(MisState* s, u64 cand, int size) noexcept nogil:
    cdef int v, low, best_v, best_d, d
    cdef u64 m
    while cand:
        low = -1
        m = cand
        while m:
            v = ctz(m)
            m &= m - 1
            if popcount(s.adj[v] & cand) <= 1:
                low = v
                break
        if low < 0:
            break
        size += 1
        cand &= ~(s.adj[low] | bit(low))
    if not cand:
        if size > s.best:
            s.best = size
        return
    if size + _clique_cover_size(s, cand) <= s.best:
        return
    best_v = -1
    best_d = -1
    m = cand
    while m:
        v = ctz(m)
        m &= m - 1
        d = popcount(s.adj[v] & cand)
        if d > best_d:
            best_d = d
            best_v = v
    _expand(s, cand & ~(s.adj[best_v] | bit(best_v)), size + 1)
    _expand(s, cand & ~bit(best_v), size)


def independence_number(adj):
    cdef int n = len(adj)
    if n > KMAX:
        raise ValueError(f"order {n} exceeds kernel limit {KMAX}")
    cdef MisState s
    cdef int i
    s.n = n
    for i in range(n):
        s.adj[i] = <u64>adj[i]
    s.best = _greedy_independent(&s, full_mask(n))
    with nogil:
        _expand(&s, full_mask(n), 0)
    return s.best


# ---------------------------------------------------------------- labeling search

cdef struct SearchState:
    int n
    long long nodes
    long long budget
    bint over_budget
    u64 adj[KMAX]
    u64 coprime[KMAX]
    u64 mult3
    u64 mult5
    int order[KMAX]
    int label[KMAX]
    u64 allowed[KMAX]


cdef bint _rec(SearchState* s, int depth, u64 used) noexcept nogil:
    if depth == s.n:
        return True
    cdef int v = s.order[depth]
    cdef u64 dom = s.allowed[v] & ~used
    cdef u64 saved[KMAX]
    cdef u64 cands, now_used, free, d, m
    cdef int li, w, k, hosts3, hosts5
    cdef bint ok, try_one
    memcpy(saved, s.allowed, s.n * sizeof(u64))
    cands = dom & ~(<u64>1)
    try_one = (dom & 1) != 0
    while cands or try_one:
        if cands:
            li = ctz(cands)
            cands &= cands - 1
        else:
            li = 0
            try_one = False
        s.nodes += 1
        if s.nodes > s.budget:
            s.over_budget = True
            return False
        m = s.adj[v]
        while m:
            w = ctz(m)
            m &= m - 1
            if s.label[w] < 0:
                s.allowed[w] &= s.coprime[li]
        now_used = used | bit(li)
        free = ~now_used
        ok = True
        hosts3 = 0
        hosts5 = 0
        for k in range(depth + 1, s.n):
            w = s.order[k]
            d = s.allowed[w] & free
            if not d:
                ok = False
                break
            if d & s.mult3:
                hosts3 += 1
            if d & s.mult5:
                hosts5 += 1
        if ok and popcount(s.mult3 & free) <= hosts3 and popcount(s.mult5 & free) <= hosts5:
            s.label[v] = li
            if _rec(s, depth + 1, now_used):
                return True
            s.label[v] = -1
            if s.over_budget:
                return False
        memcpy(s.allowed, saved, s.n * sizeof(u64))
    return False


def search_labeling(adj, order, budget):
    cdef int n = len(adj)
    if n > KMAX:
        raise ValueError(f"order {n} exceeds kernel limit {KMAX}")
    cdef SearchState s
    cdef int i, j
    cdef bint found
    s.n = n
    s.nodes = 0
    s.budget = budget
    s.over_budget = False
    s.mult3 = 0
    s.mult5 = 0
    for i in range(n):
        s.adj[i] = <u64>adj[i]
        s.order[i] = order[i]
        s.label[i] = -1
        s.allowed[i] = full_mask(n)
        s.coprime[i] = 0
        for j in range(n):
            if _gcd(2 * i + 1, 2 * j + 1) == 1:
                s.coprime[i] |= bit(j)
        if (2 * i + 1) % 3 == 0:
            s.mult3 |= bit(i)
        if (2 * i + 1) % 5 == 0:
            s.mult5 |= bit(i)
    with nogil:
        found = _rec(&s, 0, 0)
    if s.over_budget:
        return BUDGET_EXCEEDED, [], s.nodes
    if found:
        return FOUND, [2 * s.label[i] + 1 for i in range(n)], s.nodes
    return EXHAUSTED, [], s.nodes
