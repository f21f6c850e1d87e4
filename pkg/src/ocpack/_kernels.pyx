# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels.

Operation-for-operation mirror of ocpack._pykernels (same scan orders, same
tie-breaking), so both backends produce identical results. The BFS kernels
take CSR adjacency and work for any n; the bitset kernels (mis_exact,
mis_bruteforce, iocp_exact, independent_set_of_size) use 64-bit masks and
are dispatched only for n <= 64. Keep this file in lockstep with
_pykernels.py when changing anything there.
"""

import numpy as np

cimport numpy as cnp
from libc.stdint cimport int32_t, int64_t, uint64_t

cnp.import_array()

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

BACKEND_NAME = "compiled"


cdef inline int _popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef inline int _lowest(uint64_t x) nogil:
    return __builtin_ctzll(x)


def bfs_multi(int n, int32_t[::1] indptr, int32_t[::1] indices, int32_t[::1] sources):
    """Multi-source BFS distances; -1 marks unreachable vertices."""
    dist_arr = np.full(n, -1, dtype=np.int32)
    queue_arr = np.empty(n, dtype=np.int32)
    cdef int32_t[::1] dist = dist_arr
    cdef int32_t[::1] queue = queue_arr
    cdef Py_ssize_t head = 0, tail = 0
    cdef int i, u, v, du
    cdef int32_t s
    for i in range(sources.shape[0]):
        s = sources[i]
        if dist[s] == -1:
            dist[s] = 0
            queue[tail] = s
            tail += 1
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u] + 1
        for i in range(indptr[u], indptr[u + 1]):
            v = indices[i]
            if dist[v] == -1:
                dist[v] = du
                queue[tail] = v
                tail += 1
    return dist_arr


cdef void _bfs_tree(int n, int32_t[::1] indptr, int32_t[::1] indices, int root,
                    int32_t[::1] dist, int32_t[::1] parent, int32_t[::1] queue) nogil:
    cdef int i, u, v, du
    cdef Py_ssize_t head = 0, tail = 0
    for i in range(n):
        dist[i] = -1
        parent[i] = -1
    dist[root] = 0
    queue[tail] = root
    tail += 1
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u] + 1
        for i in range(indptr[u], indptr[u + 1]):
            v = indices[i]
            if dist[v] == -1:
                dist[v] = du
                parent[v] = u
                queue[tail] = v
                tail += 1


def _reconstruct_cycle(int32_t[::1] parent, int x, int y):
    px = []
    c = x
    while c != -1:
        px.append(c)
        c = parent[c]
    py = []
    c = y
    while c != -1:
        py.append(c)
        c = parent[c]
    px.reverse()
    return px + py[:-1]


def _valid_induced_cycle(int n, int32_t[::1] indptr, int32_t[::1] indices, cycle):
    cdef int length = len(cycle)
    if len(set(cycle)) != length:
        return False
    position_arr = np.full(n, -1, dtype=np.int32)
    cdef int32_t[::1] position = position_arr
    cdef int i, u, w, j, before, after, in_cycle
    for i in range(length):
        position[<int> cycle[i]] = i
    for i in range(length):
        u = cycle[i]
        before = cycle[length - 1] if i == 0 else cycle[i - 1]
        after = cycle[0] if i == length - 1 else cycle[i + 1]
        in_cycle = 0
        for j in range(indptr[u], indptr[u + 1]):
            w = indices[j]
            if position[w] == -1:
                continue
            if w != before and w != after:
                return False
            in_cycle += 1
        if in_cycle != 2:
            return False
    return True


def shortest_odd_cycle(int n, int32_t[::1] indptr, int32_t[::1] indices):
    """Vertex list of a shortest odd cycle, or None if the graph is bipartite.

    Same candidate order and strict-improvement rule as the pure kernel: BFS
    from every vertex ascending, edges x < y with equal root distance, the
    first global minimum's parent tree is saved for reconstruction.
    """
    dist_arr = np.zeros(n, dtype=np.int32)
    parent_arr = np.zeros(n, dtype=np.int32)
    queue_arr = np.zeros(n, dtype=np.int32)
    cdef int32_t[::1] dist = dist_arr
    cdef int32_t[::1] parent = parent_arr
    cdef int32_t[::1] queue = queue_arr
    cdef int best_len = -1
    cdef int v, x, y, i, dx, length
    best = None
    for v in range(n):
        _bfs_tree(n, indptr, indices, v, dist, parent, queue)
        for x in range(n):
            dx = dist[x]
            if dx < 0:
                continue
            for i in range(indptr[x], indptr[x + 1]):
                y = indices[i]
                if y <= x or dist[y] != dx:
                    continue
                length = 2 * dx + 1
                if best_len == -1 or length < best_len:
                    best_len = length
                    best = (x, y, parent_arr.copy())
    if best is None:
        return None
    bx, by, saved = best
    cdef int32_t[::1] saved_view = saved
    cycle = _reconstruct_cycle(saved_view, bx, by)
    if len(cycle) == best_len and _valid_induced_cycle(n, indptr, indices, cycle):
        return cycle
    for v in range(n):
        _bfs_tree(n, indptr, indices, v, dist, parent, queue)
        for x in range(n):
            dx = dist[x]
            if dx < 0 or 2 * dx + 1 != best_len:
                continue
            for i in range(indptr[x], indptr[x + 1]):
                y = indices[i]
                if y <= x or dist[y] != dx:
                    continue
                cycle = _reconstruct_cycle(parent, x, y)
                if len(cycle) == best_len and _valid_induced_cycle(n, indptr, indices, cycle):
                    return cycle
    raise AssertionError("no reconstruction of a minimal odd cycle validated")


def mis_exact(int n, bits, weights):
    """Exact maximum-weight independent set as (weight, bitmask).

    Memoized branch recursion identical to the pure kernel: component split,
    isolated vertices taken free, branch on the maximum-degree vertex (ties
    to the lowest index), include branch wins weight ties.
    """
    if n == 0:
        return 0, 0
    if n > 64:
        raise ValueError(f"compiled bitset kernel limited to n <= 64, got {n}")
    cdef uint64_t[64] ubits
    cdef int64_t[64] uweights
    cdef int i
    for i in range(n):
        ubits[i] = bits[i]
        uweights[i] = weights[i]
    memo = {}
    cdef uint64_t full = (<uint64_t> 0xFFFFFFFFFFFFFFFF) >> (64 - n)
    result = _mis_solve(full, ubits, uweights, memo)
    return result


cdef object _mis_solve(uint64_t mask, uint64_t* bits, int64_t* weights, dict memo):
    if mask == 0:
        return (0, 0)
    cached = memo.get(mask)
    if cached is not None:
        return cached
    cdef uint64_t low, comp, frontier, grown, m, b, free_mask, pbit, nb
    cdef int v, deg, pivot, pivot_deg
    cdef int64_t free_weight, w_in, w_out
    low = mask & (~mask + 1)
    comp = low
    frontier = low
    while frontier:
        grown = comp
        m = frontier
        while m:
            b = m & (~m + 1)
            m ^= b
            grown |= bits[_lowest(b)] & mask
        frontier = grown & ~comp
        comp = grown
    if comp != mask:
        w1, s1 = _mis_solve(comp, bits, weights, memo)
        w2, s2 = _mis_solve(mask ^ comp, bits, weights, memo)
        result = (w1 + w2, s1 | s2)
    else:
        pivot = -1
        pivot_deg = -1
        free_weight = 0
        free_mask = 0
        m = mask
        while m:
            b = m & (~m + 1)
            m ^= b
            v = _lowest(b)
            deg = _popcount(bits[v] & mask)
            if deg == 0:
                free_weight += weights[v]
                free_mask |= b
            elif deg > pivot_deg:
                pivot = v
                pivot_deg = deg
        if pivot == -1:
            result = (free_weight, free_mask)
        else:
            pbit = (<uint64_t> 1) << pivot
            w_in, s_in = _mis_solve(mask & ~bits[pivot] & ~pbit, bits, weights, memo)
            w_in += weights[pivot]
            s_in_mask = s_in | pbit
            w_out, s_out = _mis_solve(mask & ~pbit, bits, weights, memo)
            result = (w_in, s_in_mask) if w_in >= w_out else (w_out, s_out)
    memo[mask] = result
    return result


def mis_bruteforce(int n, bits, weights):
    """Exhaustive maximum-weight independent set as (weight, bitmask).

    Same 2^n dynamic program as the pure kernel; n is capped at 20.
    """
    if n > 20:
        raise ValueError(f"exhaustive scan infeasible for n={n}")
    cdef uint64_t[20] ubits
    cdef int64_t[20] uweights
    cdef int i
    for i in range(n):
        ubits[i] = bits[i]
        uweights[i] = weights[i]
    cdef Py_ssize_t size = (<Py_ssize_t> 1) << n
    weight_arr = np.zeros(size, dtype=np.int64)
    indep_arr = np.zeros(size, dtype=np.uint8)
    cdef int64_t[::1] weight_of = weight_arr
    cdef cnp.uint8_t[::1] independent = indep_arr
    independent[0] = 1
    cdef int64_t best_weight = 0
    cdef uint64_t best_mask = 0
    cdef uint64_t mask, low, rest
    cdef int v
    cdef Py_ssize_t im
    for im in range(1, size):
        mask = <uint64_t> im
        low = mask & (~mask + 1)
        v = _lowest(low)
        rest = mask ^ low
        weight_of[im] = weight_of[<Py_ssize_t> rest] + uweights[v]
        if independent[<Py_ssize_t> rest] and not (ubits[v] & rest):
            independent[im] = 1
            if weight_of[im] > best_weight:
                best_weight = weight_of[im]
                best_mask = mask
    return best_weight, best_mask


cdef int _components_all_odd(uint64_t mask, uint64_t* bits, uint64_t* stack) nogil:
    cdef int count = 0, size, u, top
    cdef uint64_t seen = 0, m, b, nb, nbit
    m = mask
    while m:
        b = m & (~m + 1)
        size = 0
        top = 0
        stack[top] = b
        top += 1
        seen |= b
        while top:
            top -= 1
            u = _lowest(stack[top])
            size += 1
            nb = bits[u] & mask & ~seen
            while nb:
                nbit = nb & (~nb + 1)
                nb ^= nbit
                seen |= nbit
                stack[top] = nbit
                top += 1
        if size % 2 == 0:
            return -1
        count += 1
        m = mask & ~seen
    return count


cdef void _iocp_rec(int i, uint64_t mask, int chosen_count, int n,
                    uint64_t* bits, int* max_nbr, int* deg,
                    uint64_t* stack, int* best) nogil:
    cdef uint64_t m, b, nb
    cdef int u, count, ok
    if chosen_count + (n - i) < 3 * (best[0] + 1):
        return
    if i == n:
        if mask:
            m = mask
            while m:
                b = m & (~m + 1)
                m ^= b
                if deg[_lowest(b)] != 2:
                    return
            count = _components_all_odd(mask, bits, stack)
            if count > best[0]:
                best[0] = count
        return
    m = mask
    while m:
        b = m & (~m + 1)
        m ^= b
        u = _lowest(b)
        if max_nbr[u] == i - 1 and deg[u] < 2:
            return
    nb = bits[i] & mask
    if _popcount(nb) <= 2:
        ok = 1
        m = nb
        while m:
            b = m & (~m + 1)
            m ^= b
            if deg[_lowest(b)] >= 2:
                ok = 0
                break
        if ok:
            m = nb
            while m:
                b = m & (~m + 1)
                m ^= b
                deg[_lowest(b)] += 1
            deg[i] = _popcount(nb)
            _iocp_rec(i + 1, mask | ((<uint64_t> 1) << i), chosen_count + 1,
                      n, bits, max_nbr, deg, stack, best)
            deg[i] = 0
            m = nb
            while m:
                b = m & (~m + 1)
                m ^= b
                deg[_lowest(b)] -= 1
    _iocp_rec(i + 1, mask, chosen_count, n, bits, max_nbr, deg, stack, best)


def iocp_exact(int n, bits):
    """Largest number of components over induced subgraphs in which every
    vertex has degree exactly 2 and every component is an odd cycle."""
    if n == 0:
        return 0
    if n > 64:
        raise ValueError(f"compiled bitset kernel limited to n <= 64, got {n}")
    cdef uint64_t[64] ubits
    cdef int[64] max_nbr
    cdef int[64] deg
    cdef uint64_t[64] stack
    cdef int i, best = 0
    for i in range(n):
        ubits[i] = bits[i]
        max_nbr[i] = (<object> bits[i]).bit_length() - 1
        deg[i] = 0
    _iocp_rec(0, 0, 0, n, ubits, max_nbr, deg, stack, &best)
    return best


cdef uint64_t _size_rec(uint64_t allowed, int need, uint64_t* bits, int* found) nogil:
    cdef uint64_t m, b, sub
    cdef int v
    if need == 1:
        if allowed:
            found[0] = 1
            return allowed & (~allowed + 1)
        found[0] = 0
        return 0
    m = allowed
    while m:
        if _popcount(m) < need:
            found[0] = 0
            return 0
        b = m & (~m + 1)
        m ^= b
        v = _lowest(b)
        sub = _size_rec(m & ~bits[v], need - 1, bits, found)
        if found[0]:
            return sub | b
    found[0] = 0
    return 0


def independent_set_of_size(int n, bits, int size):
    """Bitmask of the lexicographically first independent set of the given
    size, or None if none exists."""
    if size == 0:
        return 0
    if size > n:
        return None
    if n > 64:
        raise ValueError(f"compiled bitset kernel limited to n <= 64, got {n}")
    cdef uint64_t[64] ubits
    cdef int i, found = 0
    for i in range(n):
        ubits[i] = bits[i]
    cdef uint64_t full = (<uint64_t> 0xFFFFFFFFFFFFFFFF) >> (64 - n)
    cdef uint64_t result = _size_rec(full, size, ubits, &found)
    if not found:
        return None
    return result
