"""Pure-Python kernels.

These are the reference implementations of the hot inner loops. The compiled
module ocpack._kernels mirrors them operation for operation (same scan orders,
same tie-breaking), so either backend produces identical results. Keep the two
files in lockstep when changing anything here.

Bitset kernels represent vertex sets as Python integers (bit i = vertex i) and
therefore work for any n; the compiled versions are limited to n <= 64 and the
dispatch layer falls back to these for larger graphs.
"""

from collections import deque

BACKEND_NAME = "pure"


def bfs_multi(n, adj, sources):
    """Multi-source BFS distances; -1 marks unreachable vertices."""
    dist = [-1] * n
    queue = deque()
    for s in sources:
        if dist[s] == -1:
            dist[s] = 0
            queue.append(s)
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in adj[u]:
            if dist[v] == -1:
                dist[v] = du
                queue.append(v)
    return dist


def _bfs_tree(n, adj, root, dist, parent):
    for i in range(n):
        dist[i] = -1
        parent[i] = -1
    dist[root] = 0
    queue = deque([root])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in adj[u]:
            if dist[v] == -1:
                dist[v] = du
                parent[v] = u
                queue.append(v)


def _reconstruct_cycle(parent, x, y):
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


def _valid_induced_cycle(adj, cycle):
    length = len(cycle)
    if len(set(cycle)) != length:
        return False
    position = {v: i for i, v in enumerate(cycle)}
    for i, u in enumerate(cycle):
        before = cycle[i - 1]
        after = cycle[(i + 1) % length]
        in_cycle = 0
        for w in adj[u]:
            j = position.get(w)
            if j is None:
                continue
            if w != before and w != after:
                return False
            in_cycle += 1
        if in_cycle != 2:
            return False
    return True


def shortest_odd_cycle(n, adj):
    """Vertex list of a shortest odd cycle, or None if the graph is bipartite.

    Runs a BFS from every vertex; every edge xy with dist(v,x) == dist(v,y)
    closes an odd walk of length 2 dist + 1, and the global minimum over all
    (v, xy) is the odd girth. The walk endpoints' parent paths are
    reconstructed and post-validated to form a simple induced cycle; on a
    validation failure the search continues with the next candidate of equal
    length (this is unreachable for a globally minimal candidate, but guarded
    anyway).
    """
    dist = [0] * n
    parent = [0] * n
    best_len = -1
    best = None
    for v in range(n):
        _bfs_tree(n, adj, v, dist, parent)
        for x in range(n):
            dx = dist[x]
            if dx < 0:
                continue
            for y in adj[x]:
                if y <= x or dist[y] != dx:
                    continue
                length = 2 * dx + 1
                if best_len == -1 or length < best_len:
                    best_len = length
                    best = (v, x, y, parent.copy())
    if best is None:
        return None
    _, x, y, saved = best
    cycle = _reconstruct_cycle(saved, x, y)
    if len(cycle) == best_len and _valid_induced_cycle(adj, cycle):
        return cycle
    for v in range(n):
        _bfs_tree(n, adj, v, dist, parent)
        for x in range(n):
            dx = dist[x]
            if dx < 0 or 2 * dx + 1 != best_len:
                continue
            for y in adj[x]:
                if y <= x or dist[y] != dx:
                    continue
                cycle = _reconstruct_cycle(parent, x, y)
                if len(cycle) == best_len and _valid_induced_cycle(adj, cycle):
                    return cycle
    raise AssertionError("no reconstruction of a minimal odd cycle validated")


def mis_exact(n, bits, weights):
    """Exact maximum-weight independent set as (weight, bitmask).

    Memoized branch recursion: connected components are solved independently,
    isolated vertices are always taken, and otherwise the recursion branches
    on the vertex of maximum degree within the current candidate set (ties to
    the lowest index; the include branch wins ties on weight).
    """
    if n == 0:
        return 0, 0
    memo = {}

    def solve(mask):
        if mask == 0:
            return 0, 0
        cached = memo.get(mask)
        if cached is not None:
            return cached
        low = mask & -mask
        comp = low
        frontier = low
        while frontier:
            grown = comp
            m = frontier
            while m:
                b = m & -m
                m ^= b
                grown |= bits[b.bit_length() - 1] & mask
            frontier = grown & ~comp
            comp = grown
        if comp != mask:
            w1, s1 = solve(comp)
            w2, s2 = solve(mask ^ comp)
            result = (w1 + w2, s1 | s2)
        else:
            pivot = -1
            pivot_deg = -1
            free_weight = 0
            free_mask = 0
            m = mask
            while m:
                b = m & -m
                m ^= b
                v = b.bit_length() - 1
                deg = (bits[v] & mask).bit_count()
                if deg == 0:
                    free_weight += weights[v]
                    free_mask |= b
                elif deg > pivot_deg:
                    pivot = v
                    pivot_deg = deg
            if pivot == -1:
                result = (free_weight, free_mask)
            else:
                pbit = 1 << pivot
                w_in, s_in = solve(mask & ~bits[pivot] & ~pbit)
                w_in += weights[pivot]
                s_in |= pbit
                w_out, s_out = solve(mask & ~pbit)
                result = (w_in, s_in) if w_in >= w_out else (w_out, s_out)
        memo[mask] = result
        return result

    return solve((1 << n) - 1)


def mis_bruteforce(n, bits, weights):
    """Exhaustive maximum-weight independent set as (weight, bitmask).

    Visits every one of the 2^n vertex subsets; independence of a subset is
    derived from the subset without its lowest vertex. Intended as a test
    oracle for small n, independent of the branch-and-bound above.
    """
    if n > 20:
        raise ValueError(f"exhaustive scan infeasible for n={n}")
    size = 1 << n
    weight_of = [0] * size
    independent = bytearray(size)
    independent[0] = 1
    best_weight = 0
    best_mask = 0
    for mask in range(1, size):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        weight_of[mask] = weight_of[rest] + weights[v]
        if independent[rest] and not bits[v] & rest:
            independent[mask] = 1
            if weight_of[mask] > best_weight:
                best_weight = weight_of[mask]
                best_mask = mask
    return best_weight, best_mask


def iocp_exact(n, bits):
    """Largest number of components over induced subgraphs in which every
    vertex has degree exactly 2 and every component is an odd cycle.

    Subsets are enumerated by a vertex-by-vertex include/exclude recursion
    that prunes as soon as a chosen vertex exceeds induced degree 2 or can no
    longer reach degree 2 (all its potential neighbors are decided).
    """
    if n == 0:
        return 0
    max_nbr = [bits[v].bit_length() - 1 for v in range(n)]
    deg = [0] * n
    best = 0

    def components_all_odd(mask):
        count = 0
        seen = 0
        m = mask
        while m:
            b = m & -m
            start = b.bit_length() - 1
            size = 0
            stack = [start]
            seen |= b
            while stack:
                u = stack.pop()
                size += 1
                nb = bits[u] & mask & ~seen
                while nb:
                    nbit = nb & -nb
                    nb ^= nbit
                    seen |= nbit
                    stack.append(nbit.bit_length() - 1)
            if size % 2 == 0:
                return -1
            count += 1
            m = mask & ~seen
        return count

    def rec(i, mask, chosen_count):
        nonlocal best
        # Each component needs at least 3 vertices, so this branch cannot
        # beat the current best unless enough vertices remain.
        if chosen_count + (n - i) < 3 * (best + 1):
            return
        if i == n:
            if mask:
                m = mask
                while m:
                    b = m & -m
                    m ^= b
                    if deg[b.bit_length() - 1] != 2:
                        return
                count = components_all_odd(mask)
                if count > best:
                    best = count
            return
        # Vertices whose neighborhood is now fully decided must have reached
        # degree exactly 2.
        m = mask
        while m:
            b = m & -m
            m ^= b
            u = b.bit_length() - 1
            if max_nbr[u] == i - 1 and deg[u] < 2:
                return
        nb = bits[i] & mask
        if nb.bit_count() <= 2:
            ok = True
            m = nb
            while m:
                b = m & -m
                m ^= b
                if deg[b.bit_length() - 1] >= 2:
                    ok = False
                    break
            if ok:
                m = nb
                while m:
                    b = m & -m
                    m ^= b
                    deg[b.bit_length() - 1] += 1
                deg[i] = nb.bit_count()
                rec(i + 1, mask | (1 << i), chosen_count + 1)
                deg[i] = 0
                m = nb
                while m:
                    b = m & -m
                    m ^= b
                    deg[b.bit_length() - 1] -= 1
        rec(i + 1, mask, chosen_count)

    rec(0, 0, 0)
    return best


def independent_set_of_size(n, bits, size):
    """Bitmask of the lexicographically first independent set of the given
    size, or None if none exists. Exhaustive over all candidate subsets."""
    if size == 0:
        return 0
    if size > n:
        return None

    def rec(allowed, need):
        if need == 1:
            if allowed:
                return allowed & -allowed
            return None
        m = allowed
        while m:
            if m.bit_count() < need:
                return None
            b = m & -m
            m ^= b
            v = b.bit_length() - 1
            sub = rec(m & ~bits[v], need - 1)
            if sub is not None:
                return sub | b
        return None

    return rec((1 << n) - 1, size)
