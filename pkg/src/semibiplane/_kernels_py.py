"""Pure-Python kernels for the hot loops.

Interface-identical to the compiled module ``_speedups``; the dispatcher in
``kernels`` picks whichever is available. All tables are flat row-major
sequences: ``gadd[x * k + a]`` is ``x + a`` in G, ``hsub[u * k + w]`` is
``u - w`` in H.
"""

from itertools import product


def semiplanar_witness(values, gadd, hsub, k):
    """First (a, y, count) with count not in {0, 2}, smallest a then smallest
    y; None when the table is semi-planar."""
    for a in range(1, k):
        cnt = [0] * k
        for x in range(k):
            cnt[hsub[values[gadd[x * k + a]] * k + values[x]]] += 1
        for y in range(k):
            c = cnt[y]
            if c and c != 2:
                return (a, y, c)
    return None


def search_tables(k, gadd, gsub, hsub, fix_zero, shard_val, use_pruning, use_fiber_limit):
    """Enumerate value tables of length k in lexicographic order.

    Returns ``(visited, count, found)`` where ``visited`` is the number of
    complete assignments examined, ``count`` the number of semi-planar tables
    among them, and ``found`` those tables as tuples (lexicographic order).

    ``fix_zero`` pins f(0) = 0; ``shard_val >= 0`` pins f(1), which is the
    sharding axis for parallel runs. With ``use_pruning`` the enumeration
    keeps incremental per-(a, y) counts of finished difference pairs and
    backtracks once any count exceeds 2; with ``use_fiber_limit`` (active only
    for k > 4) it backtracks once a partial fiber exceeds k/2. Flags change
    the work done, never the result.
    """
    fiber_on = bool(use_fiber_limit) and k > 4
    if not use_pruning and not fiber_on:
        return _enumerate_plain(k, gadd, hsub, fix_zero, shard_val)

    f = [0] * k
    cnt = [0] * (k * k)  # cnt[a*k + y], a = 0 row unused
    fib = [0] * k
    cap = k // 2
    visited = 0
    count = 0
    found = []
    viol = 0  # number of (a, y) cells currently above 2

    def dfs(x):
        nonlocal visited, count, viol
        if x == k:
            visited += 1
            if use_pruning:
                ok = viol == 0
                if ok:
                    for i in range(k, k * k):
                        if cnt[i] == 1:
                            ok = False
                            break
            else:
                ok = semiplanar_witness(f, gadd, hsub, k) is None
            if ok:
                count += 1
                found.append(tuple(f))
            return
        if x == 0 and fix_zero:
            candidates = (0,)
        elif x == 1 and shard_val >= 0:
            candidates = (shard_val,)
        else:
            candidates = range(k)
        for v in candidates:
            f[x] = v
            fib[v] += 1
            if use_pruning:
                for u in range(x):
                    fu = f[u]
                    i = gsub[x * k + u] * k + hsub[v * k + fu]
                    c = cnt[i] + 1
                    cnt[i] = c
                    if c == 3:
                        viol += 1
                    i = gsub[u * k + x] * k + hsub[fu * k + v]
                    c = cnt[i] + 1
                    cnt[i] = c
                    if c == 3:
                        viol += 1
            prune = (fiber_on and fib[v] > cap) or (use_pruning and viol > 0)
            if not prune:
                dfs(x + 1)
            if use_pruning:
                for u in range(x):
                    fu = f[u]
                    i = gsub[x * k + u] * k + hsub[v * k + fu]
                    c = cnt[i] - 1
                    cnt[i] = c
                    if c == 2:
                        viol -= 1
                    i = gsub[u * k + x] * k + hsub[fu * k + v]
                    c = cnt[i] - 1
                    cnt[i] = c
                    if c == 2:
                        viol -= 1
            fib[v] -= 1

    dfs(0)
    return visited, count, found


def _enumerate_plain(k, gadd, hsub, fix_zero, shard_val):
    # No pruning at all: flat lexicographic enumeration with the direct
    # checker at every leaf. This is the oracle route the pruned search is
    # verified against.
    head0 = (0,) if fix_zero else tuple(range(k))
    head1 = (shard_val,) if shard_val >= 0 else tuple(range(k))
    visited = 0
    count = 0
    found = []
    for v0 in head0:
        for v1 in head1:
            for rest in product(range(k), repeat=k - 2):
                vals = (v0, v1) + rest
                visited += 1
                if semiplanar_witness(vals, gadd, hsub, k) is None:
                    count += 1
                    found.append(vals)
    return visited, count, found
