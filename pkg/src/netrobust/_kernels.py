"""Shortest-path kernels over CSR arrays.

Compiled with numba when it is importable; otherwise the same functions run
as plain Python (correct, but far slower).

CSR layout: neighbours of ``v`` are ``indices[indptr[v]:indptr[v+1]]`` and
``slot_edge`` gives the edge id of each slot. ``alive`` masks removed edges.
"""

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


@njit(cache=True)
def _accumulate_from(s, indptr, indices, slot_edge, alive, dist, sigma, delta, stack,
                     queue, node_bc, edge_bc):
    """One Brandes single-source pass; adds ordered-pair dependencies of ``s``."""
    dist[s] = 0
    sigma[s] = 1.0
    head = 0
    tail = 0
    queue[tail] = s
    tail += 1
    top = 0
    while head < tail:
        v = queue[head]
        head += 1
        stack[top] = v
        top += 1
        for p in range(indptr[v], indptr[v + 1]):
            if not alive[slot_edge[p]]:
                continue
            w = indices[p]
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue[tail] = w
                tail += 1
            if dist[w] == dist[v] + 1:
                sigma[w] += sigma[v]
    for i in range(top - 1, -1, -1):
        w = stack[i]
        coeff = (1.0 + delta[w]) / sigma[w]
        for p in range(indptr[w], indptr[w + 1]):
            if not alive[slot_edge[p]]:
                continue
            v = indices[p]
            if dist[v] == dist[w] - 1:
                c = sigma[v] * coeff
                edge_bc[slot_edge[p]] += c
                delta[v] += c
        if w != s:
            node_bc[w] += delta[w]
    # reset only what this pass touched
    for i in range(top):
        w = stack[i]
        dist[w] = -1
        sigma[w] = 0.0
        delta[w] = 0.0


@njit(cache=True)
def brandes(n, m, indptr, indices, slot_edge, alive, sources):
    """Node and edge betweenness summed over ``sources`` (ordered pairs)."""
    node_bc = np.zeros(n)
    edge_bc = np.zeros(m)
    dist = np.full(n, -1, dtype=np.int64)
    sigma = np.zeros(n)
    delta = np.zeros(n)
    stack = np.empty(n, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    for s in sources:
        _accumulate_from(s, indptr, indices, slot_edge, alive, dist, sigma, delta,
                         stack, queue, node_bc, edge_bc)
    return node_bc, edge_bc


@njit(cache=True)
def _flood(start, label, comp, indptr, indices, slot_edge, alive, queue):
    """Label the component of ``start``; returns its node count (nodes in queue[:count])."""
    comp[start] = label
    queue[0] = start
    head = 0
    tail = 1
    while head < tail:
        v = queue[head]
        head += 1
        for p in range(indptr[v], indptr[v + 1]):
            if alive[slot_edge[p]]:
                w = indices[p]
                if comp[w] != label:
                    comp[w] = label
                    queue[tail] = w
                    tail += 1
    return tail


@njit(cache=True)
def _component_modularity(comp, ncomp, eu, ev, deg, m):
    """Modularity of the component partition, scored on the original edge set."""
    inner = np.zeros(ncomp)
    tot = np.zeros(ncomp)
    for v in range(comp.shape[0]):
        tot[comp[v]] += deg[v]
    for e in range(eu.shape[0]):
        if comp[eu[e]] == comp[ev[e]]:
            inner[comp[eu[e]]] += 1.0
    two_m = 2.0 * m
    q = 0.0
    for c in range(ncomp):
        q += inner[c] / m - (tot[c] / two_m) ** 2
    return q


@njit(cache=True)
def girvan_newman_run(n, indptr, indices, slot_edge, eu, ev, tie_rtol, exhaustive):
    """Remove max-betweenness edges, scoring each split.

    Stops at the first split that does not raise modularity above the
    previous split's, or runs until no edges remain when ``exhaustive``.

    Returns ``(best_comp, best_q, q_trace, ncomp_trace, removal_order)``;
    the traces hold one entry per evaluated partition (the initial one and
    each removal that increased the component count).
    """
    m = eu.shape[0]
    alive = np.ones(m, dtype=np.bool_)
    deg = np.zeros(n)
    for v in range(n):
        deg[v] = indptr[v + 1] - indptr[v]
    comp = np.full(n, -1, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    ncomp = 0
    for v in range(n):
        if comp[v] < 0:
            _flood(v, ncomp, comp, indptr, indices, slot_edge, alive, queue)
            ncomp += 1

    all_sources = np.arange(n)
    _, eb = brandes(n, m, indptr, indices, slot_edge, alive, all_sources)

    q_trace = np.empty(n + 1)
    ncomp_trace = np.empty(n + 1, dtype=np.int64)
    removal_order = np.empty(m, dtype=np.int64)
    q = _component_modularity(comp, ncomp, eu, ev, deg, m)
    q_trace[0] = q
    ncomp_trace[0] = ncomp
    n_eval = 1
    best_q = q
    best_comp = comp.copy()

    node_bc = np.zeros(n)
    dist = np.full(n, -1, dtype=np.int64)
    sigma = np.zeros(n)
    delta = np.zeros(n)
    stack = np.empty(n, dtype=np.int64)
    members = np.empty(n, dtype=np.int64)
    marker = np.full(n, -1, dtype=np.int64)

    for step in range(m):
        top = -1.0
        for e in range(m):
            if alive[e] and eb[e] > top:
                top = eb[e]
        cutoff = top - tie_rtol * max(top, 1.0)
        chosen = -1
        for e in range(m):
            if alive[e] and eb[e] >= cutoff:
                chosen = e
                break
        removal_order[step] = chosen
        alive[chosen] = False
        u = eu[chosen]
        v = ev[chosen]

        # re-flood from u with a fresh label, then v if it was cut off
        size_u = _flood(u, -2 - step, marker, indptr, indices, slot_edge, alive, queue)
        for i in range(size_u):
            members[i] = queue[i]
        split = marker[v] != -2 - step
        size = size_u
        if split:
            size_v = _flood(v, -2 - step, marker, indptr, indices, slot_edge, alive, queue)
            for i in range(size_v):
                members[size + i] = queue[i]
                comp[queue[i]] = ncomp
            ncomp += 1
            size += size_v

        # betweenness changes only inside the old component
        for i in range(size):
            w = members[i]
            for p in range(indptr[w], indptr[w + 1]):
                eb[slot_edge[p]] = 0.0
        for i in range(size):
            _accumulate_from(members[i], indptr, indices, slot_edge, alive, dist, sigma,
                             delta, stack, queue, node_bc, eb)
        for i in range(size):
            w = members[i]
            for p in range(indptr[w], indptr[w + 1]):
                if indices[p] > w:
                    eb[slot_edge[p]] *= 0.5

        if split:
            q = _component_modularity(comp, ncomp, eu, ev, deg, m)
            q_trace[n_eval] = q
            ncomp_trace[n_eval] = ncomp
            n_eval += 1
            if q > best_q + 1e-12:
                best_q = q
                best_comp = comp.copy()
            if not exhaustive and not q > q_trace[n_eval - 2] + 1e-12:
                return best_comp, best_q, q_trace[:n_eval], ncomp_trace[:n_eval], \
                    removal_order[:step + 1]
    return best_comp, best_q, q_trace[:n_eval], ncomp_trace[:n_eval], removal_order
