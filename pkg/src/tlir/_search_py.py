"""Pure-Python backtracking kernel for total colorings with local irregularity.

The compiled twin lives in ``_search_c.pyx`` and implements the identical
algorithm; :mod:`tlir._kernel` picks one at import time.

Data layout (all integer sequences, vertices are dense indices ``0..n-1``):

* edges ``0..m-1`` have endpoints ``eu[e]``, ``ev[e]``; element ``m + v`` is
  the vertex ``v`` itself;
* ``inc_ptr``/``inc_idx`` is a CSR list of incident edges per vertex;
* ``colors`` has length ``m + n``; 0 means uncolored.  It is updated in
  place and holds the solution when the search succeeds;
* ``order`` lists the free elements in assignment order; after assigning
  ``order[p]`` the vertices ``close_idx[close_ptr[p]:close_ptr[p + 1]]``
  have all their incident elements decided and are *closed*;
* an edge with ``check[e]`` set must join closed endpoints of different
  total degree in the edge's color class.

Returns ``(status, nodes)`` with status 1 (found), 0 (infeasible) or -1
(node or time budget exhausted).
"""

from __future__ import annotations

import time

FOUND, INFEASIBLE, EXHAUSTED = 1, 0, -1


def search_total(
    n, eu, ev, inc_ptr, inc_idx, order, close_ptr, close_idx,
    colors, check, closed, palette, symmetric, node_limit=0, deadline=0.0,
):
    m = len(eu)
    K = max(max(colors, default=0), max(palette)) + 1
    cnt = [0] * (n * K)
    for e in range(m):
        c = colors[e]
        if c:
            cnt[eu[e] * K + c] += 1
            cnt[ev[e] * K + c] += 1
    for v in range(n):
        c = colors[m + v]
        if c:
            cnt[v * K + c] += 1
    closed = list(closed)

    def vertex_ok(v):
        base = v * K
        for j in range(inc_ptr[v], inc_ptr[v + 1]):
            e = inc_idx[j]
            c = colors[e]
            if c and check[e]:
                w = ev[e] if eu[e] == v else eu[e]
                if closed[w] and cnt[base + c] == cnt[w * K + c]:
                    return False
        return True

    for v in range(n):
        if closed[v] and not vertex_ok(v):
            return INFEASIBLE, 0
    L = len(order)
    if L == 0:
        return FOUND, 0

    P = len(palette)
    choice = [0] * L
    maxc = [0] * (L + 1)
    nodes = 0
    pos = 0
    while True:
        el = order[pos]
        ci = choice[pos]
        if ci:
            c = palette[ci - 1]
            colors[el] = 0
            if el < m:
                cnt[eu[el] * K + c] -= 1
                cnt[ev[el] * K + c] -= 1
            else:
                cnt[(el - m) * K + c] -= 1
            for j in range(close_ptr[pos], close_ptr[pos + 1]):
                closed[close_idx[j]] = 0
        ci += 1
        lim = P
        if symmetric and maxc[pos] + 1 < P:
            lim = maxc[pos] + 1
        if ci > lim:
            choice[pos] = 0
            pos -= 1
            if pos < 0:
                return INFEASIBLE, nodes
            continue
        choice[pos] = ci
        nodes += 1
        if node_limit and nodes > node_limit:
            return EXHAUSTED, nodes
        if deadline and not nodes & 1023 and time.monotonic() > deadline:
            return EXHAUSTED, nodes
        c = palette[ci - 1]
        colors[el] = c
        if el < m:
            cnt[eu[el] * K + c] += 1
            cnt[ev[el] * K + c] += 1
        else:
            cnt[(el - m) * K + c] += 1
        lo, hi = close_ptr[pos], close_ptr[pos + 1]
        for j in range(lo, hi):
            closed[close_idx[j]] = 1
        ok = True
        for j in range(lo, hi):
            if not vertex_ok(close_idx[j]):
                ok = False
                break
        if not ok:
            continue
        maxc[pos + 1] = ci if ci > maxc[pos] else maxc[pos]
        pos += 1
        if pos == L:
            return FOUND, nodes
