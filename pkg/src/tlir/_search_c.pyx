# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of :mod:`tlir._search_py`; see that module for the layout."""

from libc.stdlib cimport calloc, free
from time import monotonic


def search_total(
    int n, int[:] eu, int[:] ev, int[:] inc_ptr, int[:] inc_idx,
    int[:] order, int[:] close_ptr, int[:] close_idx,
    int[:] colors, signed char[:] check, signed char[:] closed_in,
    int[:] palette, bint symmetric, long long node_limit=0, double deadline=0.0,
):
    cdef int m = eu.shape[0]
    cdef int L = order.shape[0]
    cdef int P = palette.shape[0]
    cdef int K = 0
    cdef int i, j, e, v, w, c, ci, el, pos, lim, lo, hi, base
    cdef long long nodes = 0
    cdef bint ok
    for i in range(m + n):
        if colors[i] > K:
            K = colors[i]
    for i in range(P):
        if palette[i] > K:
            K = palette[i]
    K += 1

    cdef int *cnt = <int *> calloc(n * K + 1, sizeof(int))
    cdef signed char *closed = <signed char *> calloc(n + 1, sizeof(signed char))
    cdef int *choice = <int *> calloc(L + 1, sizeof(int))
    cdef int *maxc = <int *> calloc(L + 2, sizeof(int))
    if cnt == NULL or closed == NULL or choice == NULL or maxc == NULL:
        free(cnt); free(closed); free(choice); free(maxc)
        raise MemoryError()
    try:
        for e in range(m):
            c = colors[e]
            if c:
                cnt[eu[e] * K + c] += 1
                cnt[ev[e] * K + c] += 1
        for v in range(n):
            closed[v] = closed_in[v]
            c = colors[m + v]
            if c:
                cnt[v * K + c] += 1

        for v in range(n):
            if closed[v] and not _vertex_ok(v, K, eu, ev, inc_ptr, inc_idx, colors, check, closed, cnt):
                return 0, 0
        if L == 0:
            return 1, 0

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
                    return 0, nodes
                continue
            choice[pos] = ci
            nodes += 1
            if node_limit and nodes > node_limit:
                return -1, nodes
            if deadline and not (nodes & 1023) and monotonic() > deadline:
                return -1, nodes
            c = palette[ci - 1]
            colors[el] = c
            if el < m:
                cnt[eu[el] * K + c] += 1
                cnt[ev[el] * K + c] += 1
            else:
                cnt[(el - m) * K + c] += 1
            lo = close_ptr[pos]
            hi = close_ptr[pos + 1]
            for j in range(lo, hi):
                closed[close_idx[j]] = 1
            ok = True
            for j in range(lo, hi):
                if not _vertex_ok(close_idx[j], K, eu, ev, inc_ptr, inc_idx, colors, check, closed, cnt):
                    ok = False
                    break
            if not ok:
                continue
            maxc[pos + 1] = ci if ci > maxc[pos] else maxc[pos]
            pos += 1
            if pos == L:
                return 1, nodes
    finally:
        free(cnt)
        free(closed)
        free(choice)
        free(maxc)


cdef inline bint _vertex_ok(int v, int K, int[:] eu, int[:] ev, int[:] inc_ptr,
                            int[:] inc_idx, int[:] colors, signed char[:] check,
                            signed char *closed, int *cnt):
    cdef int j, e, c, w
    cdef int base = v * K
    for j in range(inc_ptr[v], inc_ptr[v + 1]):
        e = inc_idx[j]
        c = colors[e]
        if c and check[e]:
            w = ev[e] if eu[e] == v else eu[e]
            if closed[w] and cnt[base + c] == cnt[w * K + c]:
                return False
    return True
