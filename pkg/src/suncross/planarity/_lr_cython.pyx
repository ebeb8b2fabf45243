# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Left-right planarity criterion, compiled kernel.

Returns the same booleans as the pure kernel, which is the behavioral
reference; see its docstring for the algorithm layout.  Only the two
decision entry points are compiled; embedding extraction stays in Python.
All state lives in one arena allocated per call, so repeated calls do not
churn the Python heap.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

cdef int NONE = -1
cdef int LP_SENTINEL = -(1 << 30)


cdef struct LR:
    int n
    int m
    int *dt
    int *dh
    int *height
    int *parent
    int *orient
    int *lowpt
    int *lowpt2
    int *nd
    int *ostart
    int *olist
    int *ref
    int *lowpt_edge
    int *bottom
    # conflict pairs live in a pool; ids stand in for object identity
    int *pl_low
    int *pl_high
    int *pr_low
    int *pr_high
    int *S
    int pool_n
    int Ssize


cdef inline int _lp(LR *st, int d) nogil:
    return LP_SENTINEL if d == NONE else st.lowpt[d]


cdef inline int _top(LR *st) nogil:
    return st.S[st.Ssize - 1] if st.Ssize > 0 else NONE


cdef inline int _new_pair(LR *st, int llo, int lhi, int rlo, int rhi) nogil:
    cdef int p = st.pool_n
    st.pl_low[p] = llo
    st.pl_high[p] = lhi
    st.pr_low[p] = rlo
    st.pr_high[p] = rhi
    st.pool_n += 1
    return p


cdef inline bint _l_empty(LR *st, int p) nogil:
    return st.pl_low[p] == NONE and st.pl_high[p] == NONE


cdef inline bint _r_empty(LR *st, int p) nogil:
    return st.pr_low[p] == NONE and st.pr_high[p] == NONE


cdef inline void _swap_pair(LR *st, int p) nogil:
    cdef int t = st.pl_low[p]
    st.pl_low[p] = st.pr_low[p]
    st.pr_low[p] = t
    t = st.pl_high[p]
    st.pl_high[p] = st.pr_high[p]
    st.pr_high[p] = t


cdef inline int _lowest(LR *st, int p) nogil:
    cdef int a, b
    if _l_empty(st, p):
        return _lp(st, st.pr_low[p])
    if _r_empty(st, p):
        return _lp(st, st.pl_low[p])
    a = _lp(st, st.pl_low[p])
    b = _lp(st, st.pr_low[p])
    return a if a < b else b


cdef inline bint _conf_l(LR *st, int p, int b) nogil:
    return st.pl_high[p] != NONE and st.lowpt[st.pl_high[p]] > st.lowpt[b]


cdef inline bint _conf_r(LR *st, int p, int b) nogil:
    return st.pr_high[p] != NONE and st.lowpt[st.pr_high[p]] > st.lowpt[b]


cdef bint _add_constraints(LR *st, int d, int e) nogil:
    cdef int P = _new_pair(st, NONE, NONE, NONE, NONE)
    cdef int Q, t
    # merge return edges of d into P's right side
    while True:
        st.Ssize -= 1
        Q = st.S[st.Ssize]
        if not _l_empty(st, Q):
            _swap_pair(st, Q)
        if not _l_empty(st, Q):
            return False
        if _lp(st, st.pr_low[Q]) > st.lowpt[e]:
            if _r_empty(st, P):                 # topmost interval
                st.pr_low[P] = st.pr_low[Q]
                st.pr_high[P] = st.pr_high[Q]
            else:
                st.ref[st.pr_low[P]] = st.pr_high[Q]
            st.pr_low[P] = st.pr_low[Q]
        elif st.pr_low[Q] != NONE:              # align
            st.ref[st.pr_low[Q]] = st.lowpt_edge[e]
        if _top(st) == st.bottom[d]:
            break
    # merge conflicting return edges of earlier siblings into P's left side
    while True:
        t = _top(st)
        if t == NONE or not (_conf_l(st, t, d) or _conf_r(st, t, d)):
            break
        st.Ssize -= 1
        Q = st.S[st.Ssize]
        if _conf_r(st, Q, d):
            _swap_pair(st, Q)
        if _conf_r(st, Q, d):
            return False
        if st.pr_low[P] != NONE:                # merge below lowpt(d)
            st.ref[st.pr_low[P]] = st.pr_high[Q]
        if st.pr_low[Q] != NONE:
            st.pr_low[P] = st.pr_low[Q]
        if _l_empty(st, P):                     # topmost interval
            st.pl_low[P] = st.pl_low[Q]
            st.pl_high[P] = st.pl_high[Q]
        elif st.pl_low[P] != NONE:
            st.ref[st.pl_low[P]] = st.pl_high[Q]
        st.pl_low[P] = st.pl_low[Q]
    if not (_l_empty(st, P) and _r_empty(st, P)):
        st.S[st.Ssize] = P
        st.Ssize += 1
    return True


cdef void _remove_back_edges(LR *st, int e) nogil:
    cdef int u = st.dt[e]
    cdef int hu = st.height[u]
    cdef int P, hl, hr
    # drop entire conflict pairs that return exactly to u; their side
    # assignments matter only to the embedding pass, which is not compiled
    while st.Ssize > 0 and _lowest(st, st.S[st.Ssize - 1]) == hu:
        st.Ssize -= 1
    if st.Ssize > 0:                            # one more pair to trim
        st.Ssize -= 1
        P = st.S[st.Ssize]
        while st.pl_high[P] != NONE and st.dh[st.pl_high[P]] == u:
            st.pl_high[P] = st.ref[st.pl_high[P]]
        if st.pl_high[P] == NONE and st.pl_low[P] != NONE:
            st.ref[st.pl_low[P]] = st.pr_low[P]
            st.pl_low[P] = NONE
        while st.pr_high[P] != NONE and st.dh[st.pr_high[P]] == u:
            st.pr_high[P] = st.ref[st.pr_high[P]]
        if st.pr_high[P] == NONE and st.pr_low[P] != NONE:
            st.ref[st.pr_low[P]] = st.pl_low[P]
            st.pr_low[P] = NONE
        st.S[st.Ssize] = P
        st.Ssize += 1
    # ref of e chains to its highest return edge
    if st.lowpt[e] < hu and st.Ssize > 0:
        P = st.S[st.Ssize - 1]
        hl = st.pl_high[P]
        hr = st.pr_high[P]
        if hl != NONE and (hr == NONE or st.lowpt[hl] > st.lowpt[hr]):
            st.ref[e] = hl
        else:
            st.ref[e] = hr


cdef int _arena_ints(int n, int m) nogil:
    # must cover the carve in _run: 33m + 11n + 50 ints
    return 33 * m + 11 * n + 64


cdef bint _run(int n, int m, int *eu, int *ev, int *arena) nogil:
    """Orientation plus testing on endpoint arrays, state in the arena."""
    cdef LR st
    cdef int off = 0
    st.n = n
    st.m = m
    st.dt = arena + off; off += 2 * m
    st.dh = arena + off; off += 2 * m
    st.height = arena + off; off += n
    st.parent = arena + off; off += n
    st.orient = arena + off; off += m
    st.lowpt = arena + off; off += 2 * m
    st.lowpt2 = arena + off; off += 2 * m
    st.nd = arena + off; off += 2 * m
    st.ostart = arena + off; off += n + 1
    st.olist = arena + off; off += m
    st.ref = arena + off; off += 2 * m
    st.lowpt_edge = arena + off; off += 2 * m
    st.bottom = arena + off; off += 2 * m
    st.pl_low = arena + off; off += 2 * m + 8
    st.pl_high = arena + off; off += 2 * m + 8
    st.pr_low = arena + off; off += 2 * m + 8
    st.pr_high = arena + off; off += 2 * m + 8
    st.S = arena + off; off += 2 * m + 8
    cdef int *astart = arena + off
    off += n + 1
    cdef int *alist = arena + off
    off += 2 * m
    cdef int *vstack = arena + off
    off += 2 * n + 4
    cdef int *ind = arena + off
    off += n
    cdef int *skip = arena + off
    off += 2 * m
    cdef int *roots = arena + off
    off += n
    cdef int *bucket = arena + off
    off += 2 * n + 4
    cdef int *sorted_darts = arena + off
    off += m
    cdef int *fill = arena + off
    off += n
    st.pool_n = 0
    st.Ssize = 0

    cdef int i, e, v, w, d, u, hv, top, nroots, nori, maxnd
    cdef bint skip_final
    cdef bint ok = True

    # adjacency in CSR form, darts in input edge order
    for v in range(n + 1):
        astart[v] = 0
    for e in range(m):
        astart[eu[e] + 1] += 1
        astart[ev[e] + 1] += 1
    for v in range(n):
        astart[v + 1] += astart[v]
        fill[v] = 0
    for e in range(m):
        u = eu[e]; v = ev[e]
        st.dt[2 * e] = u; st.dh[2 * e] = v
        st.dt[2 * e + 1] = v; st.dh[2 * e + 1] = u
        alist[astart[u] + fill[u]] = 2 * e; fill[u] += 1
        alist[astart[v] + fill[v]] = 2 * e + 1; fill[v] += 1

    for v in range(n):
        st.height[v] = NONE
        st.parent[v] = NONE
        ind[v] = 0
    for e in range(m):
        st.orient[e] = NONE
    for d in range(2 * m):
        st.ref[d] = NONE
        st.lowpt_edge[d] = NONE
        st.bottom[d] = NONE
        skip[d] = 0

    # phase 1: orientation
    nroots = 0
    for i in range(n):
        if st.height[i] != NONE:
            continue
        st.height[i] = 0
        roots[nroots] = i; nroots += 1
        top = 0
        vstack[top] = i; top += 1
        while top > 0:
            top -= 1
            v = vstack[top]
            e = st.parent[v]
            hv = st.height[v]
            while ind[v] < astart[v + 1] - astart[v]:
                d = alist[astart[v] + ind[v]]
                if not skip[d]:
                    if st.orient[d >> 1] != NONE:
                        ind[v] += 1
                        continue
                    st.orient[d >> 1] = d
                    st.lowpt[d] = hv
                    st.lowpt2[d] = hv
                    w = st.dh[d]
                    if st.height[w] == NONE:    # tree edge
                        st.parent[w] = d
                        st.height[w] = hv + 1
                        vstack[top] = v; top += 1
                        vstack[top] = w; top += 1
                        skip[d] = 1
                        break
                    st.lowpt[d] = st.height[w]  # back edge
                st.nd[d] = 2 * st.lowpt[d]
                if st.lowpt2[d] < hv:           # chordal
                    st.nd[d] += 1
                if e != NONE:
                    if st.lowpt[d] < st.lowpt[e]:
                        st.lowpt2[e] = (st.lowpt[e]
                                        if st.lowpt[e] < st.lowpt2[d]
                                        else st.lowpt2[d])
                        st.lowpt[e] = st.lowpt[d]
                    elif st.lowpt[d] > st.lowpt[e]:
                        if st.lowpt2[e] > st.lowpt[d]:
                            st.lowpt2[e] = st.lowpt[d]
                    else:
                        if st.lowpt2[e] > st.lowpt2[d]:
                            st.lowpt2[e] = st.lowpt2[d]
                ind[v] += 1

    # ordered adjacency: counting sort by nesting depth, ties in edge order
    maxnd = 2 * n + 2
    for i in range(maxnd + 1):
        bucket[i] = 0
    nori = 0
    for e in range(m):
        d = st.orient[e]
        if d != NONE:
            bucket[st.nd[d]] += 1
            nori += 1
    top = 0
    for i in range(maxnd + 1):
        u = bucket[i]
        bucket[i] = top
        top += u
    for e in range(m):
        d = st.orient[e]
        if d != NONE:
            sorted_darts[bucket[st.nd[d]]] = d
            bucket[st.nd[d]] += 1
    for v in range(n + 1):
        st.ostart[v] = 0
    for i in range(nori):
        st.ostart[st.dt[sorted_darts[i]] + 1] += 1
    for v in range(n):
        st.ostart[v + 1] += st.ostart[v]
        fill[v] = 0
    for i in range(nori):
        d = sorted_darts[i]
        v = st.dt[d]
        st.olist[st.ostart[v] + fill[v]] = d
        fill[v] += 1

    # phase 2: testing
    for v in range(n):
        ind[v] = 0
    for d in range(2 * m):
        skip[d] = 0
    for i in range(nroots):
        if not ok:
            break
        top = 0
        vstack[top] = roots[i]; top += 1
        while top > 0:
            top -= 1
            v = vstack[top]
            e = st.parent[v]
            skip_final = False
            while ind[v] < st.ostart[v + 1] - st.ostart[v]:
                d = st.olist[st.ostart[v] + ind[v]]
                if not skip[d]:
                    st.bottom[d] = _top(&st)
                    w = st.dh[d]
                    if d == st.parent[w]:       # tree edge
                        vstack[top] = v; top += 1
                        vstack[top] = w; top += 1
                        skip[d] = 1
                        skip_final = True
                        break
                    st.lowpt_edge[d] = d        # back edge
                    st.S[st.Ssize] = _new_pair(&st, NONE, NONE, d, d)
                    st.Ssize += 1
                if st.lowpt[d] < st.height[v]:  # d has a return edge
                    if ind[v] == 0:
                        st.lowpt_edge[e] = st.lowpt_edge[d]
                    elif not _add_constraints(&st, d, e):
                        ok = False
                        break
                ind[v] += 1
            if not ok:
                break
            if not skip_final and e != NONE:
                _remove_back_edges(&st, e)

    return ok


def is_planar_index(n, eu, ev):
    """Planarity of the simple graph given as endpoint arrays."""
    cdef int nn = n
    cdef int m = len(eu)
    if m <= 2:
        return True
    if m > 3 * nn - 6:
        return False
    cdef int *buf = <int *> PyMem_Malloc(
        (2 * m + _arena_ints(nn, m)) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef int *ceu = buf
    cdef int *cev = buf + m
    cdef int i
    for i in range(m):
        ceu[i] = eu[i]
        cev[i] = ev[i]
    cdef bint out = _run(nn, m, ceu, cev, buf + 2 * m)
    PyMem_Free(buf)
    return bool(out)


def is_planar_planarized_index(n, eu, ev, pairs):
    """Planarity of the planarization of (n, eu, ev) under the given crossings.

    pairs lists crossings as (edge index, edge index); dummies are chained
    along multiply-crossed edges in pair-list order, as in the pure kernel.
    """
    cdef int nb = n
    cdef int m = len(eu)
    cdef int np_ = len(pairs)
    cdef int m2 = m + 2 * np_
    cdef int n2 = nb + np_
    if m2 <= 2:
        return True
    if m2 > 3 * n2 - 6:
        return False
    cdef int *buf = <int *> PyMem_Malloc(
        (2 * m2 + 2 * np_ + 2 * m + 2 + 2 * np_
         + _arena_ints(n2, m2)) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef int *eu2 = buf
    cdef int *ev2 = buf + m2
    cdef int *pa = buf + 2 * m2
    cdef int *pb = pa + np_
    cdef int *cstart = pb + np_
    cdef int *cfill = cstart + m + 1
    cdef int *chain = cfill + m + 1
    cdef int *arena = chain + 2 * np_

    cdef int t, a, b, e, k, prev, pos
    for t in range(np_):
        pair = pairs[t]
        pa[t] = pair[0]
        pb[t] = pair[1]
    for e in range(m + 1):
        cstart[e] = 0
    for t in range(np_):
        cstart[pa[t] + 1] += 1
        cstart[pb[t] + 1] += 1
    for e in range(m):
        cstart[e + 1] += cstart[e]
        cfill[e] = 0
    # chain dummies along each edge in pair order, then emit segments
    for t in range(np_):
        a = pa[t]; b = pb[t]
        chain[cstart[a] + cfill[a]] = nb + t
        cfill[a] += 1
        chain[cstart[b] + cfill[b]] = nb + t
        cfill[b] += 1
    pos = 0
    for e in range(m):
        prev = eu[e]
        for k in range(cstart[e], cstart[e] + cfill[e]):
            eu2[pos] = prev
            ev2[pos] = chain[k]
            prev = chain[k]
            pos += 1
        eu2[pos] = prev
        ev2[pos] = ev[e]
        pos += 1
    cdef bint out = _run(n2, m2, eu2, ev2, arena)
    PyMem_Free(buf)
    return bool(out)
