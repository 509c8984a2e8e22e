# cython: language_level=3
"""Compiled bitset kernels. Mirrors specconn._kernels_py exactly; keep the
two in sync (the parity tests compare them on random inputs)."""

from libc.math cimport sqrt

cdef extern from *:
    """
    #define POPCNT64(x) __builtin_popcountll(x)
    #define CTZ64(x) __builtin_ctzll(x)
    """
    int POPCNT64(unsigned long long) nogil
    int CTZ64(unsigned long long) nogil

BACKEND = "cython"


cdef inline unsigned long long _full_mask(int n) nogil:
    return (<unsigned long long>0 - 1) >> (64 - n)


cdef int _copy_adj(object adj, int n, unsigned long long* rows) except -1:
    cdef int v
    for v in range(n):
        rows[v] = adj[v]
    return 0


cdef int _count_components(unsigned long long* rows, unsigned long long surv,
                           int stop_at) noexcept nogil:
    cdef unsigned long long rem = surv
    cdef unsigned long long comp, frontier, nxt, f
    cdef int count = 0
    cdef int v
    while rem:
        count += 1
        if count >= stop_at:
            return count
        comp = rem & (~rem + 1)
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                v = CTZ64(f)
                nxt |= rows[v]
                f &= f - 1
            frontier = nxt & surv & ~comp
            comp |= frontier
        rem &= ~comp
    return count


cdef bint _cut_valid_c(unsigned long long* rows, int n, unsigned long long fmask,
                       int g, int r, int mode) noexcept nogil:
    cdef unsigned long long full = _full_mask(n)
    cdef unsigned long long surv = full & ~fmask
    cdef unsigned long long f
    cdef int sc = POPCNT64(surv)
    cdef int v, need
    if mode == 0:
        if sc == 1:
            return True
        if surv == 0:
            return False
        return _count_components(rows, surv, 2) >= 2
    if mode == 1:
        if sc < r:
            return True
        return _count_components(rows, surv, r) >= r
    if fmask == 0 or surv == 0:
        return False
    if g > 0:
        f = surv
        while f:
            v = CTZ64(f)
            if POPCNT64(rows[v] & surv) < g:
                return False
            f &= f - 1
    need = 2 if mode == 2 else r
    return _count_components(rows, surv, need) >= need


def components_masks(object adj, int n, object removed=0):
    cdef unsigned long long rows[64]
    _copy_adj(adj, n, rows)
    cdef unsigned long long surv = _full_mask(n) & ~(<unsigned long long>removed)
    cdef unsigned long long rem = surv
    cdef unsigned long long comp, frontier, nxt, f
    cdef int v
    out = []
    while rem:
        comp = rem & (~rem + 1)
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                v = CTZ64(f)
                nxt |= rows[v]
                f &= f - 1
            frontier = nxt & surv & ~comp
            comp |= frontier
        out.append(comp)
        rem &= ~comp
    return out


def cut_valid(object adj, int n, object fmask, int g, int r, int mode):
    cdef unsigned long long rows[64]
    _copy_adj(adj, n, rows)
    return bool(_cut_valid_c(rows, n, <unsigned long long>fmask, g, r, mode))


def min_cut_search(object adj, int n, int g, int r, int mode):
    cdef unsigned long long rows[64]
    _copy_adj(adj, n, rows)
    cdef int lo = 0 if mode in (0, 1) else 1
    cdef int hi = n + 1 if mode == 1 else n
    cdef int size, i, j
    cdef int c[65]
    cdef unsigned long long fmask
    cdef bint advanced
    for size in range(lo, hi):
        for i in range(size):
            c[i] = i
        while True:
            fmask = 0
            for i in range(size):
                fmask |= (<unsigned long long>1) << c[i]
            if _cut_valid_c(rows, n, fmask, g, r, mode):
                return fmask
            i = size - 1
            while i >= 0 and c[i] == n - size + i:
                i -= 1
            if i < 0:
                break
            c[i] += 1
            for j in range(i + 1, size):
                c[j] = c[j - 1] + 1
    return -1


def power_iteration(object adj, int n, object comp_mask, double tol, long max_iter):
    cdef unsigned long long rows[64]
    _copy_adj(adj, n, rows)
    cdef unsigned long long comp = <unsigned long long>comp_mask
    cdef unsigned long long m = comp
    cdef unsigned long long row, acc_mask
    cdef int vs[64]
    cdef int local[64]
    cdef unsigned long long ladj[64]
    cdef double x[64]
    cdef double z[64]
    cdef int size = 0
    cdef int v, i, j
    cdef long it
    cdef double rho = 0.0
    cdef double resid = 0.0
    cdef double acc, d, norm, bound
    while m:
        v = CTZ64(m)
        vs[size] = v
        size += 1
        m &= m - 1
    if size == 1:
        return 0.0, [1.0], 0, 0.0, True
    for i in range(size):
        local[vs[i]] = i
    for i in range(size):
        row = rows[vs[i]] & comp
        acc_mask = 0
        while row:
            v = CTZ64(row)
            acc_mask |= (<unsigned long long>1) << local[v]
            row &= row - 1
        ladj[i] = acc_mask
    d = 1.0 / sqrt(<double>size)
    for i in range(size):
        x[i] = d
    for it in range(1, max_iter + 1):
        for i in range(size):
            acc = 0.0
            row = ladj[i]
            while row:
                j = CTZ64(row)
                acc += x[j]
                row &= row - 1
            z[i] = acc
        rho = 0.0
        for i in range(size):
            rho += x[i] * z[i]
        resid = 0.0
        for i in range(size):
            d = z[i] - rho * x[i]
            if d < 0.0:
                d = -d
            if d > resid:
                resid = d
        bound = 1.0 if rho < 1.0 else rho
        if resid <= tol * bound:
            return rho, [x[i] for i in range(size)], it, resid, True
        norm = 0.0
        for i in range(size):
            z[i] = z[i] + x[i]
            norm += z[i] * z[i]
        norm = sqrt(norm)
        for i in range(size):
            x[i] = z[i] / norm
    return rho, [x[i] for i in range(size)], max_iter, resid, False
