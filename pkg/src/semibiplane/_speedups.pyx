# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled kernels for the hot loops; interface mirrors ``_kernels_py``."""

from libc.stdlib cimport calloc, free
from libc.string cimport memset


cdef int* _to_ints(object seq, Py_ssize_t n) except NULL:
    cdef int* buf = <int*> calloc(n, sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = seq[i]
    return buf


def semiplanar_witness(values, gadd, hsub, int k):
    """First (a, y, count) with count not in {0, 2}, smallest a then smallest
    y; None when the table is semi-planar."""
    cdef int* v = NULL
    cdef int* ga = NULL
    cdef int* hs = NULL
    cdef int* cnt = NULL
    cdef int a, x, y, c
    try:
        v = _to_ints(values, k)
        ga = _to_ints(gadd, k * k)
        hs = _to_ints(hsub, k * k)
        cnt = <int*> calloc(k, sizeof(int))
        if cnt == NULL:
            raise MemoryError()
        for a in range(1, k):
            memset(cnt, 0, k * sizeof(int))
            for x in range(k):
                cnt[hs[v[ga[x * k + a]] * k + v[x]]] += 1
            for y in range(k):
                c = cnt[y]
                if c != 0 and c != 2:
                    return (a, y, c)
        return None
    finally:
        free(v)
        free(ga)
        free(hs)
        free(cnt)


cdef class _Search:
    cdef int k, cap, shard_val, viol
    cdef bint fix_zero, use_pruning, fiber_on
    cdef long long visited, count
    cdef int* gadd
    cdef int* gsub
    cdef int* hsub
    cdef int* f
    cdef int* cnt
    cdef int* fib
    cdef int* scratch
    cdef list found

    def __cinit__(self, int k, gadd, gsub, hsub,
                  bint fix_zero, int shard_val,
                  bint use_pruning, bint use_fiber_limit):
        self.k = k
        self.cap = k // 2
        self.shard_val = shard_val
        self.fix_zero = fix_zero
        self.use_pruning = use_pruning
        self.fiber_on = use_fiber_limit and k > 4
        self.viol = 0
        self.visited = 0
        self.count = 0
        self.gadd = _to_ints(gadd, k * k)
        self.gsub = _to_ints(gsub, k * k)
        self.hsub = _to_ints(hsub, k * k)
        self.f = <int*> calloc(k, sizeof(int))
        self.cnt = <int*> calloc(k * k, sizeof(int))
        self.fib = <int*> calloc(k, sizeof(int))
        self.scratch = <int*> calloc(k, sizeof(int))
        if (self.f == NULL or self.cnt == NULL or self.fib == NULL
                or self.scratch == NULL):
            raise MemoryError()
        self.found = []

    def __dealloc__(self):
        free(self.gadd)
        free(self.gsub)
        free(self.hsub)
        free(self.f)
        free(self.cnt)
        free(self.fib)
        free(self.scratch)

    cdef bint _leaf_is_semiplanar(self):
        # direct check used when incremental counts are not maintained
        cdef int k = self.k
        cdef int a, x, y, c
        for a in range(1, k):
            memset(self.scratch, 0, k * sizeof(int))
            for x in range(k):
                self.scratch[self.hsub[self.f[self.gadd[x * k + a]] * k + self.f[x]]] += 1
            for y in range(k):
                c = self.scratch[y]
                if c != 0 and c != 2:
                    return False
        return True

    cdef void _dfs(self, int x):
        cdef int k = self.k
        cdef int lo = 0
        cdef int hi = k
        cdef int v, u, fu, i, c
        cdef bint ok, prune
        if x == k:
            self.visited += 1
            if self.use_pruning:
                ok = self.viol == 0
                if ok:
                    for i in range(k, k * k):
                        if self.cnt[i] == 1:
                            ok = False
                            break
            else:
                ok = self._leaf_is_semiplanar()
            if ok:
                self.count += 1
                self.found.append(tuple([self.f[i] for i in range(k)]))
            return
        if x == 0 and self.fix_zero:
            hi = 1
        elif x == 1 and self.shard_val >= 0:
            lo = self.shard_val
            hi = lo + 1
        for v in range(lo, hi):
            self.f[x] = v
            self.fib[v] += 1
            if self.use_pruning:
                for u in range(x):
                    fu = self.f[u]
                    i = self.gsub[x * k + u] * k + self.hsub[v * k + fu]
                    c = self.cnt[i] + 1
                    self.cnt[i] = c
                    if c == 3:
                        self.viol += 1
                    i = self.gsub[u * k + x] * k + self.hsub[fu * k + v]
                    c = self.cnt[i] + 1
                    self.cnt[i] = c
                    if c == 3:
                        self.viol += 1
            prune = (self.fiber_on and self.fib[v] > self.cap) or \
                    (self.use_pruning and self.viol > 0)
            if not prune:
                self._dfs(x + 1)
            if self.use_pruning:
                for u in range(x):
                    fu = self.f[u]
                    i = self.gsub[x * k + u] * k + self.hsub[v * k + fu]
                    c = self.cnt[i] - 1
                    self.cnt[i] = c
                    if c == 2:
                        self.viol -= 1
                    i = self.gsub[u * k + x] * k + self.hsub[fu * k + v]
                    c = self.cnt[i] - 1
                    self.cnt[i] = c
                    if c == 2:
                        self.viol -= 1
            self.fib[v] -= 1


def search_tables(int k, gadd, gsub, hsub, bint fix_zero, int shard_val,
                  bint use_pruning, bint use_fiber_limit):
    """Enumerate value tables of length k in lexicographic order; see the
    pure-Python twin for the full contract."""
    cdef _Search s = _Search(k, gadd, gsub, hsub, fix_zero, shard_val,
                             use_pruning, use_fiber_limit)
    s._dfs(0)
    return s.visited, s.count, s.found
