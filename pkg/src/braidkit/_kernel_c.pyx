# cython: boundscheck=False, wraparound=False, cdivision=True
# cython: language_level=3
"""Cython Garside kernel: left normal forms of braid words.

Compiled twin of ``_kernel_py``; identical conventions and output.  See
that module's docstring for the conventions.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy, memmove


cdef inline void tau_into(int* dst, int* src, int n) nogil:
    cdef int s
    for s in range(n):
        dst[s] = n - 1 - src[n - 1 - s]


cdef int slide_pair(int* f, int* g, int* finv, int n) nogil:
    """Left-weight the factor pair (f, g) in place; return 1 if f changed."""
    cdef int i, a, b, t, changed_any = 0, changed = 1
    for i in range(n):
        finv[f[i]] = i
    while changed:
        changed = 0
        for i in range(n - 1):
            if g[i] > g[i + 1] and finv[i] < finv[i + 1]:
                a = finv[i]
                b = finv[i + 1]
                f[a] = i + 1
                f[b] = i
                finv[i] = b
                finv[i + 1] = a
                t = g[i]
                g[i] = g[i + 1]
                g[i + 1] = t
                changed = 1
                changed_any = 1
    return changed_any


cdef inline int is_identity(int* p, int n) nogil:
    cdef int s
    for s in range(n):
        if p[s] != s:
            return 0
    return 1


cdef inline int is_w0(int* p, int n) nogil:
    cdef int s
    for s in range(n):
        if p[s] != n - 1 - s:
            return 0
    return 1


def left_normal_form(int n, letters):
    """Return (inf, factors) with factors a tuple of permutation tuples."""
    cdef int cap = 16
    cdef Py_ssize_t nletters = len(letters)
    if nletters + 1 > cap:
        cap = <int> nletters + 1
    cdef int* fac = <int*> malloc(cap * n * sizeof(int))
    cdef int* scratch = <int*> malloc(2 * n * sizeof(int))
    if fac == NULL or scratch == NULL:
        free(fac)
        free(scratch)
        raise MemoryError()
    cdef int* tmp = scratch + n
    cdef int inf = 0, k = 0
    cdef int i, j, s, letter, changed
    cdef int* p
    try:
        for letter in letters:
            i = letter if letter > 0 else -letter
            i -= 1
            if i < 0 or i >= n - 1:
                raise ValueError(
                    f"letter {letter} out of range for {n} strands"
                )
            p = fac + k * n
            if letter > 0:
                for s in range(n):
                    p[s] = s
                p[i] = i + 1
                p[i + 1] = i
            else:
                inf -= 1
                for j in range(k):
                    tau_into(tmp, fac + j * n, n)
                    memcpy(fac + j * n, tmp, n * sizeof(int))
                # r = (transposition i) applied after w0
                for s in range(n):
                    p[s] = n - 1 - s
                p[n - 1 - i] = i + 1
                p[n - 2 - i] = i
            k += 1

        # normalization sweeps
        changed = 1
        while changed:
            changed = 0
            for j in range(k - 1):
                if slide_pair(fac + j * n, fac + (j + 1) * n, scratch, n):
                    changed = 1
            j = 0
            while j < k:
                p = fac + j * n
                if is_identity(p, n):
                    memmove(p, p + n, (k - j - 1) * n * sizeof(int))
                    k -= 1
                    changed = 1
                elif is_w0(p, n):
                    inf += 1
                    for s in range(j):
                        tau_into(tmp, fac + s * n, n)
                        memcpy(fac + s * n, tmp, n * sizeof(int))
                    memmove(p, p + n, (k - j - 1) * n * sizeof(int))
                    k -= 1
                    changed = 1
                else:
                    j += 1

        out = []
        for j in range(k):
            p = fac + j * n
            out.append(tuple([p[s] for s in range(n)]))
        return inf, tuple(out)
    finally:
        free(fac)
        free(scratch)
