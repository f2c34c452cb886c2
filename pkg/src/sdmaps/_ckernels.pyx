# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the kernels in ``_pykernels``."""

from libc.stdlib cimport malloc, free


cdef int* _to_c(object seq, Py_ssize_t n) except NULL:
    cdef int* out = <int*> malloc(n * sizeof(int))
    if out == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = seq[i]
    return out


def orbit_labels(perm):
    cdef Py_ssize_t n = len(perm)
    cdef int* p = _to_c(perm, n) if n else NULL
    cdef list labels = [-1] * n
    cdef int* lab = <int*> malloc((n + 1) * sizeof(int))
    cdef Py_ssize_t start, d, i
    cdef int count = 0
    try:
        for i in range(n):
            lab[i] = -1
        for start in range(n):
            if lab[start] != -1:
                continue
            d = start
            while lab[d] == -1:
                lab[d] = count
                d = p[d]
            count += 1
        for i in range(n):
            labels[i] = lab[i]
    finally:
        free(lab)
        if p != NULL:
            free(p)
    return labels, count


def extend_morphism(src_alpha, src_sigma, tgt_alpha, tgt_sigma, int root, int image):
    cdef Py_ssize_t n = len(src_alpha)
    if len(tgt_alpha) != n:
        return None
    cdef int* sa = _to_c(src_alpha, n)
    cdef int* ss = _to_c(src_sigma, n)
    cdef int* ta = _to_c(tgt_alpha, n)
    cdef int* ts = _to_c(tgt_sigma, n)
    cdef int* psi = <int*> malloc(n * sizeof(int))
    cdef char* used = <char*> malloc(n * sizeof(char))
    cdef int* stack = <int*> malloc(n * sizeof(int))
    cdef Py_ssize_t top = 0, i
    cdef int d, pd, e, f, k, pe
    cdef bint ok = True
    try:
        for i in range(n):
            psi[i] = -1
            used[i] = 0
        psi[root] = image
        used[image] = 1
        stack[top] = root
        top += 1
        while top > 0 and ok:
            top -= 1
            d = stack[top]
            pd = psi[d]
            for k in range(2):
                if k == 0:
                    e = sa[d]
                    f = ta[pd]
                else:
                    e = ss[d]
                    f = ts[pd]
                pe = psi[e]
                if pe == -1:
                    if used[f]:
                        ok = False
                        break
                    psi[e] = f
                    used[f] = 1
                    stack[top] = e
                    top += 1
                elif pe != f:
                    ok = False
                    break
        if not ok:
            return None
        return [psi[i] for i in range(n)]
    finally:
        free(sa)
        free(ss)
        free(ta)
        free(ts)
        free(psi)
        free(used)
        free(stack)


def traversal_code(alpha, sigma, int root):
    cdef Py_ssize_t n = len(alpha)
    cdef int* a = _to_c(alpha, n)
    cdef int* s = _to_c(sigma, n)
    cdef int* new = <int*> malloc(n * sizeof(int))
    cdef int* order = <int*> malloc(n * sizeof(int))
    cdef Py_ssize_t i = 0, size = 1, k
    cdef int d, e, j
    try:
        for k in range(n):
            new[k] = -1
        order[0] = root
        new[root] = 0
        while i < size:
            d = order[i]
            i += 1
            for j in range(2):
                e = s[d] if j == 0 else a[d]
                if new[e] == -1:
                    new[e] = size
                    order[size] = e
                    size += 1
        if size != n:
            return None
        code = [0] * (2 * n)
        for k in range(n):
            d = order[k]
            code[k] = new[s[d]]
            code[n + k] = new[a[d]]
        return tuple(code)
    finally:
        free(a)
        free(s)
        free(new)
        free(order)
