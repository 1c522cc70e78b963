# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_termops_py.mul_into``.

Packed keys fit in 53 bits (see the layout note in ``_termops_py``), so
key arithmetic and the cap test run on C int64 while coefficients stay
arbitrary-precision Python objects.  Accumulation goes through the
C dict API to skip method-call overhead in the quadratic loop.
"""

from cpython.dict cimport PyDict_GetItem, PyDict_SetItem
from cpython.object cimport PyObject
from libc.stdlib cimport free, malloc

cdef long long GUARDS = (1 << 20) | (1 << 41) | (1 << 52)


def mul_into(dict acc, dict a, dict b, object capkey_obj):
    cdef long long capkey = capkey_obj
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    if na == 0 or nb == 0:
        return
    if na > nb:
        a, b = b, a
        na, nb = nb, na
    cdef long long *ka = <long long *> malloc(na * sizeof(long long))
    cdef long long *kb = <long long *> malloc(nb * sizeof(long long))
    if ka == NULL or kb == NULL:
        free(ka)
        free(kb)
        raise MemoryError()
    cdef list ca = [None] * na
    cdef list cb = [None] * nb
    cdef long long k1, head, kk
    cdef object key, c1, prod
    cdef PyObject *hit
    try:
        i = 0
        for key, c1 in a.items():
            ka[i] = key
            ca[i] = c1
            i += 1
        j = 0
        for key, c1 in b.items():
            kb[j] = key
            cb[j] = c1
            j += 1
        for i in range(na):
            k1 = ka[i]
            c1 = ca[i]
            head = capkey - k1
            for j in range(nb):
                kk = kb[j]
                if (head - kk) & GUARDS != GUARDS:
                    continue
                key = k1 + kk
                prod = c1 * cb[j]
                hit = PyDict_GetItem(acc, key)
                if hit == NULL:
                    PyDict_SetItem(acc, key, prod)
                else:
                    PyDict_SetItem(acc, key, <object> hit + prod)
    finally:
        free(ka)
        free(kb)
