# cython: language_level=3
"""Compiled kernel for the product-expansion recurrence.

Same contract as _expand_py.expand_kernel; the win comes from typed
loop indices and list indexing without interpreter dispatch.  The
coefficient objects stay arbitrary-precision (int or gmpy2 mpz).
"""


def expand_kernel(list c, Py_ssize_t n_max):
    cdef Py_ssize_t n, k
    cdef object acc, q, r, zero
    zero = c[0] * 0
    cdef list p = [zero] * (n_max + 1)
    p[0] = zero + 1
    for n in range(1, n_max + 1):
        acc = zero
        for k in range(1, n + 1):
            acc = acc + c[k] * p[n - k]
        q, r = divmod(acc, n)
        if r:
            raise ArithmeticError(f"inexact division at n={n}")
        p[n] = q
    return p
