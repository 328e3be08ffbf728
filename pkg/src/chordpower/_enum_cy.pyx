# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled triad enumeration kernel.

Row-for-row and float-for-float identical to chordpower._enum_py; see
that module for the contract.  Products are computed in 64-bit integers,
which caps max_n at 1000 (the inverse product can reach (a*b*c)**2); the
selector falls back to the arbitrary-precision Python kernel above that.
"""

from libc.math cimport log2

MAX_N = 1000


cdef unsigned long long _gcd(unsigned long long x, unsigned long long y) noexcept nogil:
    cdef unsigned long long t
    while y:
        t = x % y
        x = y
        y = t
    return x


def coprime_triads(int max_n, bint octave_only=False):
    if max_n > MAX_N:
        raise ValueError(f"compiled kernel supports max_n <= {MAX_N}, got {max_n}")
    cdef list out = []
    if max_n < 1:
        return out
    cdef unsigned long long a, b, c, hi, g_ab, lcm_ab, lcm, ia, ib, ic, dp, ip
    cdef int group
    cdef double pwe, pwe2
    for a in range(1, max_n + 1):
        hi = max_n
        if octave_only and 2 * a < hi:
            hi = 2 * a
        for b in range(a, hi + 1):
            g_ab = _gcd(a, b)
            lcm_ab = (a / g_ab) * b
            for c in range(b, hi + 1):
                if _gcd(g_ab, c) != 1:
                    continue
                lcm = (lcm_ab / _gcd(lcm_ab, c)) * c
                ia = lcm / a
                ib = lcm / b
                ic = lcm / c
                dp = a * b * c
                ip = ia * ib * ic
                if dp < ip:
                    group = 1
                    pwe = log2(<double> dp) / 3
                    pwe2 = 0.0 - log2(<double> ip) / 3
                elif dp > ip:
                    group = 2
                    pwe = 0.0 - log2(<double> ip) / 3
                    pwe2 = log2(<double> dp) / 3
                else:
                    group = 3
                    pwe = log2(<double> dp) / 3
                    pwe2 = 0.0 - pwe
                out.append((a, b, c, ia, ib, ic, group, pwe, pwe2))
    return out
