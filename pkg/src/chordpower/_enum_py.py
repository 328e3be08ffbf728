"""Pure-Python triad enumeration kernel.

Walks every tuple a <= b <= c <= max_n with gcd(a, b, c) = 1 and returns
raw rows (a, b, c, ia, ib, ic, group, pwe, pwe2) where ia:ib:ic is the
inverse tuple, group is 1/2/3 by product comparison and pwe/pwe2 are the
signed power values of the main and side proportion.  Must stay
float-identical to chordpower.emotion.pwe_of and to the compiled twin in
_enum_cy; keep the arithmetic expressions in sync.
"""

from __future__ import annotations

from math import gcd, log2

Row = tuple[int, int, int, int, int, int, int, float, float]


def coprime_triads(max_n: int, octave_only: bool = False) -> list[Row]:
    if max_n < 1:
        return []
    out = []
    for a in range(1, max_n + 1):
        hi = min(max_n, 2 * a) if octave_only else max_n
        for b in range(a, hi + 1):
            g_ab = gcd(a, b)
            lcm_ab = (a // g_ab) * b
            for c in range(b, hi + 1):
                if gcd(g_ab, c) != 1:
                    continue
                lcm = (lcm_ab // gcd(lcm_ab, c)) * c
                ia = lcm // a
                ib = lcm // b
                ic = lcm // c
                dp = a * b * c
                ip = ia * ib * ic
                if dp < ip:
                    group = 1
                    pwe = log2(dp) / 3
                    pwe2 = 0.0 - log2(ip) / 3
                elif dp > ip:
                    group = 2
                    pwe = 0.0 - log2(ip) / 3
                    pwe2 = log2(dp) / 3
                else:
                    group = 3
                    pwe = log2(dp) / 3
                    pwe2 = 0.0 - pwe
                out.append((a, b, c, ia, ib, ic, group, pwe, pwe2))
    return out
