"""Brute-force reference implementations, independent of the package internals.

Elements are plain dicts ``{index tuple: Fraction}``; products are computed
by concatenating index words and bubble-sorting them with a swap count.
"""

from fractions import Fraction
from itertools import permutations


def sort_by_swaps(word):
    """Return (swap count, sorted list) using adjacent transpositions only."""
    w = list(word)
    swaps = 0
    changed = True
    while changed:
        changed = False
        for k in range(len(w) - 1):
            if w[k] > w[k + 1]:
                w[k], w[k + 1] = w[k + 1], w[k]
                swaps += 1
                changed = True
    return swaps, w


def word_to_blade(word):
    """``(sign, blade)`` for ``e_{w0} e_{w1} ...``; sign 0 on a repeated letter."""
    swaps, w = sort_by_swaps(word)
    if len(set(w)) != len(w):
        return 0, None
    return (-1) ** swaps, tuple(w)


def pair_scan_inversions(u, v):
    return sum(1 for i in u for j in v if i > j)


def ref_wedge(x, y):
    out = {}
    for bu, cu in x.items():
        for bv, cv in y.items():
            s, b = word_to_blade(tuple(bu) + tuple(bv))
            if s:
                out[b] = out.get(b, 0) + s * cu * cv
    return {b: c for b, c in out.items() if c}


def ref_sub(x, y):
    out = dict(x)
    for b, c in y.items():
        out[b] = out.get(b, 0) - c
    return {b: c for b, c in out.items() if c}


def ref_commutator(a, x):
    return ref_sub(ref_wedge(a, x), ref_wedge(x, a))


def gauss_det(rows):
    """Determinant by fraction-exact Gaussian elimination."""
    m = [[Fraction(x) for x in r] for r in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return det


def perm_sign(p):
    swaps, _ = sort_by_swaps(p)
    return (-1) ** swaps


def leibniz_plain(rows):
    n = len(rows)
    total = 0
    for p in permutations(range(n)):
        prod = 1
        for i in range(n):
            prod *= rows[i][p[i]]
        total += perm_sign(p) * prod
    return total
