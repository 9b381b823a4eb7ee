"""Exact matrix rank over Q and over prime fields.

No floating point anywhere: the rational-rank path runs fraction-free
Gaussian elimination (Bareiss) on Python integers, the modular path runs
ordinary elimination with inverses mod p.  Matrices are small dense
lists of lists; rows of zeros and empty matrices are fine.
"""

from __future__ import annotations

from .errors import InputError


def rank_over_q(rows: list[list[int]]) -> int:
    """Rank over the rationals of an integer matrix, by Bareiss elimination."""
    a = [list(map(int, r)) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    rank = 0
    prev = 1
    row = 0
    for col in range(n):
        pivot = None
        for r in range(row, m):
            if a[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        a[row], a[pivot] = a[pivot], a[row]
        pv = a[row][col]
        for r in range(row + 1, m):
            arc = a[r][col]
            ar = a[r]
            arow = a[row]
            for c in range(col + 1, n):
                ar[c] = (ar[c] * pv - arc * arow[c]) // prev
            ar[col] = 0
        prev = pv
        rank += 1
        row += 1
        if row == m:
            break
    return rank


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    """Rank over GF(p) by Gaussian elimination."""
    if p < 2:
        raise InputError(f"modulus must be a prime >= 2, got {p}")
    a = [[int(x) % p for x in r] for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    rank = 0
    row = 0
    for col in range(n):
        pivot = None
        for r in range(row, m):
            if a[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        a[row], a[pivot] = a[pivot], a[row]
        inv = pow(a[row][col], -1, p)
        arow = a[row]
        for c in range(col, n):
            arow[c] = arow[c] * inv % p
        for r in range(row + 1, m):
            f = a[r][col]
            if f:
                ar = a[r]
                for c in range(col, n):
                    ar[c] = (ar[c] - f * arow[c]) % p
        rank += 1
        row += 1
        if row == m:
            break
    return rank


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True
