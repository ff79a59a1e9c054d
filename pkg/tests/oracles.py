"""Slow, obviously-correct reference implementations used by the tests.

Matrices are lists of 0/1 rows; vectors are 0/1 lists indexed from e_1.
"""

import random


def bits(v, n):
    return [v >> i & 1 for i in range(n)]


def unbits(xs):
    return sum(b << i for i, b in enumerate(xs))


def form(u, v, n):
    """sum of u_i v_{n+1-i}"""
    a, b = bits(u, n), bits(v, n)
    return sum(a[i] * b[n - 1 - i] for i in range(n)) % 2


def transvection_matrix(v, n):
    # row i is the image of e_{i+1}: e + (e . v) v
    return [bits((1 << i) ^ (v if form(1 << i, v, n) else 0), n) for i in range(n)]


def matmul(A, B):
    n = len(A)
    return [[sum(A[i][k] * B[k][j] for k in range(n)) % 2 for j in range(n)] for i in range(n)]


def to_rows(M):
    return tuple(unbits(r) for r in M)


def from_rows(rows, n):
    return [bits(r, n) for r in rows]


def word_rows(vs, n):
    M = [[int(i == j) for j in range(n)] for i in range(n)]
    for v in vs:
        M = matmul(M, transvection_matrix(v, n))
    return to_rows(M)


def span_set(vs):
    out = {0}
    for v in vs:
        out |= {x ^ v for x in out}
    return out


def random_word(rng: random.Random, n, length):
    return [rng.randrange(1, 1 << n) for _ in range(length)]


def symplectic_pairs_basis(rows):
    """Rows of a symplectic matrix listed as a_1, b_1, a_2, b_2, ..."""
    n = len(rows)
    out = []
    for i in range(n // 2):
        out += [rows[i], rows[n - 1 - i]]
    return out
