"""Exact linear algebra over the rationals, plus a modular fast path.

Everything here works on plain lists of Fractions or ints; matrices are
lists of row lists.  The modular routines reduce mod a 31-bit prime so
that numpy-free int arithmetic stays well inside machine range.
"""
from __future__ import annotations

from fractions import Fraction

MOD_PRIMES = (2147483647, 2147483629, 2147483587)


def rank_exact(matrix: list[list[Fraction | int]]) -> int:
    """Rank over the rationals by fraction Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in matrix]
    rows = len(m)
    if rows == 0:
        return 0
    cols = len(m[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][c]
        for i in range(r + 1, rows):
            f = m[i][c]
            if f:
                g = f / pv
                mi, mr = m[i], m[r]
                for j in range(c, cols):
                    mi[j] -= mr[j] * g
        r += 1
        if r == rows:
            break
    return r


def solve_unique(matrix: list[list[Fraction | int]], rhs: list[Fraction | int],
                 nvars: int) -> list[Fraction]:
    """Solve an (over)determined linear system that must have a unique solution.

    Raises ValueError if the system is inconsistent or underdetermined.
    """
    m = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    rows = len(m)
    r = 0
    piv_cols = []
    for c in range(nvars):
        piv = next((i for i in range(r, rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        piv_cols.append(c)
        r += 1
    if any(m[i][nvars] for i in range(r, rows)):
        raise ValueError("inconsistent linear system")
    if r < nvars:
        raise ValueError("underdetermined linear system")
    sol = [Fraction(0)] * nvars
    for i, c in enumerate(piv_cols):
        sol[c] = m[i][nvars]
    return sol


def _to_int_rows(matrix: list[list[Fraction | int]]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators (rank preserving)."""
    out = []
    for row in matrix:
        scale = 1
        for x in row:
            if isinstance(x, Fraction) and x.denominator != 1:
                d = x.denominator
                g = _gcd(scale, d)
                scale = scale // g * d
        out.append([int(x * scale) if isinstance(x, Fraction) else x * scale
                    for x in row])
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def rank_mod_p(matrix: list[list[int]], p: int) -> int:
    """Rank of an integer matrix reduced mod p (a lower bound on the
    rational rank, with equality away from a measure-zero set of primes).

    Entries are reduced into [0, p) with p below 2^31, so the vectorized
    int64 path never overflows.
    """
    rows = len(matrix)
    if rows == 0:
        return 0
    try:
        import numpy as np
    except ImportError:
        return _rank_mod_p_slow(matrix, p)
    m = np.array([[x % p for x in row] for row in matrix], dtype=np.int64)
    cols = m.shape[1]
    r = 0
    for c in range(cols):
        col = m[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r, c:] = m[r, c:] * inv % p
        factors = m[r + 1:, c]
        live = np.nonzero(factors)[0]
        if live.size:
            block = m[r + 1 + live, c:]
            block = (block - factors[live, None] * m[r, c:]) % p
            m[r + 1 + live, c:] = block
        r += 1
        if r == rows:
            break
    return r


def _rank_mod_p_slow(matrix: list[list[int]], p: int) -> int:
    m = [[x % p for x in row] for row in matrix]
    rows, cols = len(m), len(m[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [x * inv % p for x in m[r]]
        mr = m[r]
        for i in range(r + 1, rows):
            f = m[i][c]
            if f:
                mi = m[i]
                for j in range(c, cols):
                    mi[j] = (mi[j] - f * mr[j]) % p
        r += 1
        if r == rows:
            break
    return r


def rank_int_rows(matrix: list[list[int]]) -> int:
    """Exact rank of an integer matrix by fraction-free elimination.

    Row updates are cross-multiplied through the gcd and each updated row
    is stripped of its content, which keeps entry growth tame without
    leaving integer arithmetic.
    """
    m = [row[:] for row in matrix]
    nrows = len(m)
    if nrows == 0:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv, best = None, None
        for i in range(r, nrows):
            v = m[i][c]
            if v and (best is None or abs(v) < best):
                best, piv = abs(v), i
                if best == 1:
                    break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][c]
        mr = m[r]
        for i in range(r + 1, nrows):
            f = m[i][c]
            if f:
                mi = m[i]
                g = _gcd(f, pv)
                a, b = pv // g, f // g
                for j in range(c, ncols):
                    mi[j] = mi[j] * a - mr[j] * b
                g2 = 0
                for v in mi:
                    if v:
                        g2 = _gcd(g2, abs(v))
                        if g2 == 1:
                            break
                if g2 > 1:
                    m[i] = [v // g2 for v in mi]
        r += 1
        if r == nrows:
            break
    return r


