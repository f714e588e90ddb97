"""Independent verification for type A via explicit trace-zero matrices.

A seaweed over A_{n-1} is realized inside sl(n) as the span of the diagonal
differences together with one matrix unit per defining root: upper
triangular units for the top subset, lower for the bottom.  Everything here
is exact: the antisymmetric form of a functional, its rank, the principal
element and the eigenspace dimensions of its adjoint action are computed
over the rationals (with a modular shortcut that is only trusted when it
certifies itself).
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from ._linalg import (MOD_PRIMES, rank_exact, rank_int_rows, rank_mod_p,
                      solve_unique, _to_int_rows)
from .rootsys import root_support, sub_positive_roots
from .seaweed import Seaweed
from .spectrum import Spectrum

Matrix = tuple[tuple[Fraction, ...], ...]

DEFAULT_SEED = 1729
SAMPLE_COUNT = 20
COEFF_BOUND = 100


@dataclass(frozen=True)
class MatrixSeaweed:
    """A Lie algebra of trace-zero n x n matrices with a distinguished basis."""

    n: int
    basis: tuple[tuple[tuple[int, int, int], ...], ...]  # sparse (row, col, val)
    labels: tuple[str, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def _brackets(self) -> list[list[dict[int, int]]]:
        return _build_brackets(self)

    def bracket_coords(self, p: int, q: int) -> dict[int, int]:
        return self._brackets[p][q]

    def element(self, coords) -> Matrix:
        """Dense matrix for a coordinate vector over the basis."""
        dense = [[Fraction(0)] * self.n for _ in range(self.n)]
        for c, elem in zip(coords, self.basis):
            if c:
                for r, col, v in elem:
                    dense[r][col] += c * v
        return tuple(tuple(row) for row in dense)

    def coordinates(self, mat: Matrix) -> list[Fraction]:
        """Express a matrix in the basis; fails if it is outside the span."""
        slots = {}
        for k, elem in enumerate(self.basis):
            for r, c, v in elem:
                slots.setdefault((r, c), []).append((k, v))
        coords = [Fraction(0)] * self.dim
        # off-diagonal slots are owned by single basis elements
        for (r, c), owners in slots.items():
            if r != c:
                (k, v), = owners
                coords[k] = Fraction(mat[r][c], v)
        residue = [[mat[r][c] for c in range(self.n)] for r in range(self.n)]
        for k, elem in enumerate(self.basis):
            if coords[k]:
                for r, c, v in elem:
                    residue[r][c] -= coords[k] * v
        # remaining diagonal: telescoping differences
        diag = [residue[i][i] for i in range(self.n)]
        if sum(diag) != 0:
            raise ValueError("matrix has nonzero trace")
        acc = Fraction(0)
        for i in range(self.n - 1):
            acc += diag[i]
            k = _diag_index(self, i)
            coords[k] += acc
        check = self.element(coords)
        if check != mat:
            raise ValueError("matrix lies outside the algebra")
        return coords


def _diag_index(m: MatrixSeaweed, i: int) -> int:
    for k, lab in enumerate(m.labels):
        if lab == f"h{i + 1}":
            return k
    raise ValueError("missing diagonal basis element")


def _sparse_mult(a, b, n: int) -> dict[tuple[int, int], int]:
    out: dict[tuple[int, int], int] = {}
    cols_b: dict[int, list[tuple[int, int]]] = {}
    for r, c, v in b:
        cols_b.setdefault(r, []).append((c, v))
    for r, c, v in a:
        for c2, v2 in cols_b.get(c, ()):
            key = (r, c2)
            out[key] = out.get(key, 0) + v * v2
    return {k: v for k, v in out.items() if v}


def _build_brackets(m: MatrixSeaweed) -> list[list[dict[int, int]]]:
    d = m.dim
    # index off-diagonal slots by owner
    owner: dict[tuple[int, int], tuple[int, int]] = {}
    for k, elem in enumerate(m.basis):
        for r, c, v in elem:
            if r != c:
                owner[(r, c)] = (k, v)
    diag_pos = {}
    for i in range(m.n - 1):
        diag_pos[i] = _diag_index(m, i)
    table: list[list[dict[int, int]]] = [[{} for _ in range(d)] for _ in range(d)]
    for p in range(d):
        for q in range(p + 1, d):
            ab = _sparse_mult(m.basis[p], m.basis[q], m.n)
            ba = _sparse_mult(m.basis[q], m.basis[p], m.n)
            for k, v in ba.items():
                ab[k] = ab.get(k, 0) - v
            ab = {k: v for k, v in ab.items() if v}
            coords: dict[int, int] = {}
            diag = [0] * m.n
            for (r, c), v in ab.items():
                if r == c:
                    diag[r] += v
                else:
                    if (r, c) not in owner:
                        raise AssertionError(
                            "bracket left the span: slot "
                            f"({r},{c}) from [{m.labels[p]},{m.labels[q]}]")
                    k, unit = owner[(r, c)]
                    if v % unit:
                        raise AssertionError("non-integral bracket coefficient")
                    coords[k] = coords.get(k, 0) + v // unit
            if sum(diag) != 0:
                raise AssertionError("bracket has nonzero trace")
            acc = 0
            for i in range(m.n - 1):
                acc += diag[i]
                if acc:
                    k = diag_pos[i]
                    coords[k] = coords.get(k, 0) + acc
            coords = {k: v for k, v in coords.items() if v}
            table[p][q] = coords
            table[q][p] = {k: -v for k, v in coords.items()}
    return table


def realize_type_a(s: Seaweed) -> MatrixSeaweed:
    """Matrix model of a type-A seaweed: diagonals plus one unit per root."""
    if s.root_system.lie_type.family != "A":
        raise ValueError("matrix realizations are available for type A only")
    n = s.rank + 1
    basis: list[tuple[tuple[int, int, int], ...]] = []
    labels: list[str] = []
    for i in range(n - 1):
        basis.append(((i, i, 1), (i + 1, i + 1, -1)))
        labels.append(f"h{i + 1}")

    def unit_for(beta) -> tuple[int, int]:
        supp = sorted(root_support(beta))
        i, j = supp[0], supp[-1]
        return n - j - 1, n - i  # 0-based (row, col), upper triangular

    for beta in sub_positive_roots(s.root_system, s.pi1):
        r, c = unit_for(beta)
        basis.append(((r, c, 1),))
        labels.append(f"e{r + 1},{c + 1}")
    for beta in sub_positive_roots(s.root_system, s.pi2):
        r, c = unit_for(beta)
        basis.append(((c, r, 1),))
        labels.append(f"e{c + 1},{r + 1}")
    return MatrixSeaweed(n, tuple(basis), tuple(labels))


def poset_algebra_sl4() -> MatrixSeaweed:
    """The 8-dimensional incidence algebra of the poset 1,2 < 3 < 4 in sl(4)."""
    basis: list[tuple[tuple[int, int, int], ...]] = []
    labels: list[str] = []
    for i in range(3):
        basis.append(((i, i, 1), (i + 1, i + 1, -1)))
        labels.append(f"h{i + 1}")
    for (r, c) in ((0, 2), (1, 2), (0, 3), (1, 3), (2, 3)):
        basis.append(((r, c, 1),))
        labels.append(f"e{r + 1},{c + 1}")
    return MatrixSeaweed(4, tuple(basis), tuple(labels))


@dataclass(frozen=True)
class Functional:
    """A linear form on the algebra, one rational coefficient per basis slot."""

    coefficients: tuple[Fraction, ...]

    def of_coords(self, coords: dict[int, int]) -> Fraction:
        return sum((self.coefficients[k] * v for k, v in coords.items()),
                   Fraction(0))


def functional_from_labels(m: MatrixSeaweed, assignment: dict[str, int]) -> Functional:
    coeffs = [Fraction(assignment.get(lab, 0)) for lab in m.labels]
    return Functional(tuple(coeffs))


def sample_functionals(m: MatrixSeaweed, count: int = SAMPLE_COUNT,
                       seed: int = DEFAULT_SEED) -> list[Functional]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        out.append(Functional(tuple(
            Fraction(rng.randint(-COEFF_BOUND, COEFF_BOUND))
            for _ in range(m.dim))))
    return out


def kirillov_matrix(m: MatrixSeaweed, f: Functional) -> list[list[Fraction]]:
    d = m.dim
    mat = [[Fraction(0)] * d for _ in range(d)]
    for p in range(d):
        for q in range(p + 1, d):
            val = f.of_coords(m.bracket_coords(p, q))
            mat[p][q] = val
            mat[q][p] = -val
    return mat


def kirillov_rank(m: MatrixSeaweed, f: Functional) -> int:
    """Exact rank of the antisymmetric form of f."""
    return rank_exact(kirillov_matrix(m, f))


@dataclass(frozen=True)
class IndexCertificate:
    index: int
    witness: Functional | None      # functional attaining the maximal rank
    samples: int


def index(m: MatrixSeaweed, seed: int = DEFAULT_SEED,
          samples: int = SAMPLE_COUNT) -> IndexCertificate:
    """Dimension minus the best sampled form rank.

    The generic rank is attained on a Zariski-open set, so the sampled value
    is exact up to a vanishing failure probability; a full-rank modular
    probe is already a proof, and the best non-full sample is confirmed by
    exact elimination.
    """
    d = m.dim
    best_rank = 0
    best: Functional | None = None
    best_matrix = None
    for f in sample_functionals(m, samples, seed):
        kmat = kirillov_matrix(m, f)
        r = rank_mod_p(_to_int_rows(kmat), MOD_PRIMES[0])
        if r > best_rank:
            best_rank, best, best_matrix = r, f, kmat
            if r == d:
                return IndexCertificate(0, f, samples)
    if best_matrix is not None:
        best_rank = rank_int_rows(_to_int_rows(best_matrix))
    return IndexCertificate(d - best_rank, best, samples)


def principal_element(m: MatrixSeaweed, f: Functional) -> Matrix:
    """The unique element whose coadjoint action fixes the functional f."""
    d = m.dim
    rows = []
    rhs = []
    for p in range(d):
        rows.append([f.of_coords(m.bracket_coords(q, p)) for q in range(d)])
        rhs.append(f.coefficients[p])
    try:
        coords = solve_unique(rows, rhs, d)
    except ValueError as exc:
        raise ValueError(f"functional is not Frobenius: {exc}") from exc
    return m.element(coords)


def ad_matrix(m: MatrixSeaweed, fhat: Matrix) -> list[list[Fraction]]:
    """Adjoint action of fhat on the algebra, in basis coordinates."""
    coords = m.coordinates(fhat)
    d = m.dim
    cols = []
    for q in range(d):
        col = [Fraction(0)] * d
        for p in range(d):
            cp = coords[p]
            if cp:
                for k, v in m.bracket_coords(p, q).items():
                    col[k] += cp * v
        cols.append(col)
    return [[cols[q][k] for q in range(d)] for k in range(d)]


def ad_spectrum(m: MatrixSeaweed, fhat: Matrix) -> Spectrum:
    """Eigenvalue multiplicities of ad(fhat) over the scan window.

    Multiplicities are kernel co-ranks at every integer shift in
    [-(n+1), n+1]; they must sum to the algebra dimension, which certifies
    that the adjoint is diagonalizable with spectrum inside the window.
    """
    admat = ad_matrix(m, fhat)
    d = m.dim
    counts: Counter = Counter()
    for k in range(-(m.n + 1), m.n + 2):
        mult = _kernel_dim_shift(admat, k, d)
        if mult:
            counts[k] = mult
    if sum(counts.values()) != d:
        raise ValueError(
            "non-integer spectrum: eigenspace dimensions sum to "
            f"{sum(counts.values())} over the integer window, expected {d}")
    return Spectrum.from_counter(counts)


def _kernel_dim_shift(admat: list[list[Fraction]], k: int, d: int) -> int:
    shifted = [[admat[i][j] - (k if i == j else 0) for j in range(d)]
               for i in range(d)]
    ints = _to_int_rows(shifted)
    r = rank_mod_p(ints, MOD_PRIMES[0])
    if r == d:
        return 0
    # the modular probe lost rank or the kernel is real; settle it exactly
    return d - rank_int_rows(ints)
