"""Exact arithmetic over the Gaussian rationals Q(i) and exact linear algebra.

Scalars are kept as plain Python numbers whenever they are real (``int`` or
``fractions.Fraction``) and as :class:`GaussianRational` otherwise, so the
overwhelmingly common integer case runs at native speed inside numpy object
arrays.  Matrices and vectors are numpy arrays with ``dtype=object``.

Elimination is Gauss-Jordan over the field on sparse rows.  Every result is
exact; there is no tolerance anywhere.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

import numpy as np


class GaussianRational:
    """a + b*i with a, b rational and b != 0 (real values collapse to Fraction/int)."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    # -- coercion -------------------------------------------------------
    @staticmethod
    def _parts(x):
        if isinstance(x, GaussianRational):
            return x.re, x.im
        if isinstance(x, (int, Fraction)):
            return Fraction(x), Fraction(0)
        return None

    def __add__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return scalar_from_parts(self.re + p[0], self.im + p[1])

    __radd__ = __add__

    def __sub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return scalar_from_parts(self.re - p[0], self.im - p[1])

    def __rsub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return scalar_from_parts(p[0] - self.re, p[1] - self.im)

    def __mul__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        a, b = self.re, self.im
        c, d = p
        return scalar_from_parts(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return self * inverse_scalar(scalar_from_parts(*p))

    def __rtruediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return scalar_from_parts(*p) * inverse_scalar(self)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __eq__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return self.re == p[0] and self.im == p[1]

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussianRational({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[int, Fraction, GaussianRational]

I = GaussianRational(0, 1)


def scalar_from_parts(re: Fraction, im: Fraction) -> Scalar:
    if im:
        return GaussianRational(re, im)
    return _real(re)


def _real(x: Fraction):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def scalar(x) -> Scalar:
    """Canonical form: int if integral, Fraction if real, else GaussianRational."""
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return _real(x)
    if isinstance(x, GaussianRational):
        return scalar_from_parts(x.re, x.im)
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, complex):
        raise TypeError("floating point complex numbers are not exact; use GaussianRational")
    if isinstance(x, float):
        raise TypeError("floats are not exact scalars")
    if isinstance(x, np.integer):
        return int(x)
    raise TypeError(f"cannot convert {x!r} to an exact scalar")


def inverse_scalar(x: Scalar) -> Scalar:
    if isinstance(x, GaussianRational):
        norm = x.re * x.re + x.im * x.im
        return scalar_from_parts(x.re / norm, -x.im / norm)
    if x == 0:
        raise ZeroDivisionError("inverse of zero scalar")
    return _real(Fraction(1) / Fraction(x))


def div(a: Scalar, b: Scalar) -> Scalar:
    return scalar(a * inverse_scalar(b))


_RAT = r"[+-]?\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"^\s*(?:(?P<re>{_RAT})\s*)?(?:(?P<im>[+-]?\s*(?:\d+(?:/\d+)?)?)\s*\*?\s*i)?\s*$"
)


def parse_scalar(text: str) -> Scalar:
    """Parse "a/b", "a/b+c/d i", "c/d i", "i", "-i" into an exact scalar."""
    if not isinstance(text, str):
        return scalar(text)
    m = _SCALAR_RE.match(text)
    if not m or (m.group("re") is None and m.group("im") is None):
        raise ValueError(f"malformed scalar {text!r}")
    re_txt, im_txt = m.group("re"), m.group("im")
    if im_txt is not None:
        im_txt = im_txt.replace(" ", "")
        if im_txt == "" and re_txt is not None:
            # "c i" or "c*i": the lone number is the imaginary coefficient
            re_txt, im_txt = None, re_txt
        elif re_txt is not None and im_txt[:1] not in ("+", "-"):
            raise ValueError(f"malformed scalar {text!r}")
    re_part = Fraction(re_txt) if re_txt else Fraction(0)
    if im_txt is None:
        im_part = Fraction(0)
    elif im_txt in ("", "+"):
        im_part = Fraction(1)
    elif im_txt == "-":
        im_part = Fraction(-1)
    else:
        im_part = Fraction(im_txt)
    return scalar_from_parts(re_part, im_part)


def _format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def format_scalar(x: Scalar) -> str:
    x = scalar(x)
    if not isinstance(x, GaussianRational):
        return _format_rational(x)
    im = _format_rational(x.im)
    if x.re == 0:
        return f"{im} i"
    sign = "" if x.im < 0 else "+"
    return f"{_format_rational(x.re)}{sign}{im} i"


# ---------------------------------------------------------------------------
# arrays
# ---------------------------------------------------------------------------

def zeros(*shape) -> np.ndarray:
    a = np.empty(shape, dtype=object)
    a.fill(0)
    return a


def identity(n: int) -> np.ndarray:
    m = zeros(n, n)
    for i in range(n):
        m[i, i] = 1
    return m


def as_exact(data) -> np.ndarray:
    """Object array of canonical scalars from nested sequences / arrays."""
    a = np.array(data, dtype=object)
    flat = a.reshape(-1)
    for k in range(flat.size):
        flat[k] = scalar(flat[k])
    return a


def canonical(a: np.ndarray) -> np.ndarray:
    return as_exact(a)


def is_zero(a) -> bool:
    a = np.asarray(a, dtype=object)
    return not bool((a != 0).any())


def unit_vector(n: int, i: int) -> np.ndarray:
    v = zeros(n)
    v[i] = 1
    return v


def _sparse_rows(M: np.ndarray) -> list:
    M = np.asarray(M, dtype=object)
    if M.ndim != 2:
        raise ValueError("expected a matrix")
    rows = []
    mask = M != 0
    for r in range(M.shape[0]):
        cols = np.nonzero(mask[r])[0]
        rows.append({int(c): M[r, c] for c in cols})
    return rows


class Echelon:
    """Incremental row echelon form over Q(i) on sparse rows.

    Each stored row has its pivot as its smallest column and pivot value 1.
    Rows are fed one at a time; redundant rows reduce to zero and are dropped.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        row = dict(row)
        pivots = self.pivots
        while True:
            hit = [c for c in row if c in pivots]
            if not hit:
                return row
            c = min(hit)
            f = row[c]
            for k, v in pivots[c].items():
                nv = row.get(k, 0) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)

    def add(self, row: dict) -> bool:
        """Insert a row; returns True when it increased the rank."""
        row = self.reduce({k: v for k, v in row.items() if v})
        if not row:
            return False
        p = min(row)
        inv = inverse_scalar(row[p])
        self.pivots[p] = {k: scalar(v * inv) for k, v in row.items()}
        return True

    def rref(self) -> dict:
        """Fully reduced rows keyed by pivot column."""
        order = sorted(self.pivots, reverse=True)
        done: dict[int, dict] = {}
        for p in order:
            row = dict(self.pivots[p])
            for q in [k for k in row if k in done and k != p]:
                f = row.pop(q)
                for k, v in done[q].items():
                    if k == q:
                        continue
                    nv = row.get(k, 0) - f * v
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
            done[p] = row
        return done


def echelon_of(M: np.ndarray) -> Echelon:
    M = np.asarray(M, dtype=object)
    ech = Echelon(M.shape[1])
    for row in _sparse_rows(M):
        if row:
            ech.add(row)
            if ech.rank == ech.ncols:
                break
    return ech


def rank(M: np.ndarray) -> int:
    M = np.asarray(M, dtype=object)
    if M.size == 0:
        return 0
    return echelon_of(M).rank


def kernel_basis(M: np.ndarray) -> list:
    """Basis of {v : M v = 0}; empty list iff M is injective."""
    M = np.asarray(M, dtype=object)
    ncols = M.shape[1]
    if M.shape[0] == 0:
        return [unit_vector(ncols, j) for j in range(ncols)]
    return kernel_of_echelon(echelon_of(M))


def kernel_of_rows(rows: Iterable[dict], ncols: int) -> list:
    """Kernel basis for a system given directly as sparse rows {column: coefficient}."""
    ech = Echelon(ncols)
    for row in rows:
        if row:
            ech.add(row)
    return kernel_of_echelon(ech)


def kernel_of_echelon(ech: Echelon) -> list:
    ncols = ech.ncols
    red = ech.rref()
    free = [j for j in range(ncols) if j not in red]
    basis = []
    for f in free:
        v = zeros(ncols)
        v[f] = 1
        for p, row in red.items():
            c = row.get(f, 0)
            if c:
                v[p] = scalar(-c)
        basis.append(v)
    return basis


def solve(M: np.ndarray, b) -> Optional[np.ndarray]:
    """Some x with M x = b, or None when the system is inconsistent."""
    M = np.asarray(M, dtype=object)
    b = np.asarray(b, dtype=object).reshape(-1)
    m, n = M.shape
    if b.shape[0] != m:
        raise ValueError("shape mismatch in solve")
    aug = zeros(m, n + 1)
    aug[:, :n] = M
    aug[:, n] = b
    ech = Echelon(n + 1)
    for row in _sparse_rows(aug):
        if row:
            ech.add(row)
    if n in ech.pivots:
        return None
    red = ech.rref()
    x = zeros(n)
    for p, row in red.items():
        x[p] = scalar(row.get(n, 0))
    return x


def solve_many(M: np.ndarray, B: np.ndarray) -> Optional[np.ndarray]:
    """X with M X = B column by column, or None if any column is inconsistent."""
    M = np.asarray(M, dtype=object)
    B = np.asarray(B, dtype=object)
    m, n = M.shape
    k = B.shape[1]
    aug = zeros(m, n + k)
    aug[:, :n] = M
    aug[:, n:] = B
    ech = Echelon(n + k)
    for row in _sparse_rows(aug):
        if row:
            ech.add(row)
    if any(p >= n for p in ech.pivots):
        return None
    red = ech.rref()
    X = zeros(n, k)
    for p, row in red.items():
        for j in range(k):
            X[p, j] = scalar(row.get(n + j, 0))
    return X


def inverse(M: np.ndarray) -> np.ndarray:
    M = np.asarray(M, dtype=object)
    n = M.shape[0]
    if M.shape != (n, n):
        raise ValueError("inverse of non-square matrix")
    X = solve_many(M, identity(n))
    if X is None or rank(M) < n:
        raise ValueError("matrix is singular")
    return X


def pivot_columns(M: np.ndarray) -> list:
    """Indices of a maximal linearly independent set of columns (leftmost first)."""
    M = np.asarray(M, dtype=object)
    ech = Echelon(M.shape[0])
    cols = []
    for j in range(M.shape[1]):
        col = {i: M[i, j] for i in np.nonzero(M[:, j] != 0)[0].tolist()}
        if col and ech.add(col):
            cols.append(j)
            if ech.rank == M.shape[0]:
                break
    return cols


def image_basis(M: np.ndarray) -> list:
    M = np.asarray(M, dtype=object)
    return [M[:, j].copy() for j in pivot_columns(M)]


# ---------------------------------------------------------------------------
# subspaces given by spanning vectors
# ---------------------------------------------------------------------------

def span_matrix(vectors: Sequence, dim: int) -> np.ndarray:
    """Column matrix of the given vectors (dim x len(vectors))."""
    M = zeros(dim, len(vectors))
    for j, v in enumerate(vectors):
        M[:, j] = np.asarray(v, dtype=object).reshape(-1)
    return M


def span_rank(vectors: Sequence, dim: int) -> int:
    if len(vectors) == 0:
        return 0
    return rank(span_matrix(vectors, dim).T)


def independent(vectors: Sequence, dim: int) -> list:
    """A basis of the span, chosen among the given vectors."""
    if len(vectors) == 0:
        return []
    M = span_matrix(vectors, dim)
    return [np.asarray(vectors[j], dtype=object).reshape(-1).copy() for j in pivot_columns(M)]


def in_span(v, vectors: Sequence, dim: int) -> bool:
    v = np.asarray(v, dtype=object).reshape(-1)
    if is_zero(v):
        return True
    if len(vectors) == 0:
        return False
    return solve(span_matrix(vectors, dim), v) is not None


def coordinates(v, basis: Sequence, dim: int) -> Optional[np.ndarray]:
    """Coordinates of v in the given (independent) basis, None if v is outside the span."""
    v = np.asarray(v, dtype=object).reshape(-1)
    if len(basis) == 0:
        return zeros(0) if is_zero(v) else None
    return solve(span_matrix(basis, dim), v)


def subspace_contains(big: Sequence, small: Sequence, dim: int) -> bool:
    r = span_rank(big, dim)
    return span_rank(list(big) + list(small), dim) == r


def same_span(U: Sequence, V: Sequence, dim: int) -> bool:
    ru = span_rank(U, dim)
    if ru != span_rank(V, dim):
        return False
    return span_rank(list(U) + list(V), dim) == ru


def annihilator(vectors: Sequence, dim: int) -> list:
    """Basis of the functionals vanishing on span(vectors)."""
    if len(vectors) == 0:
        return [unit_vector(dim, j) for j in range(dim)]
    return kernel_basis(span_matrix(vectors, dim).T)


def random_vectors(dim: int, count: int, seed: int, low: int = -3, high: int = 3) -> list:
    import random

    rng = random.Random(seed)
    return [as_exact([rng.randint(low, high) for _ in range(dim)]) for _ in range(count)]


def serialize_vector(v: Iterable) -> list:
    return [format_scalar(x) for x in np.asarray(v, dtype=object).reshape(-1)]
