"""Finite-dimensional algebras given by structure constants.

Elements and functionals are coefficient vectors (numpy object arrays) with
respect to the algebra's basis and its dual basis.  The two groupoid algebras,
K(G) with pointwise product and CG with convolution, are built here as weak
Hopf algebras.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import exactlin as xl
from .exactlin import as_exact, format_scalar, parse_scalar, zeros
from .groupoid import Groupoid


class AlgebraError(ValueError):
    """Invalid structure constants or an input that violates an algebra axiom."""


class Algebra:
    """Algebra with basis e_0..e_{n-1} and e_i e_j = sum_k c[i, j, k] e_k."""

    def __init__(self, basis_labels: Sequence[str], struct_consts, unit=None, name: str = ""):
        self.basis_labels = tuple(str(b) for b in basis_labels)
        self.n = len(self.basis_labels)
        c = np.asarray(struct_consts, dtype=object)
        if c.shape != (self.n, self.n, self.n):
            raise AlgebraError(f"structure constants must have shape {(self.n,) * 3}, got {c.shape}")
        self.c = c
        self.unit = None if unit is None else as_exact(unit).reshape(-1)
        if self.unit is not None and self.unit.shape != (self.n,):
            raise AlgebraError("unit vector has the wrong length")
        self.name = name

    def __repr__(self):
        return f"Algebra({self.name or '?'}, dim={self.n})"

    # -- elements -------------------------------------------------------
    def basis(self, i: int) -> np.ndarray:
        return xl.unit_vector(self.n, i)

    def zero(self) -> np.ndarray:
        return zeros(self.n)

    @property
    def one(self) -> np.ndarray:
        if self.unit is None:
            raise AlgebraError(f"{self!r} has no unit")
        return self.unit

    def mul(self, x, y) -> np.ndarray:
        # restrict to the supports; products in large tensor algebras are sparse
        x = np.asarray(x, dtype=object)
        y = np.asarray(y, dtype=object)
        ix, iy = np.flatnonzero(x != 0), np.flatnonzero(y != 0)
        if len(ix) == 0 or len(iy) == 0:
            return zeros(self.n)
        sub = self.c[np.ix_(ix, iy)]
        return np.tensordot(x[ix], np.tensordot(sub, y[iy], axes=([1], [0])), axes=1)

    def left_matrix(self, x) -> np.ndarray:
        """Matrix of b -> x b."""
        return np.einsum("i,ijk->kj", x, self.c)

    def right_matrix(self, x) -> np.ndarray:
        """Matrix of a -> a x."""
        return np.einsum("j,ijk->ki", x, self.c)

    @property
    def mult_matrix(self) -> np.ndarray:
        """n x n^2 matrix of the multiplication map A (x) A -> A (row-major tensor basis)."""
        return self.c.transpose(2, 0, 1).reshape(self.n, self.n * self.n)

    # -- axioms ---------------------------------------------------------
    def associativity_witness(self) -> Optional[tuple]:
        c = self.c
        lhs = np.einsum("ijm,mkl->ijkl", c, c)
        rhs = np.einsum("jkm,iml->ijkl", c, c)
        bad = np.argwhere(lhs != rhs)
        return None if len(bad) == 0 else tuple(int(t) for t in bad[0][:3])

    def is_associative(self) -> bool:
        return self.associativity_witness() is None

    def left_annihilated(self) -> list:
        """Basis of {a : a A = 0}."""
        stack = np.concatenate([self.right_matrix(self.basis(j)) for j in range(self.n)], axis=0)
        return xl.kernel_basis(stack)

    def right_annihilated(self) -> list:
        """Basis of {a : A a = 0}."""
        stack = np.concatenate([self.left_matrix(self.basis(j)) for j in range(self.n)], axis=0)
        return xl.kernel_basis(stack)

    def is_nondegenerate(self) -> bool:
        return not self.left_annihilated() and not self.right_annihilated()

    def is_idempotent(self) -> bool:
        return xl.rank(self.mult_matrix) == self.n

    def unit_is_identity(self, u=None) -> bool:
        u = self.unit if u is None else u
        if u is None:
            return False
        I = xl.identity(self.n)
        return bool(np.all(self.left_matrix(u) == I) and np.all(self.right_matrix(u) == I))

    def find_unit(self) -> Optional[np.ndarray]:
        """Solve for a two-sided identity; None if the algebra is not unital."""
        n = self.n
        # u e_j = e_j and e_j u = e_j for all j, linear in u
        rows, rhs = [], []
        for j in range(n):
            rows.append(self.right_matrix(self.basis(j)))
            rows.append(self.left_matrix(self.basis(j)))
            rhs.append(self.basis(j))
            rhs.append(self.basis(j))
        return xl.solve(np.concatenate(rows, axis=0), np.concatenate(rhs))

    def is_commutative(self) -> bool:
        return bool(np.all(self.c == self.c.transpose(1, 0, 2)))

    def verify(self) -> "Report":
        from .report import Report

        rep = Report(f"algebra axioms: {self.name or 'A'}")
        w = self.associativity_witness()
        rep.add("associativity", "(ab)c = a(bc)", w is None, witness=None if w is None else {"basis_triple": w})
        la, ra = self.left_annihilated(), self.right_annihilated()
        rep.add("nondegenerate", "aA = 0 or Aa = 0 implies a = 0", not la and not ra,
                witness=(la or ra or [None])[0])
        rep.add("idempotent", "A^2 = A", self.is_idempotent())
        if self.unit is not None:
            rep.add("unit", "1a = a = a1", self.unit_is_identity())
        return rep

    # -- io -------------------------------------------------------------
    def to_json(self) -> dict:
        nz = np.argwhere(self.c != 0)
        d = {
            "kind": "algebra",
            "basis": list(self.basis_labels),
            "consts": [[int(i), int(j), int(k), format_scalar(self.c[i, j, k])] for i, j, k in nz],
        }
        if self.unit is not None:
            d["unit"] = xl.serialize_vector(self.unit)
        if self.name:
            d["name"] = self.name
        return d

    @classmethod
    def from_json(cls, data: dict) -> "Algebra":
        try:
            basis = [str(b) for b in data["basis"]]
            n = len(basis)
            c = zeros(n, n, n)
            for entry in data["consts"]:
                i, j, k, s = entry
                c[int(i), int(j), int(k)] = parse_scalar(str(s))
            unit = data.get("unit")
            if unit is not None:
                unit = _dense_or_sparse(unit, n)
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            raise AlgebraError(f"malformed algebra file: {exc}") from None
        return cls(basis, c, unit, name=str(data.get("name", "")))


def _dense_or_sparse(data, n: int) -> np.ndarray:
    """Vector from a dense list of scalars or a sparse list of [index, scalar] pairs."""
    v = zeros(n)
    if len(data) and isinstance(data[0], (list, tuple)):
        for i, s in data:
            v[int(i)] = parse_scalar(str(s))
    else:
        if len(data) != n:
            raise ValueError(f"dense vector of length {len(data)} where {n} was expected")
        for i, s in enumerate(data):
            v[i] = parse_scalar(str(s))
    return v


def load_algebra(path) -> Algebra:
    with open(path) as fh:
        return Algebra.from_json(json.load(fh))


def tensor(A: Algebra, B: Algebra) -> Algebra:
    """A (x) B with basis e_i (x) f_j in row-major order and componentwise product."""
    n = A.n * B.n
    c = np.einsum("ikm,jln->ijklmn", A.c, B.c).reshape(n, n, n)
    labels = [f"{a}⊗{b}" for a in A.basis_labels for b in B.basis_labels]
    unit = None
    if A.unit is not None and B.unit is not None:
        unit = np.outer(A.unit, B.unit).reshape(-1)
    return Algebra(labels, c, unit, name=f"{A.name}⊗{B.name}")


# ---------------------------------------------------------------------------
# multipliers
# ---------------------------------------------------------------------------

@dataclass
class MultiplierPair:
    """A multiplier m of A as the pair of actions b -> mb (L) and a -> am (R)."""

    L: np.ndarray
    R: np.ndarray

    def vector(self) -> np.ndarray:
        return np.concatenate([self.L.reshape(-1), self.R.reshape(-1)])

    def is_compatible(self, A: Algebra) -> bool:
        c, L, R = A.c, self.L, self.R
        # L(ab) = L(a) b
        lhs = np.einsum("abm,km->kab", c, L)
        rhs = np.einsum("ja,jbk->kab", L, c)
        if np.any(lhs != rhs):
            return False
        # R(ab) = a R(b)
        lhs = np.einsum("abm,km->kab", c, R)
        rhs = np.einsum("jb,ajk->kab", R, c)
        if np.any(lhs != rhs):
            return False
        # a L(b) = R(a) b
        lhs = np.einsum("jb,ajk->kab", L, c)
        rhs = np.einsum("ja,jbk->kab", R, c)
        return not np.any(lhs != rhs)


def embed_multiplier(A: Algebra, a) -> MultiplierPair:
    return MultiplierPair(A.left_matrix(a), A.right_matrix(a))


def multiplier_algebra(A: Algebra) -> list:
    """Basis of M(A) as compatible (L, R) pairs, solved as one linear system.

    Raises AlgebraError for a degenerate product, where M(A) is not defined.
    """
    if not A.is_nondegenerate():
        raise AlgebraError("multiplier algebra needs a non-degenerate product")
    n, c = A.n, A.c
    nn = n * n
    Lv = lambda k, j: k * n + j  # noqa: E731
    Rv = lambda k, j: nn + k * n + j  # noqa: E731
    nzc = [(int(a), int(b), int(m), c[a, b, m]) for a, b, m in np.argwhere(c != 0)]
    by_ab: dict = {}
    for a, b, m, v in nzc:
        by_ab.setdefault((a, b), []).append((m, v))
    by_bk: dict = {}  # (b, k) -> [(j, c[j,b,k])]
    by_ak: dict = {}  # (a, k) -> [(j, c[a,j,k])]
    for j, b, k, v in nzc:
        by_bk.setdefault((b, k), []).append((j, v))
    for a, j, k, v in nzc:
        by_ak.setdefault((a, k), []).append((j, v))

    def rows():
        for a in range(n):
            for b in range(n):
                for k in range(n):
                    r1: dict = {}
                    for m, v in by_ab.get((a, b), ()):
                        r1[Lv(k, m)] = r1.get(Lv(k, m), 0) + v
                    for j, v in by_bk.get((b, k), ()):
                        r1[Lv(j, a)] = r1.get(Lv(j, a), 0) - v
                    yield {x: y for x, y in r1.items() if y}
                    r2: dict = {}
                    for m, v in by_ab.get((a, b), ()):
                        r2[Rv(k, m)] = r2.get(Rv(k, m), 0) + v
                    for j, v in by_ak.get((a, k), ()):
                        r2[Rv(j, b)] = r2.get(Rv(j, b), 0) - v
                    yield {x: y for x, y in r2.items() if y}
                    r3: dict = {}
                    for j, v in by_ak.get((a, k), ()):
                        r3[Lv(j, b)] = r3.get(Lv(j, b), 0) + v
                    for j, v in by_bk.get((b, k), ()):
                        r3[Rv(j, a)] = r3.get(Rv(j, a), 0) - v
                    yield {x: y for x, y in r3.items() if y}

    basis = xl.kernel_of_rows(rows(), 2 * nn)
    return [MultiplierPair(v[:nn].reshape(n, n), v[nn:].reshape(n, n)) for v in basis]


def multiplier_embedding_report(A: Algebra):
    """Compare M(A) with the image of A -> M(A); for unital A they coincide."""
    from .report import Report

    pairs = multiplier_algebra(A)
    dim_m = len(pairs)
    embedded = [embed_multiplier(A, A.basis(i)).vector() for i in range(A.n)]
    dim_img = xl.span_rank(embedded, 2 * A.n * A.n)
    rep = Report("multiplier algebra", info={"dim_A": A.n, "dim_M(A)": dim_m})
    rep.add("embedding_injective", "a -> (L_a, R_a) is injective", dim_img == A.n)
    rep.add("pairs_compatible", "L(ab)=L(a)b, R(ab)=aR(b), aL(b)=R(a)b",
            all(p.is_compatible(A) for p in pairs))
    if A.unit is not None:
        rep.add("unital_M(A)_equals_A", "unital A: M(A) = A", dim_m == A.n and dim_img == dim_m)
    return rep


def tilde_functionals(A: Algebra) -> list:
    """Spanning set of {w(. a)} for w in the dual basis and a in the basis."""
    out = []
    for a in range(A.n):
        Ra = A.right_matrix(A.basis(a))
        for k in range(A.n):
            out.append(Ra[k, :].copy())  # x -> (x e_a)_k
    return out


def tilde_is_full_dual(A: Algebra) -> bool:
    """Is {w(. a)} all of A' (true for finite-dimensional non-degenerate A)?"""
    return xl.span_rank(tilde_functionals(A), A.n) == A.n


# ---------------------------------------------------------------------------
# groupoid algebras
# ---------------------------------------------------------------------------

def function_algebra(G: Groupoid):
    """K(G): functions on the arrows with pointwise product, Delta(f)(p, q) = f(pq)."""
    from .wmha import WeakHopf

    arrows = G.arrows
    n = len(arrows)
    c = zeros(n, n, n)
    for i in range(n):
        c[i, i, i] = 1
    delta = zeros(n * n, n)
    for p, q in G.composable_pairs():
        r = G.compose(p, q)
        delta[G.index(p) * n + G.index(q), G.index(r)] = 1
    counit = zeros(n)
    for u in G.units:
        counit[G.index(G.unit_arrow[u])] = 1
    S = zeros(n, n)
    for p in arrows:
        S[G.index(G.inv[p]), G.index(p)] = 1
    unit = as_exact([1] * n)
    A = Algebra([f"δ{p}" for p in arrows], c, unit, name="K(G)")
    return WeakHopf(A, delta, counit, S)


def groupoid_algebra(G: Groupoid):
    """CG: convolution algebra with lambda_p lambda_q = lambda_pq, Delta(lambda_p) = lambda_p (x) lambda_p."""
    from .wmha import WeakHopf

    arrows = G.arrows
    n = len(arrows)
    c = zeros(n, n, n)
    for p, q in G.composable_pairs():
        c[G.index(p), G.index(q), G.index(G.compose(p, q))] = 1
    delta = zeros(n * n, n)
    for i in range(n):
        delta[i * n + i, i] = 1
    counit = as_exact([1] * n)
    S = zeros(n, n)
    for p in arrows:
        S[G.index(G.inv[p]), G.index(p)] = 1
    unit = zeros(n)
    for u in G.units:
        unit[G.index(G.unit_arrow[u])] = 1
    A = Algebra([f"λ{p}" for p in arrows], c, unit, name="CG")
    return WeakHopf(A, delta, counit, S)
