"""Weak Hopf structure: coproduct, counit, antipode and the idempotent E.

Everything is finite-dimensional and unital, so the coproduct is stored as
an n^2 x n matrix and Sweedler sums become tensor contractions.  Elements of
A (x) A are length-n^2 vectors in the row-major basis e_i (x) e_j; elements of
A (x) A (x) A are length-n^3 vectors.
"""

from __future__ import annotations

import json
from functools import cached_property
from typing import Optional

import numpy as np

from . import exactlin as xl
from .algebra import Algebra, AlgebraError, _dense_or_sparse
from .exactlin import format_scalar, parse_scalar, zeros
from .report import Report


class WeakHopf:
    """A finite-dimensional (weak) Hopf structure on an algebra given by structure constants."""

    def __init__(self, alg: Algebra, delta, counit, antipode, E=None, name: str = ""):
        n = alg.n
        self.alg = alg
        self.n = n
        self.delta = np.asarray(delta, dtype=object)
        self.counit = np.asarray(counit, dtype=object).reshape(-1)
        self.antipode = np.asarray(antipode, dtype=object)
        if self.delta.shape != (n * n, n):
            raise AlgebraError(f"coproduct must be a {(n * n, n)} matrix")
        if self.counit.shape != (n,) or self.antipode.shape != (n, n):
            raise AlgebraError("counit or antipode has the wrong shape")
        if alg.unit is None:
            u = alg.find_unit()
            if u is None:
                raise AlgebraError("only unital algebras are supported as weak Hopf algebras")
            alg.unit = u
        if E is None:
            E = self.delta @ alg.unit
        self.E = np.asarray(E, dtype=object).reshape(-1)
        if self.E.shape != (n * n,):
            raise AlgebraError("E must be an element of A (x) A")
        self.name = name or alg.name

    def __repr__(self):
        return f"WeakHopf({self.name or '?'}, dim={self.n})"

    # -- basic operations ------------------------------------------------
    @property
    def c(self):
        return self.alg.c

    @property
    def one(self) -> np.ndarray:
        return self.alg.unit

    @property
    def S(self) -> np.ndarray:
        return self.antipode

    @cached_property
    def S_inv(self) -> np.ndarray:
        return xl.inverse(self.antipode)

    @cached_property
    def is_regular(self) -> bool:
        return xl.rank(self.antipode) == self.n

    def e(self, i: int) -> np.ndarray:
        return self.alg.basis(i)

    def mul(self, x, y) -> np.ndarray:
        return self.alg.mul(x, y)

    def L(self, x) -> np.ndarray:
        return self.alg.left_matrix(x)

    def R(self, x) -> np.ndarray:
        return self.alg.right_matrix(x)

    def cop(self, x) -> np.ndarray:
        """Delta(x) as a length n^2 vector."""
        return self.delta @ np.asarray(x, dtype=object)

    def cop_matrix(self, x) -> np.ndarray:
        """Delta(x) as an n x n coefficient matrix X[i, j] of e_i (x) e_j."""
        return self.cop(x).reshape(self.n, self.n)

    @cached_property
    def D3(self) -> np.ndarray:
        """Coproduct as a tensor D3[i, j, k] = coefficient of e_i (x) e_j in Delta(e_k)."""
        return self.delta.reshape(self.n, self.n, self.n)

    def eps(self, x):
        return xl.scalar(self.counit @ np.asarray(x, dtype=object))

    def t2(self, a, b) -> np.ndarray:
        return np.outer(a, b).reshape(-1)

    def t3(self, a, b, c) -> np.ndarray:
        return np.einsum("i,j,k->ijk", a, b, c).reshape(-1)

    def mul2(self, X, Y) -> np.ndarray:
        n, c = self.n, self.c
        Z = np.einsum("ij,kl,ikp,jlq->pq", np.reshape(X, (n, n)), np.reshape(Y, (n, n)), c, c, optimize=True)
        return Z.reshape(-1)

    def mul3(self, X, Y) -> np.ndarray:
        # leg by leg with tensordot; a single six-index object einsum is far too slow
        n, c = self.n, self.c
        X = np.reshape(X, (n, n, n))
        Y = np.reshape(Y, (n, n, n))
        T = np.tensordot(X, c, axes=([0], [0]))  # b c d p
        T = np.tensordot(T, Y, axes=([2], [0]))  # b c p e f
        T = np.tensordot(T, c, axes=([0, 3], [0, 1]))  # c p f q
        T = np.tensordot(T, c, axes=([0, 2], [0, 1]))  # p q r
        return T.reshape(-1)

    def left_mul2(self, X) -> np.ndarray:
        """n^2 x n^2 matrix of Y -> X Y on A (x) A."""
        n, c = self.n, self.c
        M = np.einsum("ij,iap,jbq->pqab", np.reshape(X, (n, n)), c, c, optimize=True)
        return M.reshape(n * n, n * n)

    def right_mul2(self, X) -> np.ndarray:
        """n^2 x n^2 matrix of Y -> Y X on A (x) A."""
        n, c = self.n, self.c
        M = np.einsum("ij,aip,bjq->pqab", np.reshape(X, (n, n)), c, c, optimize=True)
        return M.reshape(n * n, n * n)

    def id_tensor(self, f, X) -> np.ndarray:
        """(id (x) f) X for a functional f."""
        return np.reshape(X, (self.n, self.n)) @ np.asarray(f, dtype=object)

    def tensor_id(self, f, X) -> np.ndarray:
        """(f (x) id) X for a functional f."""
        return np.asarray(f, dtype=object) @ np.reshape(X, (self.n, self.n))

    def flip(self, X) -> np.ndarray:
        return np.reshape(X, (self.n, self.n)).T.reshape(-1)

    def apply2(self, F, G, X) -> np.ndarray:
        """(F (x) G) X for linear maps F, G given as matrices."""
        return (np.asarray(F) @ np.reshape(X, (self.n, self.n)) @ np.asarray(G).T).reshape(-1)

    # -- source and target maps -----------------------------------------
    @cached_property
    def eps_t_matrix(self) -> np.ndarray:
        """a -> sum a_(1) S(a_(2))."""
        return np.einsum("ijk,mj,imp->pk", self.D3, self.S, self.c, optimize=True)

    @cached_property
    def eps_s_matrix(self) -> np.ndarray:
        """a -> sum S(a_(1)) a_(2)."""
        return np.einsum("ijk,mi,mjp->pk", self.D3, self.S, self.c, optimize=True)

    @cached_property
    def eps_s_prime_matrix(self) -> np.ndarray:
        """a -> sum a_(2) S^-1(a_(1))."""
        return np.einsum("ijk,mi,jmp->pk", self.D3, self.S_inv, self.c, optimize=True)

    @cached_property
    def eps_t_prime_matrix(self) -> np.ndarray:
        """a -> sum S^-1(a_(2)) a_(1)."""
        return np.einsum("ijk,mj,mip->pk", self.D3, self.S_inv, self.c, optimize=True)

    def eps_t(self, a) -> np.ndarray:
        return self.eps_t_matrix @ np.asarray(a, dtype=object)

    def eps_s(self, a) -> np.ndarray:
        return self.eps_s_matrix @ np.asarray(a, dtype=object)

    def eps_s_prime(self, a) -> np.ndarray:
        return self.eps_s_prime_matrix @ np.asarray(a, dtype=object)

    def eps_t_prime(self, a) -> np.ndarray:
        return self.eps_t_prime_matrix @ np.asarray(a, dtype=object)

    @cached_property
    def As_basis(self) -> list:
        """Basis of A_s = {y : Delta(y) = E(1 (x) y)}."""
        n = self.n
        rhs = self.left_mul2(self.E) @ np.einsum("i,jk->ijk", self.one, xl.identity(n)).reshape(n * n, n)
        return xl.kernel_basis(self.delta - rhs)

    @cached_property
    def At_basis(self) -> list:
        """Basis of A_t = {x : Delta(x) = (x (x) 1)E}."""
        n = self.n
        rhs = self.right_mul2(self.E) @ np.einsum("ik,j->ijk", xl.identity(n), self.one).reshape(n * n, n)
        return xl.kernel_basis(self.delta - rhs)

    # -- canonical maps -------------------------------------------------
    def canonical_map(self, which: str) -> np.ndarray:
        """n^2 x n^2 matrix of T1..T4; column a*n+b is the image of e_a (x) e_b.

        T1(a(x)b) = Delta(a)(1(x)b), T2(a(x)b) = (a(x)1)Delta(b),
        T3(a(x)b) = (1(x)b)Delta(a), T4(a(x)b) = Delta(b)(a(x)1).
        """
        n, D3, c = self.n, self.D3, self.c
        table = {
            "T1": ("ija,jbq->iqab", D3, c),
            "T2": ("aip,ijb->pjab", c, D3),
            "T3": ("ija,bjq->iqab", D3, c),
            "T4": ("ijb,iap->pjab", D3, c),
        }
        if which not in table:
            raise ValueError(f"unknown canonical map {which!r}")
        sub, x, y = table[which]
        return np.einsum(sub, x, y).reshape(n * n, n * n)

    def G_maps(self):
        """The maps G1, G2 on A (x) A fixed by the kernel description of T1 and T2.

        (G1 (x) id)(Delta13(a)(1 (x) b (x) c)) = Delta13(a)(1 (x) E)(1 (x) b (x) c) and
        (id (x) G2)((a (x) b (x) 1)Delta13(c)) = (a (x) b (x) 1)(E (x) 1)Delta13(c).
        With a unit, c = 1 (resp. a = 1) already determines them.  Returns
        (G1, G2, consistent) with None for a map the data do not determine.
        """
        n, D3, c = self.n, self.D3, self.c
        E = self.E.reshape(n, n)
        I = xl.identity(n)
        # G1: X[i, j, l; a, b] = D_a[i, l] [j == b]; Y = a_(1) (x) E1 b (x) a_(2) E2
        Zb = np.einsum("jm,jbp->pmb", E, c)  # (E1 b) (x) E2
        X1 = np.einsum("ila,jb->ijlab", D3, I)
        Y1 = np.einsum("ika,jmb,kmq->ijqab", D3, Zb, c, optimize=True)
        Xm = X1.reshape(n * n, n ** 3)
        Ym = Y1.reshape(n * n, n ** 3)
        G1, ok1 = _fit_linear_map(Xm, Ym)
        # G2: X[j, k; i, c, b] = D_c[i, k] [j == b]; Y = E1 c_(1) (x) b E2 (x) c_(2)
        X2 = np.einsum("ikc,jb->jkicb", D3, I)
        bE = np.einsum("mj,bjq->mqb", E, c)  # E1 (x) b E2
        Y2 = np.einsum("ikc,mqb,mip->qkpcb", D3, bE, c, optimize=True)
        Xm2 = X2.reshape(n * n, n ** 3)
        Ym2 = Y2.reshape(n * n, n ** 3)
        G2, ok2 = _fit_linear_map(Xm2, Ym2)
        return G1, G2, ok1 and ok2

    # -- serialization ----------------------------------------------------
    def to_json(self) -> dict:
        n = self.n
        d = self.alg.to_json()
        d["kind"] = "wmha"
        d["unit"] = xl.serialize_vector(self.one)
        d["delta"] = [
            [int(k), int(i), int(j), format_scalar(self.D3[i, j, k])] for i, j, k in np.argwhere(self.D3 != 0)
        ]
        d["delta"].sort(key=lambda e: (e[0], e[1], e[2]))
        d["counit"] = [[int(i), format_scalar(self.counit[i])] for i in np.nonzero(self.counit != 0)[0]]
        d["antipode"] = [
            [int(j), int(i), format_scalar(self.S[i, j])] for i, j in np.argwhere(self.S != 0)
        ]
        d["antipode"].sort()
        E = self.E.reshape(n, n)
        d["E"] = [[int(i), int(j), format_scalar(E[i, j])] for i, j in np.argwhere(E != 0)]
        if self.name:
            d["name"] = self.name
        return d

    @classmethod
    def from_json(cls, data: dict) -> "WeakHopf":
        alg = Algebra.from_json(data)
        n = alg.n
        try:
            delta = zeros(n * n, n)
            for k, i, j, s in data["delta"]:
                delta[int(i) * n + int(j), int(k)] = parse_scalar(str(s))
            counit = _dense_or_sparse(data["counit"], n)
            S = zeros(n, n)
            for j, i, s in data["antipode"]:
                S[int(i), int(j)] = parse_scalar(str(s))
            E = None
            if "E" in data:
                E = zeros(n * n)
                for i, j, s in data["E"]:
                    E[int(i) * n + int(j)] = parse_scalar(str(s))
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            raise AlgebraError(f"malformed weak Hopf bundle: {exc}") from None
        return cls(alg, delta, counit, S, E, name=str(data.get("name", "")))


def load_wmha(path) -> WeakHopf:
    with open(path) as fh:
        return WeakHopf.from_json(json.load(fh))


def _fit_linear_map(X: np.ndarray, Y: np.ndarray):
    """Matrix G with G X = Y, determined when the columns of X span the whole space.

    Returns (G, consistent); G is None when X does not have full row rank.
    """
    dim = X.shape[0]
    piv = xl.pivot_columns(X)
    if len(piv) < dim:
        return None, False
    Xp = X[:, piv]
    Yp = Y[:, piv]
    Gt = xl.solve_many(Xp.T, Yp.T)
    G = Gt.T
    return G, bool(np.all(G @ X == Y))


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

def _first_bad(mask) -> Optional[list]:
    bad = np.argwhere(mask)
    return None if len(bad) == 0 else [int(t) for t in bad[0]]


def verify_axioms(W: WeakHopf) -> Report:
    """Check every weak multiplier Hopf algebra axiom, the antipode identities and regularity."""
    n, c, D3, S = W.n, W.c, W.D3, W.S
    nn = n * n
    rep = Report(f"weak Hopf axioms: {W.name or 'A'}", info={"dim": n})
    rep.extend(W.alg.verify())

    # coassociativity first: it is the usual casualty of a corrupted coproduct
    lhs = np.einsum("mlk,ijm->ijlk", D3, D3)
    rhs = np.einsum("imk,jlm->ijlk", D3, D3)
    bad = _first_bad(lhs != rhs)
    rep.add("coassociativity", "(Δ⊗id)Δ = (id⊗Δ)Δ", bad is None,
            witness=None if bad is None else {"basis_element": bad[3], "coefficient_of": bad[:3]})

    prod = np.einsum("abm,ijm->ijab", c, D3)
    dd = np.einsum("ija,klb,ikp,jlq->pqab", D3, D3, c, c, optimize=True)
    bad = _first_bad(prod != dd)
    rep.add("delta_homomorphism", "Δ(ab) = Δ(a)Δ(b)", bad is None,
            witness=None if bad is None else {"basis_pair": bad[2:]})

    T1 = W.canonical_map("T1").reshape(n, n, n, n)
    T2 = W.canonical_map("T2").reshape(n, n, n, n)
    lhs = np.einsum("i,iqab->qab", W.counit, T1)
    bad = _first_bad(lhs != c.transpose(2, 0, 1))
    rep.add("counit_left", "(ε⊗id)(Δ(a)(1⊗b)) = ab", bad is None,
            witness=None if bad is None else {"basis_pair": bad[1:]})
    lhs = np.einsum("j,pjab->pab", W.counit, T2)
    bad = _first_bad(lhs != c.transpose(2, 0, 1))
    rep.add("counit_right", "(id⊗ε)((c⊗1)Δ(a)) = ca", bad is None,
            witness=None if bad is None else {"basis_pair": bad[1:]})

    left_leg = xl.rank(T1.reshape(n, -1))
    right_leg = xl.rank(T2.transpose(1, 0, 2, 3).reshape(n, -1))
    rep.add("full_coproduct", "left leg of Δ(A)(1⊗A) and right leg of (A⊗1)Δ(A) are A",
            left_leg == n and right_leg == n, witness={"left_leg_dim": left_leg, "right_leg_dim": right_leg})

    E = W.E
    EE = W.mul2(E, E)
    rep.add("E_idempotent", "E² = E", bool(np.all(EE == E)))
    rep.add("E_equals_delta_of_unit", "E = Δ(1)", bool(np.all(E == W.cop(W.one))))

    LE, RE = W.left_mul2(E), W.right_mul2(E)
    T1m, T2m = T1.reshape(nn, nn), T2.reshape(nn, nn)
    T3m, T4m = W.canonical_map("T3"), W.canonical_map("T4")

    def same_image(P, Q):
        rp, rq = xl.rank(P), xl.rank(Q)
        return rp == rq and xl.rank(np.concatenate([P, Q], axis=1)) == rp

    rep.add("range_T1", "T₁(A⊗A) = E(A⊗A)", same_image(T1m, LE))
    rep.add("range_T2", "T₂(A⊗A) = (A⊗A)E", same_image(T2m, RE))
    rep.add("range_T3", "T₃(A⊗A) = (A⊗A)E", same_image(T3m, RE))
    rep.add("range_T4", "T₄(A⊗A) = E(A⊗A)", same_image(T4m, LE))

    one = W.one
    E2 = E.reshape(n, n)
    idD = np.einsum("im,jlm->ijl", E2, D3).reshape(-1)
    E12 = np.einsum("ij,k->ijk", E2, one).reshape(-1)
    E23 = np.einsum("i,jk->ijk", one, E2).reshape(-1)
    a = W.mul3(E12, E23)
    b = W.mul3(E23, E12)
    rep.add("E_coproduct", "(id⊗Δ)E = (E⊗1)(1⊗E) = (1⊗E)(E⊗1)",
            bool(np.all(idD == a) and np.all(a == b)))

    G1, G2, consistent = W.G_maps()
    if G1 is None or G2 is None or not consistent:
        rep.add("kernel_T1", "Ker(T₁) = (1-G₁)(A⊗A)", False, witness="G₁ not determined by its defining identity")
        rep.add("kernel_T2", "Ker(T₂) = (1-G₂)(A⊗A)", False, witness="G₂ not determined by its defining identity")
    else:
        Id = xl.identity(nn)
        k1 = xl.kernel_basis(T1m)
        k2 = xl.kernel_basis(T2m)
        im1 = xl.image_basis(Id - G1)
        im2 = xl.image_basis(Id - G2)
        rep.add("kernel_T1", "Ker(T₁) = (1-G₁)(A⊗A)", xl.same_span(k1, im1, nn),
                witness={"dim_ker": len(k1), "dim_image": len(im1)})
        rep.add("kernel_T2", "Ker(T₂) = (1-G₂)(A⊗A)", xl.same_span(k2, im2, nn),
                witness={"dim_ker": len(k2), "dim_image": len(im2)})

    # antipode
    rank_S = xl.rank(S)
    rep.add("antipode_invertible", "S bijective (regular)", rank_S == n, witness={"rank": rank_S})
    T = np.einsum("mlk,ijm->ijlk", D3, D3)  # (Δ⊗id)Δ(e_k)
    mid = np.einsum("ijlk,mj->imlk", T, S)
    v = np.einsum("imlk,imp,plq->qk", mid, c, c, optimize=True)
    bad = _first_bad(v != xl.identity(n))
    rep.add("antipode_identity", "Σ a₍₁₎S(a₍₂₎)a₍₃₎ = a", bad is None,
            witness=None if bad is None else {"basis_element": bad[1]})
    outer = np.einsum("ijlk,mi,rl->mjrk", T, S, S, optimize=True)
    v = np.einsum("mjrk,mjp,prq->qk", outer, c, c, optimize=True)
    bad = _first_bad(v != S)
    rep.add("antipode_identity_S", "Σ S(a₍₁₎)a₍₂₎S(a₍₃₎) = S(a)", bad is None,
            witness=None if bad is None else {"basis_element": bad[1]})
    lhs = np.einsum("abm,km->kab", c, S)
    rhs = np.einsum("ib,ja,ijk->kab", S, S, c)
    bad = _first_bad(lhs != rhs)
    rep.add("antipode_antihomomorphism", "S(ab) = S(b)S(a)", bad is None,
            witness=None if bad is None else {"basis_pair": bad[1:]})
    lhs = np.einsum("ijm,ma->ija", D3, S)
    rhs = np.einsum("pi,qj,ija->qpa", S, S, D3)
    bad = _first_bad(lhs != rhs)
    rep.add("antipode_anticoalgebra", "Δ(S(a)) = τ(S⊗S)Δ(a)", bad is None,
            witness=None if bad is None else {"basis_element": bad[2]})

    # source and target algebras
    As, At = W.As_basis, W.At_basis
    comm = all(np.all(W.mul(x, y) == W.mul(y, x)) for x in At for y in As)
    rep.add("base_algebras_commute", "A_s and A_t commute", comm)
    Et = [W.eps_t_matrix[:, k] for k in range(n)]
    Es = [W.eps_s_matrix[:, k] for k in range(n)]
    rep.add("eps_t_in_At", "ε_t(A) ⊆ A_t", xl.subspace_contains(At, Et, n))
    rep.add("eps_s_in_As", "ε_s(A) ⊆ A_s", xl.subspace_contains(As, Es, n))
    rep.add("antipode_As_to_At", "S(A_s) = A_t", xl.same_span([S @ y for y in As], At, n))
    ok_t = all(np.all(W.cop(x) == W.mul2(W.t2(x, one), E)) for x in Et)
    ok_s = all(np.all(W.cop(y) == W.mul2(E, W.t2(one, y))) for y in Es)
    rep.add("delta_of_eps_t", "Δ(ε_t(a)) = (ε_t(a)⊗1)E", ok_t)
    rep.add("delta_of_eps_s", "Δ(ε_s(a)) = E(1⊗ε_s(a))", ok_s)
    rep.info["dim_As"] = len(As)
    rep.info["dim_At"] = len(At)
    return rep


def distinguished_functionals(W: WeakHopf):
    """phi_B on span eps_s(A) and phi_C on span eps_t(A) with (phi_B (x) id)E = 1 = (id (x) phi_C)E.

    Each is returned as a :class:`SubspaceFunctional`.  Raises ValueError
    when the defining system is inconsistent.
    """
    n = W.n
    E = W.E.reshape(n, n)
    Vs = xl.independent([W.eps_s_matrix[:, k] for k in range(n)], n)
    Vt = xl.independent([W.eps_t_matrix[:, k] for k in range(n)], n)
    phi_B = _solve_leg_functional(E, Vs, W.one, left=True)
    phi_C = _solve_leg_functional(E, Vt, W.one, left=False)
    return phi_B, phi_C


class SubspaceFunctional:
    """A linear functional defined on span(basis) by its values on the basis."""

    def __init__(self, basis, values, dim):
        self.basis = list(basis)
        self.values = np.asarray(values, dtype=object)
        self.dim = dim

    def __call__(self, x):
        coords = xl.coordinates(x, self.basis, self.dim)
        if coords is None:
            raise ValueError("element lies outside the domain of the functional")
        return xl.scalar(coords @ self.values) if len(self.basis) else 0

    def unique(self, E, one, left: bool) -> bool:
        """Is this the only solution of the defining equation on its domain?"""
        M = _leg_system(E, self.basis, left)
        return len(xl.kernel_basis(M)) == 0


def _leg_system(E, V, left: bool):
    """Matrix of values -> (f (x) id)E (left) or (id (x) f)E (right) for f given on span V."""
    n = E.shape[0]
    X = E if left else E.T
    # X = sum_m v_m (x) w_m with v_m in V: express the left leg of X in V
    B = xl.span_matrix(V, n)
    coef = xl.solve_many(B, X)  # len(V) x n: X[:, j] = sum_m coef[m, j] v_m
    if coef is None:
        raise ValueError("left leg of E is not contained in the given subspace")
    return coef.T


def _solve_leg_functional(E, V, one, left: bool) -> SubspaceFunctional:
    n = E.shape[0]
    M = _leg_system(E, V, left)
    vals = xl.solve(M, one)
    if vals is None:
        raise ValueError("no distinguished functional: inconsistent system")
    return SubspaceFunctional(V, vals, n)
