"""Frobenius and quasi-Frobenius structure, and separability idempotents.

A functional f acts on the left by (a f)(x) = f(x a), i.e. a f = R_a^T f.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from . import exactlin as xl
from . import integrals as itg
from .algebra import Algebra, AlgebraError, _dense_or_sparse, tensor
from .exactlin import format_scalar, parse_scalar, zeros
from .report import Report
from .wmha import WeakHopf

DEFAULT_RANDOM_IDEALS = 20


def _alg(X: Union[WeakHopf, Algebra]) -> Algebra:
    return X.alg if isinstance(X, WeakHopf) else X


# ---------------------------------------------------------------------------
# Frobenius map
# ---------------------------------------------------------------------------

def frobenius_map(W: WeakHopf, h):
    """F(f) = (id (x) f o S)Delta(h) as an n x n matrix, with a module-map report."""
    h = np.asarray(h, dtype=object)
    if not (itg.is_left_cointegral(W, h) and itg.is_faithful_cointegral(W, h)):
        raise itg.NotFaithfulError("frobenius_map needs a faithful left cointegral")
    n = W.n
    F = W.cop_matrix(h) @ W.S.T
    rep = Report("Frobenius map")
    r = xl.rank(F)
    rep.add("bijective", "F: A′ → A has rank n", r == n, witness={"rank": r})
    bad = [a for a in range(n) if not np.all(W.L(W.e(a)) @ F == F @ W.R(W.e(a)).T)]
    rep.add("module_map", "aF(f) = F(af)", not bad, witness={"basis_elements": bad})
    return F, rep


def annihilators(A: Union[WeakHopf, Algebra], I, side: str) -> list:
    """r(I) = {x : I x = 0} for side 'right', l(I) = {x : x I = 0} for side 'left'."""
    A = _alg(A)
    n = A.n
    I = list(I)
    if not I:
        return [xl.unit_vector(n, j) for j in range(n)]
    if side == "right":
        M = np.concatenate([A.left_matrix(v) for v in I], axis=0)
    elif side == "left":
        M = np.concatenate([A.right_matrix(v) for v in I], axis=0)
    else:
        raise ValueError("side must be 'left' or 'right'")
    return xl.kernel_basis(M)


def principal_left_ideal(A, a) -> list:
    A = _alg(A)
    return xl.image_basis(A.right_matrix(a))


def principal_right_ideal(A, a) -> list:
    A = _alg(A)
    return xl.image_basis(A.left_matrix(a))


def ideal_family(A, seed: int, count: int = DEFAULT_RANDOM_IDEALS) -> list:
    """Generators: the basis followed by `count` seeded random integer vectors."""
    A = _alg(A)
    return [A.basis(i) for i in range(A.n)] + xl.random_vectors(A.n, count, seed)


def is_quasi_frobenius(A, seed: int = 0, count: int = DEFAULT_RANDOM_IDEALS) -> Report:
    """lr(Aa) = Aa and rl(aA) = aA over the generator family."""
    alg = _alg(A)
    n = alg.n
    gens = ideal_family(alg, seed, count)
    rep = Report("quasi-Frobenius", info={"seed": seed, "random_generators": count, "generators": len(gens)})
    bad_l = bad_r = None
    for idx, a in enumerate(gens):
        if bad_l is None:
            I = principal_left_ideal(alg, a)
            if not xl.same_span(annihilators(alg, annihilators(alg, I, "right"), "left"), I, n):
                bad_l = {"generator_index": idx, "generator": a, "ideal": I}
        if bad_r is None:
            J = principal_right_ideal(alg, a)
            if not xl.same_span(annihilators(alg, annihilators(alg, J, "left"), "right"), J, n):
                bad_r = {"generator_index": idx, "generator": a, "ideal": J}
    rep.add("lr_left_ideals", "lr(I) = I for I = Aa", bad_l is None, witness=bad_l)
    rep.add("rl_right_ideals", "rl(J) = J for J = aA", bad_r is None, witness=bad_r)
    return rep


def iperp_equals_rI(W: WeakHopf, h, I) -> bool:
    """F(I^perp) = r(I) for a left ideal I given by a spanning list."""
    F, _ = frobenius_map(W, h)
    n = W.n
    perp = xl.annihilator(list(I), n)
    image = [F @ f for f in perp]
    return xl.same_span(image, annihilators(W, I, "right"), n)


def proper_ideal_report(W: WeakHopf, seed: int = 0, count: int = DEFAULT_RANDOM_IDEALS) -> Report:
    """Every proper principal left ideal in the family has a nonzero right annihilator."""
    n = W.n
    bad = None
    for idx, a in enumerate(ideal_family(W, seed, count)):
        I = principal_left_ideal(W, a)
        if len(I) < n and not annihilators(W, I, "right"):
            bad = {"generator_index": idx}
            break
    rep = Report("right annihilators of proper ideals")
    rep.add("proper_ideals_annihilated", "I ≠ A ⇒ r(I) ≠ 0", bad is None, witness=bad)
    return rep


def counit_kernel_cointegral(W: WeakHopf) -> Optional[np.ndarray]:
    """First basis vector of r(Ker eps), which is a left cointegral, or None if r(Ker eps) = 0."""
    n = W.n
    ker = xl.kernel_basis(W.counit.reshape(1, n))
    r = annihilators(W, ker, "right")
    if not r:
        return None
    h = r[0]
    if not itg.is_left_cointegral(W, h):
        raise ArithmeticError("element of r(Ker ε) is not a left cointegral")
    return h


def frobenius_converse(W: WeakHopf, seed: int = 0, tries: int = 50):
    """Search a module isomorphism F: A′ -> A and return (F(eps), report).

    The constraints a F = F a are linear in the n^2 entries of F; an invertible
    member of the solution space is looked for among the basis and seeded
    random combinations.
    """
    n = W.n
    Id = xl.identity(n)
    # vec(F) row-major; L_a F - F R_a^T = (L_a (x) I - I (x) R_a) vec(F)
    blocks = [np.kron(W.L(W.e(a)), Id) - np.kron(Id, W.R(W.e(a))) for a in range(n)]
    sols = xl.kernel_basis(np.concatenate(blocks, axis=0))
    rep = Report("Frobenius converse", info={"solution_dim": len(sols), "seed": seed})
    rng = random.Random(seed)
    F = None
    cands = list(sols)
    for _ in range(tries):
        cands.append(sum((rng.randint(-3, 3) * s for s in sols), zeros(n * n)))
    for v in cands:
        M = v.reshape(n, n)
        if xl.rank(M) == n:
            F = M
            break
    rep.add("module_isomorphism_found", "A′ ≅ A as left A-modules", F is not None)
    if F is None:
        return None, rep
    k = F @ W.counit
    rep.add("F_eps_cointegral", "aF(ε) = ε_t(a)F(ε)", itg.is_left_cointegral(W, k) and not xl.is_zero(k),
            witness={"F_eps": k})
    return k, rep


# ---------------------------------------------------------------------------
# separability idempotents
# ---------------------------------------------------------------------------

@dataclass
class SeparabilityIdempotent:
    """E in B (x) C with anti-homomorphisms S_B: B -> C, S_C: C -> B."""

    B: Algebra
    C: Algebra
    E: np.ndarray
    S_B: np.ndarray
    S_C: np.ndarray
    phi_B: np.ndarray
    phi_C: np.ndarray

    @property
    def BC(self) -> Algebra:
        return tensor(self.B, self.C)

    def to_json(self) -> dict:
        nB, nC = self.B.n, self.C.n
        E = self.E.reshape(nB, nC)
        return {
            "kind": "separability",
            "B": self.B.to_json(),
            "C": self.C.to_json(),
            "E": [[int(i), int(j), format_scalar(E[i, j])] for i, j in np.argwhere(E != 0)],
            "S_B": _sparse_map(self.S_B),
            "S_C": _sparse_map(self.S_C),
            "phi_B": xl.serialize_vector(self.phi_B),
            "phi_C": xl.serialize_vector(self.phi_C),
        }

    @classmethod
    def from_json(cls, data: dict) -> "SeparabilityIdempotent":
        try:
            B = Algebra.from_json(data["B"])
            C = Algebra.from_json(data["C"])
            E = zeros(B.n * C.n)
            for i, j, s in data["E"]:
                E[int(i) * C.n + int(j)] = parse_scalar(str(s))
            S_B = _read_map(data["S_B"], C.n, B.n)
            S_C = _read_map(data["S_C"], B.n, C.n)
            phi_B = _dense_or_sparse(data["phi_B"], B.n)
            phi_C = _dense_or_sparse(data["phi_C"], C.n)
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            raise AlgebraError(f"malformed separability bundle: {exc}") from None
        return cls(B, C, E, S_B, S_C, phi_B, phi_C)


def _sparse_map(M) -> list:
    """[[source, target, scalar], ...] for a matrix whose column j is the image of e_j."""
    return sorted([int(j), int(i), format_scalar(M[i, j])] for i, j in np.argwhere(M != 0))


def _read_map(entries, rows: int, cols: int) -> np.ndarray:
    M = zeros(rows, cols)
    for j, i, s in entries:
        M[int(i), int(j)] = parse_scalar(str(s))
    return M


def load_separability(path) -> SeparabilityIdempotent:
    with open(path) as fh:
        return SeparabilityIdempotent.from_json(json.load(fh))


def _anti_hom(src: Algebra, dst: Algebra, M) -> bool:
    lhs = np.einsum("abm,km->kab", src.c, M)
    rhs = np.einsum("ib,ja,ijk->kab", M, M, dst.c)
    return bool(np.all(lhs == rhs))


def check_separability(S: SeparabilityIdempotent) -> Report:
    B, C = S.B, S.C
    nB, nC = B.n, C.n
    BC = S.BC
    E = S.E
    E2 = E.reshape(nB, nC)
    rep = Report("separability idempotent")
    rep.add("idempotent", "E² = E", bool(np.all(BC.mul(E, E) == E)))
    # legs of E(1 (x) c) and (b (x) 1)E; with units these are the legs of E
    left = xl.rank(np.einsum("ij,jcq->iqc", E2, C.c).reshape(nB, -1))
    right = xl.rank(np.einsum("bip,ij->jpb", B.c, E2).reshape(nC, -1))
    rep.add("full", "left leg of E is B and right leg is C", left == nB and right == nC,
            witness={"left_leg_dim": left, "right_leg_dim": right})
    one_B, one_C = B.one, C.one
    bad = [b for b in range(nB)
           if not np.all(BC.mul(E, np.outer(B.basis(b), one_C).reshape(-1))
                         == BC.mul(E, np.outer(one_B, S.S_B[:, b]).reshape(-1)))]
    rep.add("antipode_B", "E(b⊗1) = E(1⊗S_B(b))", not bad, witness={"basis_elements": bad})
    bad = [c for c in range(nC)
           if not np.all(BC.mul(np.outer(one_B, C.basis(c)).reshape(-1), E)
                         == BC.mul(np.outer(S.S_C[:, c], one_C).reshape(-1), E))]
    rep.add("antipode_C", "(1⊗c)E = (S_C(c)⊗1)E", not bad, witness={"basis_elements": bad})
    rep.add("S_B_anti_homomorphism", "S_B(bb′) = S_B(b′)S_B(b)", _anti_hom(B, C, S.S_B))
    rep.add("S_C_anti_homomorphism", "S_C(cc′) = S_C(c′)S_C(c)", _anti_hom(C, B, S.S_C))
    rep.add("phi_B", "(φ_B⊗id)E = 1", bool(np.all(S.phi_B @ E2 == one_C)))
    rep.add("phi_C", "(id⊗φ_C)E = 1", bool(np.all(E2 @ S.phi_C == one_B)))
    # regularity: the reversed products also have full legs and the maps are bijective
    rleft = xl.rank(np.einsum("ij,cjq->iqc", E2, C.c).reshape(nB, -1))
    rright = xl.rank(np.einsum("ibp,ij->jpb", B.c, E2).reshape(nC, -1))
    reg = rleft == nB and rright == nC and nB == nC and xl.rank(S.S_B) == nB and xl.rank(S.S_C) == nB
    rep.add("regular", "legs of (1⊗c)E and E(b⊗1) full, S_B and S_C bijective", reg)
    return rep


def delta_h_separability(W: WeakHopf, h) -> SeparabilityIdempotent:
    """Delta(h) as a separability idempotent in A (x) A for a faithful idempotent cointegral h."""
    h = np.asarray(h, dtype=object)
    if not (itg.is_left_cointegral(W, h) and itg.is_faithful_cointegral(W, h)):
        raise itg.NotFaithfulError("h must be a faithful left cointegral")
    if not np.all(W.mul(h, h) == h):
        raise ValueError("h is not idempotent: h² ≠ h")
    if not np.all(W.eps_t(h) == W.one):
        raise ValueError("ε_t(h) ≠ 1")
    if not np.all(W.eps_s(h) == W.one):
        raise ValueError("ε_s(h) ≠ 1")
    phi_h, psi_h = itg.existence_of_integrals(W, h)
    return SeparabilityIdempotent(W.alg, W.alg, W.cop(h), W.S.copy(), W.S.copy(), psi_h, phi_h)


def wmha_from_separability(S: SeparabilityIdempotent, name: str = "C⊗B") -> WeakHopf:
    """A = C (x) B with Delta(c (x) b) = c (x) E (x) b, eps(c (x) b) = phi_B(S_C(c) b), S(c (x) b) = S_B(b) (x) S_C(c)."""
    rep = check_separability(S)
    if not rep.passed:
        raise ValueError(f"invalid separability idempotent: {rep.first_failure().name}")
    B, C = S.B, S.C
    nB, nC = B.n, C.n
    n = nC * nB
    A = tensor(C, B)
    A.name = name
    E2 = S.E.reshape(nB, nC)
    D = zeros(n, n, n)  # D[x, y, z]: x (x) y in Delta(z)
    for i in range(nC):
        for j in range(nB):
            for k, l in np.argwhere(E2 != 0):
                D[i * nB + k, l * nB + j, i * nB + j] += E2[k, l]
    counit = zeros(n)
    for i in range(nC):
        for j in range(nB):
            counit[i * nB + j] = xl.scalar(S.phi_B @ B.mul(S.S_C[:, i], B.basis(j)))
    anti = zeros(n, n)
    for i in range(nC):
        for j in range(nB):
            anti[:, i * nB + j] = np.outer(S.S_B[:, j], S.S_C[:, i]).reshape(-1)
    return WeakHopf(A, D.reshape(n * n, n), counit, anti, name=name)


def separability_cointegral_report(S: SeparabilityIdempotent, W: WeakHopf = None) -> Report:
    """Cointegrals of C (x) B against the condition (c′ (x) b′)x = (c′S_B(b′) (x) 1)x."""
    W = wmha_from_separability(S) if W is None else W
    B, C = S.B, S.C
    nB, nC = B.n, C.n
    blocks = []
    for i in range(nC):
        for j in range(nB):
            left = np.outer(C.basis(i), B.basis(j)).reshape(-1)
            right = np.outer(C.mul(C.basis(i), S.S_B[:, j]), B.one).reshape(-1)
            blocks.append(W.L(left) - W.L(right))
    cond = xl.kernel_basis(np.concatenate(blocks, axis=0))
    H = itg.cointegral_space(W).basis
    rep = Report("cointegrals of the separability construction", info={"dim_H": len(H), "dim_condition": len(cond)})
    rep.add("cointegral_condition", "x cointegral ⟺ (c′⊗b′)x = (c′S_B(b′)⊗1)x", xl.same_span(H, cond, W.n))
    return rep


def diagonal_separability(m: int) -> SeparabilityIdempotent:
    """B = C = C^m (diagonal idempotents), E = sum e_i (x) e_i, S_B = S_C = id, phi = coordinate sum."""
    c = zeros(m, m, m)
    for i in range(m):
        c[i, i, i] = 1
    one = xl.as_exact([1] * m)
    B = Algebra([f"b{i}" for i in range(m)], c, one, name=f"C^{m}")
    C = Algebra([f"c{i}" for i in range(m)], c.copy(), one.copy(), name=f"C^{m}")
    E = xl.identity(m).reshape(-1)
    return SeparabilityIdempotent(B, C, E, xl.identity(m), xl.identity(m), one.copy(), one.copy())


def idempotent_cointegral(W: WeakHopf, h) -> Optional[np.ndarray]:
    """h / t when h² = t h with t ≠ 0, else None."""
    h = np.asarray(h, dtype=object)
    hh = W.mul(h, h)
    nz = np.nonzero(h != 0)[0]
    if len(nz) == 0:
        return None
    t = xl.div(hh[nz[0]], h[nz[0]])
    if t == 0 or not np.all(hh == t * h):
        return None
    return np.array([xl.div(x, t) for x in h], dtype=object)
