"""The dual weak Hopf algebra of a finite-dimensional one, and the transfer between them.

The dual is written on the dual basis e*_i, so the pairing <e_i, e*_j> is the
identity matrix and every structure map of the dual is a transpose of a
structure map of the primal:

    (w w')(a)   = (w (x) w') Delta(a)       product from coproduct
    Delta(w)(a (x) b) = w(ab)               coproduct from product
    eps^(w)     = w(1),  1^ = eps,  S^ = S^T
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import exactlin as xl
from . import integrals as itg
from .algebra import Algebra
from .report import Report
from .wmha import WeakHopf, verify_axioms


@dataclass
class DualPair:
    primal: WeakHopf
    dual: WeakHopf
    pairing: np.ndarray

    def pair(self, a, w):
        return xl.scalar(np.asarray(a, dtype=object) @ self.pairing @ np.asarray(w, dtype=object))


class DualityError(ValueError):
    pass


def dual_structure(W: WeakHopf, name: str = "") -> WeakHopf:
    """Transpose every structure map of W; no precondition is checked here."""
    n = W.n
    c_hat = W.delta.reshape(n, n, n).copy()
    delta_hat = W.c.reshape(n * n, n).copy()
    labels = [f"{lab}*" for lab in W.alg.basis_labels]
    alg = Algebra(labels, c_hat, unit=W.counit.copy(), name=name or f"dual({W.name})")
    return WeakHopf(alg, delta_hat, W.one.copy(), W.S.T.copy(), name=alg.name)


def dual_weak_hopf(W: WeakHopf, check: bool = True) -> DualPair:
    """Dual pair (W, W^, identity pairing).

    With ``check`` the input must pass the axiom suite and carry a faithful
    set of left integrals, and the dual must pass the axiom suite as well.
    """
    if check:
        rep = verify_axioms(W)
        if not rep.passed:
            raise DualityError(f"input fails axiom check {rep.first_failure().name!r}")
        lf, rf = itg.integral_set_faithfulness(W, itg.integral_space(W, "left"))
        if not (lf and rf):
            raise DualityError("input has no faithful set of left integrals")
    D = dual_structure(W)
    if check:
        rep = verify_axioms(D)
        if not rep.passed:
            raise DualityError(f"dual fails axiom check {rep.first_failure().name!r}")
    return DualPair(W, D, xl.identity(W.n))


def pairing_report(P: DualPair) -> Report:
    """Adjointness of every structure map under the pairing, on all basis pairs."""
    W, D, Q = P.primal, P.dual, P.pairing
    n = W.n
    rep = Report("pairing adjointness")
    rep.add("nondegenerate", "rank ⟨·,·⟩ = n", xl.rank(Q) == n)
    QQ = np.kron(Q, Q)
    # <a, w w'> = <Delta(a), w (x) w'>
    lhs = Q @ D.alg.mult_matrix
    rhs = W.delta.T @ QQ
    rep.add("product_dual_to_coproduct", "⟨a, ωω′⟩ = ⟨Δ(a), ω⊗ω′⟩", bool(np.all(lhs == rhs)))
    lhs = W.alg.mult_matrix.T @ Q
    rhs = QQ @ D.delta
    rep.add("coproduct_dual_to_product", "⟨ab, ω⟩ = ⟨a⊗b, Δ̂(ω)⟩", bool(np.all(lhs == rhs)))
    rep.add("counit_dual_to_unit", "ε̂(ω) = ⟨1, ω⟩", bool(np.all(W.one @ Q == D.counit)))
    rep.add("unit_dual_to_counit", "⟨a, 1̂⟩ = ε(a)", bool(np.all(Q @ D.one == W.counit)))
    rep.add("antipode_adjoint", "⟨S(a), ω⟩ = ⟨a, Ŝ(ω)⟩", bool(np.all(W.S.T @ Q == Q @ D.S)))
    return rep


def is_isomorphism(W1: WeakHopf, W2: WeakHopf, P) -> Report:
    """Is the linear map P: W1 -> W2 an isomorphism of weak Hopf algebras?"""
    P = np.asarray(P, dtype=object)
    n = W1.n
    rep = Report("weak Hopf isomorphism")
    if W2.n != n or P.shape != (n, n):
        rep.add("dimensions", "dim A₁ = dim A₂", False, witness={"dims": [W1.n, W2.n]})
        return rep
    PP = np.kron(P, P)
    rep.add("bijective", "P invertible", xl.rank(P) == n)
    rep.add("multiplicative", "P(ab) = P(a)P(b)", bool(np.all(P @ W1.alg.mult_matrix == W2.alg.mult_matrix @ PP)))
    rep.add("unital", "P(1) = 1", bool(np.all(P @ W1.one == W2.one)))
    rep.add("comultiplicative", "Δ₂P = (P⊗P)Δ₁", bool(np.all(W2.delta @ P == PP @ W1.delta)))
    rep.add("counital", "ε₂P = ε₁", bool(np.all(W2.counit @ P == W1.counit)))
    rep.add("antipode", "S₂P = PS₁", bool(np.all(W2.S @ P == P @ W1.S)))
    return rep


def double_dual_report(W: WeakHopf) -> Report:
    """Canonical evaluation A -> A'' as an isomorphism onto the dual of the dual."""
    n = W.n
    DD = dual_structure(dual_structure(W))
    # ev(a)(w) = w(a): in dual-of-dual-basis coordinates this is the matrix of <e_i, e*_j>
    ev = xl.identity(n)
    rep = is_isomorphism(W, DD, ev)
    rep.title = "double dual"
    return rep


def generating_report(P: DualPair) -> Report:
    """Every functional is a combination of phi(. a) with phi a left integral."""
    W = P.primal
    n = W.n
    gens = [W.R(W.e(a)).T @ phi for phi in itg.integral_space(W, "left").basis for a in range(n)]
    r = xl.span_rank(gens, n)
    rep = Report("dual generated by integrals")
    rep.add("span_phi_dot_a", "span{φ(·a)} = A′", r == n, witness={"rank": r})
    return rep


def transfer_cointegral(W: WeakHopf, h, P: DualPair = None) -> np.ndarray:
    """h as the functional w -> w(h) on the dual, verified to be a left integral there."""
    P = dual_weak_hopf(W, check=False) if P is None else P
    h = np.asarray(h, dtype=object)
    if xl.is_zero(h):
        raise ValueError("zero element")
    f = P.pairing.T @ h
    if not itg.is_left_integral(P.dual, f):
        raise ArithmeticError("transferred cointegral is not a left integral on the dual")
    return f


def transfer_report(W: WeakHopf, P: DualPair = None) -> Report:
    P = dual_weak_hopf(W, check=False) if P is None else P
    H = itg.cointegral_space(W).basis
    images = [P.pairing.T @ h for h in H]
    ints = itg.integral_space(P.dual, "left")
    rep = Report("cointegrals to integrals on the dual", info={"dim_H": len(H), "dim_dual_left_integrals": ints.dim})
    bad = [i for i, f in enumerate(images) if not itg.is_left_integral(P.dual, f)]
    rep.add("cointegrals_are_dual_integrals", "h is a left integral on Â", not bad, witness={"indices": bad})
    dual_H = itg.cointegral_space(P.dual).basis
    back = [P.pairing @ g for g in dual_H]
    bad = [i for i, g in enumerate(back) if not itg.is_left_integral(W, g)]
    rep.add("dual_cointegrals_are_integrals", "cointegrals of Â are left integrals on A", not bad,
            witness={"indices": bad})
    rep.add("dimensions_match", "dim H = dim ∫_L(Â)", len(H) == ints.dim,
            witness={"dim_H": len(H), "dim_dual_integrals": ints.dim})
    return rep


def compact_implies_dual_discrete(W: WeakHopf, P: DualPair = None) -> Report:
    rep = Report("compact implies dual discrete")
    cls = itg.classify(W)
    rep.add("compact", "A unital with a faithful set of integrals", cls["compact"])
    if not cls["compact"]:
        return rep
    P = dual_weak_hopf(W, check=False) if P is None else P
    D = P.dual
    ints = [xl.solve(P.pairing, phi) for phi in itg.integral_space(W, "left").basis]
    bad = [i for i, f in enumerate(ints) if not itg.is_left_cointegral(D, f)]
    rep.add("integrals_are_dual_cointegrals", "∫ ⊂ Â consists of left cointegrals", not bad,
            witness={"indices": bad})
    left, right = itg.legs_of_cointegrals(D, ints)
    rep.add("legs_of_integrals_full", "both legs of Δ̂(∫) are Â", len(left) == D.n and len(right) == D.n,
            witness={"left_leg_dim": len(left), "right_leg_dim": len(right)})
    rep.add("dual_discrete", "Â is of discrete type", itg.is_discrete(D))
    return rep


def _faithful_integral(W: WeakHopf):
    basis = itg.integral_space(W, "left").basis
    if not basis:
        return None
    cands = [sum(basis[1:], basis[0].copy())] + list(basis)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            cands.append(basis[i] + 2 * basis[j])
    for phi in cands:
        if all(itg.integral_set_faithfulness(W, [phi])):
            return phi
    return None


def single_faithful_implies_dual_compact(W: WeakHopf, h, P: DualPair = None) -> Report:
    n = W.n
    rep = Report("single faithful cointegral implies dual compact")
    h = np.asarray(h, dtype=object)
    faithful = itg.is_left_cointegral(W, h) and itg.is_faithful_cointegral(W, h)
    rep.add("faithful_cointegral", "h is a faithful left cointegral", faithful)
    lf, rf = itg.integral_set_faithfulness(W, itg.integral_space(W, "left"))
    rep.add("integrals_faithful", "∫_L is faithful", lf and rf)
    if not (faithful and lf and rf):
        return rep
    P = dual_weak_hopf(W, check=False) if P is None else P
    D = P.dual
    phi_h, _ = itg.existence_of_integrals(W, h)
    eps_from_h = W.R(h).T @ phi_h
    rep.add("counit_is_phi_h_dot_h", "ε = φ_h(·h)", bool(np.all(eps_from_h == W.counit)))
    gens = [W.R(W.e(a)).T @ phi for phi in itg.integral_space(W, "left").basis for a in range(n)]
    rep.add("counit_in_dual", "ε ∈ span{φ(·a)}", xl.in_span(W.counit, gens, n))
    eps_hat = xl.solve(P.pairing, W.counit)
    rep.add("dual_unital", "ε is the unit of Â", eps_hat is not None and D.alg.unit_is_identity(eps_hat))
    rep.add("dual_compact", "Â is of compact type", itg.classify(D)["compact"])
    # phi_h = phi(. y) for a faithful integral phi and some y in A_s
    phi = _faithful_integral(W)
    y = None
    if phi is not None and W.As_basis:
        B = xl.span_matrix(W.As_basis, n)
        rows = np.stack([phi @ W.L(W.e(a)) @ B for a in range(n)])
        u = xl.solve(rows, phi_h)
        if u is not None:
            y = B @ u
    rep.info["faithful_integral"] = phi
    rep.info["y_in_As"] = y
    ok = y is not None and all(
        W.counit[a] == phi @ W.mul(W.mul(W.e(a), h), y) for a in range(n))
    rep.add("counit_via_faithful_integral", "ε(a) = φ(ahy), y∈A_s", ok)
    return rep
