import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from whkit import exactlin as xl
from whkit.algebra import Algebra, AlgebraError
from whkit.groupoid import corpus
from whkit.wmha import WeakHopf, distinguished_functionals, verify_axioms

from conftest import CG, GROUPOIDS, K


def test_axioms_hold(W):
    rep = verify_axioms(W)
    assert rep.passed, rep.first_failure()
    assert W.is_regular


@pytest.mark.parametrize("entry", [0, 3, 7])
def test_mutated_coproduct_fails_coassociativity(entry):
    W = K("pair2")
    delta = W.delta.copy()
    idx = np.argwhere(delta != 0)[entry]
    delta[tuple(idx)] = delta[tuple(idx)] + 1
    M = WeakHopf(W.alg, delta, W.counit, W.S, E=W.E)
    rep = verify_axioms(M)
    assert not rep.passed
    assert not rep["coassociativity"].passed
    assert rep.first_failure().name == "coassociativity"


def test_mutated_antipode_fails():
    W = CG("Z3")
    S = W.S.copy()
    S[:, [1, 2]] = S[:, [2, 1]]  # identity map instead of inversion on non-units
    rep = verify_axioms(WeakHopf(W.alg, W.delta, W.counit, S))
    assert not rep["antipode_identity"].passed


def test_requires_unit():
    A = Algebra(["x"], xl.zeros(1, 1, 1))
    with pytest.raises(AlgebraError):
        WeakHopf(A, xl.zeros(1, 1), xl.zeros(1), xl.zeros(1, 1))


def _direct_T(W, which, a, b):
    ea, eb, one = W.e(a), W.e(b), W.one
    if which == "T1":
        return W.mul2(W.cop(ea), W.t2(one, eb))
    if which == "T2":
        return W.mul2(W.t2(ea, one), W.cop(eb))
    if which == "T3":
        return W.mul2(W.t2(one, eb), W.cop(ea))
    return W.mul2(W.cop(eb), W.t2(ea, one))


@pytest.mark.parametrize("which", ["T1", "T2", "T3", "T4"])
@pytest.mark.parametrize("key", [("K", "pair2"), ("CG", "Z2"), ("CG", "Z2+trivial")])
def test_canonical_maps_against_direct_evaluation(which, key, algebras):
    W = algebras[key]
    T = W.canonical_map(which)
    n = W.n
    for a in range(n):
        for b in range(n):
            assert np.all(T[:, a * n + b] == _direct_T(W, which, a, b))


def test_T1_trivial_is_identity():
    assert np.all(K("trivial").canonical_map("T1") == xl.identity(1))


def test_rank_T1_equals_rank_E_multiplication():
    W = K("pair2")
    n = W.n
    cols = [W.mul2(W.E, W.t2(W.e(a), W.e(b))) for a in range(n) for b in range(n)]
    assert xl.rank(W.canonical_map("T1")) == xl.rank(np.stack(cols, axis=1))


def test_base_algebra_dimensions(gname):
    G = GROUPOIDS[gname]
    for W in (K(gname), CG(gname)):
        assert len(W.As_basis) == len(W.At_basis) == len(G.units)


def test_base_algebras_commute(W):
    for x in W.As_basis:
        for y in W.At_basis:
            assert np.all(W.mul(x, y) == W.mul(y, x))


def test_eps_s_idempotent_on_cpair2():
    W = CG("pair2")
    for a in range(W.n):
        x = W.eps_s(W.e(a))
        assert np.all(W.eps_s(x) == x)


def test_distinguished_functionals(W):
    phi_B, phi_C = distinguished_functionals(W)
    n = W.n
    E = W.E.reshape(n, n)
    assert phi_B.unique(E, W.one, left=True)
    assert phi_C.unique(E, W.one, left=False)


def test_distinguished_functional_values():
    W = K("trivial")
    phi_B, phi_C = distinguished_functionals(W)
    assert phi_B(W.one) == 1 and phi_C(W.one) == 1


def test_distinguished_functional_equations(W):
    n = W.n
    E = W.E.reshape(n, n)
    phi_B, phi_C = distinguished_functionals(W)
    # write E = sum_m v_m (x) w_m with v_m in the domain of phi_B
    coefB = xl.solve_many(xl.span_matrix(phi_B.basis, n), E)
    lhs = sum((phi_B(v) * coefB[m] for m, v in enumerate(phi_B.basis)), xl.zeros(n))
    assert np.all(lhs == W.one)
    coefC = xl.solve_many(xl.span_matrix(phi_C.basis, n), E.T)
    rhs = sum((phi_C(w) * coefC[m] for m, w in enumerate(phi_C.basis)), xl.zeros(n))
    assert np.all(rhs == W.one)


def test_G_maps_consistent(W):
    G1, G2, ok = W.G_maps()
    assert ok and G1 is not None and G2 is not None


def test_json_round_trip(W):
    V = WeakHopf.from_json(json.loads(json.dumps(W.to_json())))
    assert np.all(V.delta == W.delta) and np.all(V.S == W.S) and np.all(V.E == W.E)


@st.composite
def wmha_and_elements(draw):
    name = draw(st.sampled_from(sorted(corpus())))
    W = draw(st.sampled_from([K(name), CG(name)]))
    vec = st.lists(st.integers(-3, 3), min_size=W.n, max_size=W.n).map(xl.as_exact)
    return W, draw(vec), draw(vec)


@settings(max_examples=60, deadline=None)
@given(wmha_and_elements())
def test_structure_map_properties(data):
    W, a, b = data
    ab = W.mul(a, b)
    assert np.all(W.cop(ab) == W.mul2(W.cop(a), W.cop(b)))
    assert np.all(W.S @ ab == W.mul(W.S @ b, W.S @ a))
    assert np.all(W.eps_t(W.eps_t(a)) == W.eps_t(a))
    assert np.all(W.eps_s(W.eps_s(a)) == W.eps_s(a))
    assert np.all(W.S @ W.eps_s(a) == W.eps_t(W.S @ a))
    # a = eps_t(a_1) a_2 and a = a_1 eps_s(a_2)
    D = W.cop(a).reshape(W.n, W.n)
    assert np.all(W.mul2(W.t2(W.one, W.one), W.cop(a)) == W.cop(a))
    lhs = sum((W.mul(W.eps_t(W.e(i)), W.e(j)) * D[i, j] for i, j in np.argwhere(D != 0)), xl.zeros(W.n))
    assert np.all(lhs == a)
    rhs = sum((W.mul(W.e(i), W.eps_s(W.e(j))) * D[i, j] for i, j in np.argwhere(D != 0)), xl.zeros(W.n))
    assert np.all(rhs == a)


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(sorted(corpus())), st.integers(0, 10_000))
def test_axioms_invariant_under_change_of_basis(name, seed):
    W = K(name) if seed % 2 else CG(name)
    n = W.n
    rng = np.random.default_rng(seed)
    P = xl.identity(n) + xl.as_exact(np.tril(rng.integers(-2, 3, (n, n)), -1).tolist())
    Pi = xl.inverse(P)
    c = np.einsum("ki,lj,klm,rm->ijr", P, P, W.c, Pi)
    delta = np.kron(Pi, Pi) @ W.delta @ P
    V = WeakHopf(Algebra(W.alg.basis_labels, c, Pi @ W.one), delta, W.counit @ P, Pi @ W.S @ P)
    assert verify_axioms(V).passed
