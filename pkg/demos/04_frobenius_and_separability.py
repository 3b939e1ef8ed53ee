"""
Frobenius structure and separability idempotents
================================================

A faithful cointegral turns the dual space into the algebra itself as a
left module.  We check this, test the quasi-Frobenius property on a family
of principal ideals, and build a weak Hopf algebra out of a separability
idempotent.
"""

import json
from importlib import resources

from whkit import duality as du
from whkit import frobenius as fr
from whkit import integrals as itg
from whkit.algebra import Algebra, function_algebra, groupoid_algebra
from whkit.exactlin import serialize_vector
from whkit.groupoid import pair_groupoid
from whkit.wmha import verify_axioms

W = groupoid_algebra(pair_groupoid(3))
h = itg.find_faithful_cointegral(W)
F, rep = fr.frobenius_map(W, h)
print(rep.text())

# lr(I) = I on the basis plus 20 random principal ideals
print(fr.is_quasi_frobenius(W, seed=7).text())

# the shipped counterexample is not quasi-Frobenius
A = Algebra.from_json(json.loads(resources.files("whkit").joinpath("data", "non_qf.json").read_text()))
print(fr.is_quasi_frobenius(A, seed=7).text())

# going back: a module isomorphism A' -> A sends eps to a cointegral
k, rep = fr.frobenius_converse(W, seed=7)
print(rep.text())
print("F(eps) =", serialize_vector(k))

# Delta(chi_U) is a separability idempotent in K(G) (x) K(G)
K = function_algebra(pair_groupoid(2))
chi = itg.find_faithful_cointegral(K)
print(fr.check_separability(fr.delta_h_separability(K, chi)).text())

# and a separability idempotent E = e_1 (x) e_1 + e_2 (x) e_2 gives A = C (x) B
S = fr.diagonal_separability(2)
A = fr.wmha_from_separability(S)
print(f"\n{A.name}: dim {A.n}, axioms pass = {verify_axioms(A).passed}")
print(fr.separability_cointegral_report(S, A).text())

# this A is K(pair_groupoid(2)) in other letters, so its dual is CG and
# has a two-dimensional space of cointegrals
D = du.dual_weak_hopf(A).dual
print("cointegrals of the dual:", [serialize_vector(v) for v in itg.cointegral_space(D).basis])
