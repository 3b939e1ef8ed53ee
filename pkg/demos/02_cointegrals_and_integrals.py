"""
Cointegrals, integrals and one faithful cointegral
=================================================

A left cointegral is an element h with a h = eps_t(a) h.  We compute the
space for K(G) and CG, check the six equivalent characterizations, and use
a faithful cointegral to produce integrals.
"""

from whkit import integrals as itg
from whkit.algebra import function_algebra, groupoid_algebra
from whkit.exactlin import random_vectors, serialize_vector
from whkit.groupoid import cyclic_group, disjoint_union, pair_groupoid, trivial_groupoid

G = disjoint_union(cyclic_group(2), trivial_groupoid())
K = function_algebra(G)

# the cointegrals of K(G) are the functions supported on the units
H = itg.cointegral_space(K)
print("arrows:", G.arrows)
print("cointegral basis of K(G):", [serialize_vector(h) for h in H.basis])

# six characterizations: all true on cointegrals ...
for h in H.basis:
    print("  statements:", itg.equivalence_statements(K, h))
# ... and all false on something that is not a cointegral
(v,) = random_vectors(K.n, 1, seed=3)
print("random element", serialize_vector(v), "->", itg.equivalence_statements(K, v))

# gamma(h) = h_(1) S(eps_s(h_(2))) is the identity on K(G)
print("gamma matrix applied to the cointegrals:",
      [serialize_vector(itg.gamma_matrix(K) @ h) for h in H.basis])

# discreteness: both legs of Delta(H) fill the algebra
print("\n", itg.discreteness_report(K).text(), sep="")

# group algebra of Z/3: one faithful cointegral, the sum of the group
C = groupoid_algebra(cyclic_group(3))
h = itg.find_faithful_cointegral(C)
print("\nfaithful cointegral in C(Z3):", serialize_vector(h))

# it yields a left integral phi_h and a right integral psi_h
phi, psi = itg.existence_of_integrals(C, h)
print("phi_h =", serialize_vector(phi), " psi_h =", serialize_vector(psi))
print(itg.existence_report(C, h).text())

# and the whole collection of identities around it
maps = itg.single_h_maps(C, h)
print(itg.check_collection(C, h, maps).text())

# for pair groupoids the unit indicator is the faithful one
P = function_algebra(pair_groupoid(3))
chi = itg.find_faithful_cointegral(P)
print("\nK(pair3) faithful cointegral:", serialize_vector(chi))
print("classified as", itg.classify(P))
