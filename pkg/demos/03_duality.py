"""
The dual of K(G) is CG
======================

With the pairing <delta_p, lambda_q> = [p == q] every structure map of the
dual is a transpose.  We build the dual of K(G) and compare it with the
groupoid algebra directly, then move cointegrals across.
"""

import numpy as np

from whkit import duality as du
from whkit import integrals as itg
from whkit.algebra import function_algebra, groupoid_algebra
from whkit.exactlin import identity, serialize_vector
from whkit.groupoid import cyclic_group, pair_groupoid, product

G = product(pair_groupoid(2), cyclic_group(2))
K, C = function_algebra(G), groupoid_algebra(G)

P = du.dual_weak_hopf(K)
print("dual structure constants equal CG's:", bool(np.all(P.dual.c == C.c)))
print(du.is_isomorphism(P.dual, C, identity(K.n)).text())

# a cointegral of K(G) is a left integral on the dual
H = itg.cointegral_space(K).basis
for h in H:
    f = du.transfer_cointegral(K, h, P)
    print("cointegral", serialize_vector(h), "-> integral on dual:", itg.is_left_integral(P.dual, f))

print("\n" + du.transfer_report(K, P).text())
print(du.compact_implies_dual_discrete(K, P).text())

# a single faithful cointegral makes the dual unital with unit eps
h = itg.find_faithful_cointegral(K)
rep = du.single_faithful_implies_dual_compact(K, h, P)
print(rep.text())
