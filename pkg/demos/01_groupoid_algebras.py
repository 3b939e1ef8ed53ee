"""
Two weak Hopf algebras from one groupoid
========================================

Functions on a groupoid, K(G), and its convolution algebra, CG, are both
weak Hopf algebras.  Here we build them for the pair groupoid on two points
and look at the pieces that make them "weak".
"""

import numpy as np

from whkit.algebra import function_algebra, groupoid_algebra
from whkit.exactlin import serialize_vector
from whkit.groupoid import pair_groupoid
from whkit.wmha import verify_axioms

G = pair_groupoid(2)
print("arrows:", G.arrows)
print("units: ", G.units)

# K(G): pointwise product, Delta(f)(p, q) = f(pq) when pq is defined
K = function_algebra(G)
# CG: lambda_p lambda_q = lambda_pq, grouplike coproduct
C = groupoid_algebra(G)

# Delta(1) is no longer 1 (x) 1.  It is the indicator of composable pairs.
E = K.E.reshape(K.n, K.n)
print("\nE = Delta(1) in K(G), rows/cols indexed by arrows:")
print(E)

# the counit is not multiplicative, so we get source and target maps
for i, label in enumerate(K.alg.basis_labels):
    print(f"eps_t({label}) = {serialize_vector(K.eps_t(K.e(i)))}")

# CG is the 2x2 matrix algebra in disguise
a, b = G.index("(1,2)"), G.index("(2,1)")
print("\nlambda_(1,2) lambda_(2,1) =", serialize_vector(C.mul(C.e(a), C.e(b))))

# the full axiom suite; every check is exact
for W in (K, C):
    rep = verify_axioms(W)
    print(f"\n{W.name}: {len(rep.checks)} checks, all passed = {rep.passed}")
    print("  dim A_s =", rep.info["dim_As"], " dim A_t =", rep.info["dim_At"])

# A_s and A_t commute, as they must
print("\ncommuting base algebras:",
      all(np.all(C.mul(x, y) == C.mul(y, x)) for x in C.As_basis for y in C.At_basis))
