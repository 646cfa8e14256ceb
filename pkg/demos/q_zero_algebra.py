"""
The q = 0 degeneration of the Serre relations
=============================================

Setting q = 0 kills every term of the quantum Serre relations except two,
leaving E_i^{n+1} E_j = E_i^n E_j E_i and its mirror. On A2 these relations
describe the monoid exactly; on the Kronecker quiver they do not.
"""

from quivmon.quiver import a2, kronecker
from quivmon.oracle import variety_points
from quivmon.qalgebra import q_binomial, render_ncpoly, serre_relations, specialize_q0, u0_quotient_dim, u0_monomials_equal

print("[4 over 2] =", q_binomial(2, 2))

A = a2()
r1, r2 = serre_relations(A, "i", "j")
print(render_ncpoly(r1), "= 0")
print(render_ncpoly(specialize_q0(r1)), "= 0  at q = 0")

# Kronecker: no relation of degree (2,2) survives, so all 6 words stay distinct
K = kronecker()
print("dim U_0 in degree (2,2):", u0_quotient_dim(K, (2, 2)))
print("E_1212 = E_1122 in U_0:", u0_monomials_equal(K, "1212", "1122"))
print("as families over F_2:  ", variety_points(K, "1212", 2) == variety_points(K, "1122", 2))
