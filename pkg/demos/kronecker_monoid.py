"""
The composition monoid of the Kronecker quiver
==============================================

Two vertices 1, 2 and two arrows 1 -> 2. We look at the families E_w of
representations with a composition series of type w, first by the Schofield
recursion and then by brute force over F_2.
"""

from quivmon.quiver import kronecker
from quivmon.oracle import all_keys, orbit_labels, variety_points
from quivmon.schofield import canonical_decomposition, ext_value, ext_vanishes

Q = kronecker()
s1, s2 = Q.simple("1"), Q.simple("2")

# ext between the simples: the two arrows give a 2-dimensional Ext(S_1, S_2)
print("ext(s1, s2) =", ext_value(Q, s1, s2))
print("ext(s2, s1) =", ext_value(Q, s2, s1))

# R_{s1} * R_{s2} fills R_(1,1) because ext(s2, s1) vanishes; the other order does not
print("R_s1 * R_s2 = R_(1,1):", ext_vanishes(Q, s2, s1))
print("E_(12) is everything:", variety_points(Q, "12", 2).members == all_keys(Q, (1, 1), 2))
print("E_(21) has", len(variety_points(Q, "21", 2)), "point")

# the generic representation of dimension (2,2) splits into two copies of (1,1)
print("candec(2,2) =", canonical_decomposition(Q, (2, 2)))

# hence E_(1212) and E_(1122) both fill R_(2,2)
E1, E2 = variety_points(Q, "1212", 2), variety_points(Q, "1122", 2)
print("|E_(1212)| =", len(E1), " |E_(1122)| =", len(E2), " equal:", E1 == E2)

# over F_2 itself only 244 points of R_(2,2) have a filtration of type 1212;
# the missing 12 form one orbit, M + M' with M defined over F_4
rational = variety_points(Q, "1212", 2, field_degree=1)
extra = E1.members - rational.members
labels = orbit_labels(Q, (2, 2), 2)
print("filtrations over F_2 only:", len(rational), "points; missing orbits:", len({labels[k] for k in extra}))
