"""
Words, v-functions and zero patterns
====================================

Points of E_w can be conjugated into block upper triangular shape. The
v-function of w numbers the letters of each vertex from the right, and
decides which blocks are forced to vanish.
"""

from quivmon.quiver import a3_sink, double_kronecker_chain
from quivmon.cli import render_dot
from quivmon.words import codim_lower_bound, hasse_diagram, render_pattern, v_function, word_leq, zero_pattern

Q = a3_sink()  # i -> j <- k
w = "iikijkkjjikijijjjkkij"
print("v =", v_function(w))

# one pattern per arrow; rows are indexed by the head vertex
for (tail, head), mask in zip(Q.arrows, zero_pattern(Q, w)):
    print(f"\narrow {tail} -> {head}, shape {mask.shape}:")
    print(render_pattern(mask))

# a cheap lower bound for the codimension of E_w
print("\ncodim bound:", codim_lower_bound(Q, w))

# swapping neighbours ij -> ji (no arrow back) moves down in the order on words
C = double_kronecker_chain()
print("ijjk <= kjji:", word_leq(C, "ijjk", "kjji"))
G = hasse_diagram(C, (1, 2, 1))
print(G.number_of_nodes(), "words,", G.number_of_edges(), "cover relations")
print(render_dot(G, "words"))
