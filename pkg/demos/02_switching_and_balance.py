"""Switching, balance certificates, and switching equivalence."""

import random

from signedspectra import SignedGraph, complete_signed
from signedspectra.spectra import char_poly_exact
from signedspectra.switching import (
    forest_normal_form,
    is_balanced,
    switch,
    switching_equivalent,
)

rng = random.Random(7)

# switching at U negates edges across the cut; cycle signs never change
g = SignedGraph(5, {(0, 1): -1, (1, 2): 1, (2, 3): 1, (3, 4): -1, (0, 4): 1, (1, 3): 1})
h = switch(g, {1, 4})
print("before:", [s for _, _, s in g.edges()])
print("after :", [s for _, _, s in h.edges()])
print("same exact char poly:", char_poly_exact(g) == char_poly_exact(h))
print("switching equivalent:", switching_equivalent(g, h))

# balance comes with a certificate either way
res = is_balanced(g)
if res.balanced:
    print("balanced, bisigning:", res.bisigning)
else:
    w = res.negative_cycle
    print("unbalanced, negative cycle:", w.vertices, "sign", w.sign)

# an all-negative complete graph is unbalanced for n >= 3
print("(K4,-) balanced?", is_balanced(complete_signed(4, -1)).balanced)

# the forest normal form pins a BFS forest to all-positive; the remaining
# cotree signs index the switching class
nf = forest_normal_form(g)
print("forest:", nf.forest)
print("cotree signs:", nf.cotree_signs)
print("switch set realizing it:", sorted(nf.switch_set))
