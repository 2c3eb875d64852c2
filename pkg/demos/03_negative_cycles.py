"""Negative-cycle detection: fixed length search and the parity double cover."""

from signedspectra import complete_signed
from signedspectra.cycles import (
    double_cover,
    find_negative_ck,
    is_ck_negative_free,
    shortest_negative_cycle,
)
from signedspectra.families import extremal_graph, near_extremal_graph

g = extremal_graph(8)
print("extremal graph of order 8:")
print("  negative triangle:", find_negative_ck(g, 3))
print("  negative 4-cycles:", find_negative_ck(g, 4))
print("  shortest negative cycle:", shortest_negative_cycle(g))

# the all-negative complete graph has no negative cycles of even length
k6 = complete_signed(6, -1)
print("\n(K6,-) negative C4?", not is_ck_negative_free(k6, 4))
print("(K6,-) negative C3:", find_negative_ck(k6, 3))

# the double cover doubles components exactly for balanced graphs
h = near_extremal_graph(6)
cov = double_cover(h)
print("\nnear-extremal order 6: components", len(h.components()), "cover", len(cov.components()))
print("balanced iff the cover splits: here it stays connected (unbalanced)")
