"""Build signed graphs, inspect adjacency matrices, round-trip the .sg format."""

from signedspectra import SignedGraph, complete_signed, new_graph

# a triangle with exactly one negative edge: the smallest unbalanced graph
tri = new_graph(3).set_edge(0, 1, -1).set_edge(0, 2, 1).set_edge(1, 2, 1)
print("unbalanced triangle, adjacency matrix:")
print(tri.adjacency_matrix())

# edits return new graphs; the original is untouched
tri2 = tri.set_edge(0, 1, 1)
print("\nafter re-signing the edge {1,2}:", tri2.edges())
print("original still:", tri.edges())

# the all-negative complete graph: spectral radius n-1, index only 1
k5 = complete_signed(5, -1)
print("\n(K5,-) text form:")
print(k5.to_sg())

# the text format round-trips exactly
assert SignedGraph.from_sg(k5.to_sg()) == k5

sub, labels = k5.induced_subgraph([0, 2, 4])
print("induced on {1,3,5} (1-based):", sub.edges(), "labels", labels)
