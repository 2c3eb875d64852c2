"""Index-increasing moves with Rayleigh certificates, and the greedy ascent."""

from signedspectra import SignedGraph
from signedspectra.families import extremal_graph
from signedspectra.proofmoves import Move, apply_move, greedy_ascent
from signedspectra.spectra import index, nonneg_eigenvector_form
from signedspectra.switching import switching_isomorphic

# a sparse unbalanced start: negative triangle plus a path
g = SignedGraph(6, {(0, 1): -1, (0, 2): 1, (1, 2): 1, (2, 3): 1, (3, 4): 1, (4, 5): 1})
g, rep = nonneg_eigenvector_form(g)
result, cert = apply_move(g, Move.add_positive_edge(3, 5), host_report=rep)
print("add positive edge {4,6}:")
print("  host lambda1  :", round(cert.host_lambda1, 9))
print("  closed-form lower bound on the gain:", round(cert.rayleigh_delta, 9))
print("  result lambda1:", round(cert.result_lambda1, 9))
print("  constraints preserved:", cert.preserves_constraints)

# greedy ascent over all constraint-preserving moves
for seed in (0, 1, 2):
    out = greedy_ascent(6, seed=seed, max_steps=80)
    reached, _ = switching_isomorphic(out.graph, extremal_graph(6))
    print(
        f"\nseed {seed}: {out.steps} moves, lambda1 "
        + " -> ".join(f"{v:.4f}" for v in out.trajectory)
    )
    print("  reached the extremal graph:", reached)

print("\nextremal index for n=6:", round(index(extremal_graph(6)), 9))
