# Generalized zeta of vertex-transitive graphs, two ways:
#   * n-th root of the Ihara reciprocal, Z(G, u)^{-1/n}
#   * the spectral formula (1 - u^2)^{(q-1)/2} exp(mean log(1 - (q+1-lambda)u + q u^2))
#     over Laplacian eigenvalues lambda of a (q+1)-regular graph
from ihara import cjk_evaluate, complete_graph, cube_graph, cycle_graph, generalized_zeta_reciprocal, petersen, rooted_zeta_series, zeta_series_truncated

for g in (cycle_graph(7), complete_graph(5), petersen(), cube_graph()):
    q = g.regular_degree() - 1
    print(g.name, f"(q = {q}, domain |u| < {1 / q:.3f})")
    for u in (0.05, 0.15, 0.3):
        if abs(u) < 1 / q:
            a = cjk_evaluate(g, u).value
            b = generalized_zeta_reciprocal(g, u).value
            print(f"   u={u:.2f}  spectral {a:.15f}  nth-root {b:.15f}  diff {abs(a - b):.1e}")

# Rooted reduced cycles: for a vertex-transitive graph every root sees the
# same counts, and the rooted series to the n-th power is the full zeta series.
P = petersen()
rooted = rooted_zeta_series(P, 0, 10)
print("rooted series at vertex 0:", [str(c) for c in rooted.coeffs])
print("rooted^n == full series  :", rooted ** P.n == zeta_series_truncated(P, 10))
