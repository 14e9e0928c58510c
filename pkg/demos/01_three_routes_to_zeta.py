# The Ihara zeta function of a graph, computed three independent ways.
#
# 1. count reduced (non-backtracking, tailless) cycles and exponentiate
#    sum N_k u^k / k
# 2. the determinant formula (1 - u^2)^{r-1} det(I - uA + u^2 (D - I))
# 3. the Grover walk determinant det(I - uU), which agrees with 2 on cycles
from ihara import (
    complete_graph,
    count_reduced_cycles,
    cycle_graph,
    det_I_minus_uU_polynomial,
    hashimoto_trace_counts,
    ihara_reciprocal_polynomial,
    petersen,
    zeta_series_truncated,
)

# Reduced cycles of K4. Each triangle is traversed from 3 starting points
# in 2 directions, so the 4 triangles give N_3 = 24.
K4 = complete_graph(4)
print("N_k for K4 by DFS      :", count_reduced_cycles(K4, 8).counts)
print("N_k for K4 by trace B^k:", hashimoto_trace_counts(K4, 8).counts)

# Z(K4, u)^-1 is a polynomial of degree 2m = 12
poly = ihara_reciprocal_polynomial(K4)
print("Z(K4,u)^-1 coefficients:", poly.to_json())

# Its reciprocal series must reproduce the cycle-count series exactly
K = 10
series = zeta_series_truncated(K4, K)
print("Z(K4,u) series         :", [str(c) for c in series.coeffs])
print("series * polynomial == 1 mod u^11:", (series * poly.to_series(K)).is_one())

# Same check on the Petersen graph
P = petersen()
print("Petersen duality holds :", (zeta_series_truncated(P, K) * ihara_reciprocal_polynomial(P).to_series(K)).is_one())

# On cycle graphs all three routes give (1 - u^n)^2
for n in (3, 5, 8):
    g = cycle_graph(n)
    a, b = ihara_reciprocal_polynomial(g), det_I_minus_uU_polynomial(g)
    print(f"C{n}: Ihara {a.to_json()}  Grover equal: {a == b}")

# For K4 the Grover determinant is a different polynomial: the coincidence
# is special to 2-regular graphs where T = A / 2
print("K4 Grover == Ihara     :", det_I_minus_uU_polynomial(K4) == poly)
