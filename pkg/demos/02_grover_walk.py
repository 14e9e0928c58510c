# Grover walks: the coin reflects amplitudes around the uniform vector at
# each vertex, the shift reverses each arc.
import numpy as np

from ihara import complete_graph, cycle_graph, evolve, grover_char_poly, grover_matrix, grover_spectrum, petersen
from ihara.walk import multiset_distance, random_state

# On a cycle the Grover coin just swaps the two entering arcs, so U is a
# permutation: one walker circulating clockwise, one counter-clockwise.
C6 = cycle_graph(6)
U = grover_matrix(C6)
print("C6 Grover entries:", sorted({float(x) for x in U.U.ravel()}))
psi0 = random_state(C6, rng=0)
print("U^6 psi0 == psi0 :", np.allclose(evolve(U, psi0, 6).psi, psi0.psi))

# The characteristic polynomial from the n x n transition matrix
print("det(lambda I - U) on C6:", grover_char_poly(C6).to_json())

# Spectral mapping: each eigenvalue mu of T gives e^{+-i arccos mu};
# (lambda^2 - 1)^{m-n} adds m - n copies each of +1 and -1.
P = petersen()
mapped, direct, trans = grover_spectrum(P)
print("Spec(T) of Petersen:", sorted({round(float(x), 10) for x in trans.values.real}))
print("mapped vs direct multiset distance:", multiset_distance(mapped.values, direct.values))
for value, count in mapped.multiplicities():
    print(f"   {value.real:+.6f}{value.imag:+.6f}i  x{count}")

# Norm is preserved over long runs
K4 = complete_graph(4)
psi = evolve(grover_matrix(K4), random_state(K4, rng=1), 1000)
print("|psi_1000| - 1 on K4:", psi.norm() - 1)
