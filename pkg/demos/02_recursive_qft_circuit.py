# %% [markdown]
# # Building the QFT circuit by recursion
#
# The circuit for n qubits reuses the (n-1)-qubit circuit once: it runs on
# qubits 1..n-1 while the last qubit (the parity of j) only labels the even and
# odd halves. A Hadamard and n-1 controlled phases on qubit n then perform the
# butterfly. The output comes out with its bits reversed.

# %%
import numpy as np

from recqft.circuit import apply_circuit, basis_state, invert, unitary_of
from recqft.fft import dft_matrix
from recqft.formats import serialize_circuit
from recqft.qft import bit_reverse, build_mqft, build_qft, gate_report

print(serialize_circuit(build_mqft(3)))

# %% [markdown]
# ## Bit-reversed output
#
# Row `bit_reverse(k)` of the mQFT unitary is row `k` of the DFT matrix.

# %%
n = 4
perm = [bit_reverse(k, n) for k in range(1 << n)]
u = unitary_of(build_mqft(n))
print("max |U_mqft[bitrev] - F| =", np.max(np.abs(u[perm] - dft_matrix(n))))

# %% [markdown]
# ## Swap restoration
#
# `floor(n/2)` swaps put the bits back in order; the result is the DFT matrix.

# %%
for n in range(1, 9):
    err = np.max(np.abs(unitary_of(build_qft(n)) - dft_matrix(n)))
    r = gate_report(n)
    print(f"n={n}  H={r.hadamard_count}  CR={r.cr_count}  SWAP={r.swap_count}  "
          f"mQFT gates={r.mqft_count} (n(n+1)/2={n * (n + 1) // 2})  max err={err:.1e}")

# %% [markdown]
# ## Inverse
#
# Reversing the gate list and conjugating each phase gives the adjoint.

# %%
rng = np.random.default_rng(1)
s = rng.standard_normal(64) + 1j * rng.standard_normal(64)
s /= np.linalg.norm(s)
c = build_qft(6)
back = apply_circuit(apply_circuit(s, c), invert(c))
print("round trip error:", np.max(np.abs(back - s)))

# %% [markdown]
# Applying the QFT twice maps |j> to |-j mod N>.

# %%
twice = apply_circuit(apply_circuit(basis_state(3, 3), build_qft(3)), build_qft(3))
print("QFT^2 |3> on 3 qubits lands on index", int(np.argmax(np.abs(twice))))
