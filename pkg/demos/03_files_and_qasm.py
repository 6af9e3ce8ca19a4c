# %% [markdown]
# # Circuit files, state documents and QASM export

# %%
import numpy as np

from recqft.circuit import apply_circuit, basis_state
from recqft.formats import export_qasm, parse_circuit, parse_state, serialize_circuit, serialize_state
from recqft.qft import build_qft

text = serialize_circuit(build_qft(3))
print(text)
assert parse_circuit(text) == build_qft(3)

# %% [markdown]
# State documents use 17 significant digits, so doubles survive a round trip
# bit for bit.

# %%
state = apply_circuit(basis_state(2, 1), build_qft(2))
doc = serialize_state(state)
print(doc)
assert parse_state(doc).tobytes() == state.tobytes()

# %% [markdown]
# QASM export for other toolchains. Qubit 1 (the most significant bit) is
# `q[0]`.

# %%
print(export_qasm(build_qft(3)))

# %% [markdown]
# The same workflows from the shell:
#
#     recqft build -n 3 --variant mqft
#     recqft build -n 3 -o qft3.txt && recqft simulate qft3.txt --input basis:1
#     recqft verify --n-max 6 --trials 20 --seed 42 --tolerance 1e-10
#     recqft count -n 10
