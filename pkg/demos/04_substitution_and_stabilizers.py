"""The two numeric facts the whole compilation scheme rests on.

First: a measurement outcome of 1 is the same thing as outcome 0 on the
state with Z pre-applied to that qubit, so all outcome randomness can be
pushed into Z byproducts on the cluster. Second: graph-state generators
fix the prepared state (except on input qubits), so multiplying them in
changes nothing physically; it only rewrites the byproducts.
"""

import numpy as np

from mbqcflow import (
    Pattern,
    check_z_substitution,
    hbranch,
    prepare,
    stabilizer_deviation,
)

rails = hbranch(0.9, -0.4, 1.7, 0.3)
states = {1: (0.6, 0.8j), 4: (1 / np.sqrt(2), -1j / np.sqrt(2))}

print("outcome-1 branch vs Z-then-outcome-0 branch, per measured qubit:")
for q in rails.measured:
    dev = check_z_substitution(rails, q, states)
    print(f"  qubit {q}: max deviation {dev:.2e}")

# A ring with a chord, nothing measured: preparation only.
ring = Pattern(
    n_qubits=6,
    edges=frozenset({(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)}),
    inputs=(),
    outputs=tuple(range(6)),
    measured=(),
    angles={},
)
state = prepare(ring)
print("\n|| (K_q - 1) |state> || on a ring with a chord, default preparation:")
for q in ring.qubits:
    print(f"  qubit {q}: {stabilizer_deviation(ring, state, q):.2e}")

print("\nwith an arbitrary state on input qubit 0, K_0 no longer fixes the state:")
with_input = Pattern(
    n_qubits=6, edges=ring.edges, inputs=(0,), outputs=tuple(range(1, 6)),
    measured=(0,), angles={0: 0.0},
)
state = prepare(with_input, {0: (0.28, 0.96)})
for q in with_input.qubits:
    tag = "input" if with_input.is_input(q) else "     "
    print(f"  qubit {q} {tag}: {stabilizer_deviation(with_input, state, q):.2e}")
