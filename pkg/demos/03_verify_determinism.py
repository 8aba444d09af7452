"""Certify a compiled pattern against the dense state-vector oracle.

Every one of the 2^4 outcome branches of the wire is post-selected,
measured with sign-adapted angles, and corrected. If the compiled signal
flow is right, all sixteen corrected outputs are the same state, and the
zero branch equals the reference rotation applied to the input.
"""

import numpy as np

from mbqcflow import (
    chain5,
    eliminate,
    enumerate_branches,
    fidelity,
    max_pairwise_infidelity,
    reference_chain_unitary,
)

rng = np.random.default_rng(42)
alpha, beta, gamma = (float(x) for x in rng.uniform(-np.pi, np.pi, 3))
amp = rng.normal(size=2) + 1j * rng.normal(size=2)
amp /= np.linalg.norm(amp)

pattern = chain5(alpha, beta, gamma)
sf = eliminate(pattern)
results = enumerate_branches(pattern, sf, {1: (amp[0], amp[1])})

print(f"angles: alpha={alpha:+.4f} beta={beta:+.4f} gamma={gamma:+.4f}")
print(f"{len(results)} branches:")
zero = results[0]
for r in results:
    key = "".join(str(r.outcomes[q]) for q in pattern.measured)
    infid = max(0.0, 1 - fidelity(zero.output_state, r.output_state))
    print(f"  outcomes {key}: probability {r.probability:.6f}, infidelity vs zero branch {infid:.2e}")

print("\nmax pairwise infidelity:", f"{max_pairwise_infidelity(results):.2e}")

expected = reference_chain_unitary(alpha, beta, gamma) @ amp
overlap = abs(np.vdot(expected, zero.output_state.vector)) ** 2
print("zero branch vs reference rotation, fidelity:", f"{overlap:.15f}")
