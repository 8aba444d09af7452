"""Compile the five-qubit measurement wire and read off its signal flow.

The wire realizes an arbitrary single-qubit rotation: qubit 1 carries the
input state, qubits 1-4 are measured, qubit 5 holds the result. Random
measurement outcomes would wreck the rotation unless later angles flip
sign and the output receives Pauli corrections; compiling the pattern
tells us exactly which outcomes control what.
"""

from mbqcflow import adapt_angles, chain5, eliminate, find_flow, initial_byproduct
from mbqcflow.cli import stabilizer_text

pattern = chain5()  # symbolic angles alpha, beta, gamma

print("graph state generators:")
for q in pattern.qubits:
    print(f"  K{q} = {stabilizer_text(pattern, q)}")

# Every measured qubit leaves a Z^s byproduct behind.
print("\nbyproduct word after all measurements:")
print(" ", initial_byproduct(pattern))

# The flow pairs each measured qubit with the neighbor whose generator
# cancels its byproduct.
flow = find_flow(pattern)
print("\ncausal flow:", " ".join(f"{i}->{s}" for i, s in sorted(flow.succ.items())))

sf = eliminate(pattern)
print("\nstabilizer powers applied (accumulated exponents):")
for q, e in sf.trace:
    print(f"  K{q} raised to {e}")

print("\nangle-sign parities per measured qubit:")
for q, angle in adapt_angles(pattern, sf).items():
    print(f"  qubit {q}: {angle}")

print("\noutput corrections:")
for j in pattern.outputs:
    print(f"  qubit {j}: X^({sf.output_x[j]})  Z^({sf.output_z[j]})")
