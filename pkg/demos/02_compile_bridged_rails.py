"""Compile the bridged two-rail pattern (the H-shaped graph).

Two three-qubit rails carry one logical qubit each; the bridge edge 2-5
couples them, which is what a controlled transformation needs. The
interesting compilation effect: cancelling the byproducts of the first
wave of measurements deposits new Z factors on the bridge qubits, so the
second wave of stabilizers must be raised to accumulated parities.
"""

from mbqcflow import eliminate, find_flow, hbranch, initial_byproduct
from mbqcflow.cli import stabilizer_text

pattern = hbranch()

print("edges:", sorted(pattern.edges))
print("inputs:", pattern.inputs, " outputs:", pattern.outputs)
print("measurement order:", pattern.measured)

print("\nbridge-adjacent generators:")
for q in (2, 5):
    print(f"  K{q} = {stabilizer_text(pattern, q)}")

print("\nbyproduct word:", initial_byproduct(pattern))

flow = find_flow(pattern)
print("causal flow:", " ".join(f"{i}->{s}" for i, s in sorted(flow.succ.items())))

sf = eliminate(pattern)
print("\ntrace (note the accumulated exponents in the second half):")
for q, e in sf.trace:
    print(f"  K{q} raised to {e}")

print("\nsign parities: qubit 2 flips on", sf.angle_sign[2], ", qubit 5 flips on", sf.angle_sign[5])
print("corrections:")
for j in pattern.outputs:
    print(f"  qubit {j}: X^({sf.output_x[j]})  Z^({sf.output_z[j]})")
