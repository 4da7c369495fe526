"""Quantum Pfaffians in the symplectic algebra at N = 4.

Run with ``python3 demos/pfaffian_walkthrough.py``.
"""

from qminors import pfaffian as pfm
from qminors import sklyanin as sk
from qminors.ncalg import is_central
from qminors.scalars import q, q_factorial

A = pfm.symplectic_matrix(4)
P = pfm.pf(4)
print("Pf_q(X) =", P)

# three independent routes to the same element
print("full permutation sum agrees:", pfm.pf_definition(A) == P)
print("first-row expansion agrees:", pfm.pf_laplace(A) == P)

print("central:", is_central(P))
print("sdet == q^6 Pf^2:", sk.sdet("Sp", 4) == (P * P).scale(q**6))

# cofactors give an inverse up to Pf
print("orthogonality:", pfm.pf_orthogonality(4))

# the Pfaffian is the top coefficient of Omega^2 in the exterior algebra
top = pfm.omega_power(4)
print("Omega^2 top coefficient / Pf =", (1 + q**2) ** 2 * q_factorial(2, q**4),
      top == P.scale((1 + q**2) ** 2 * q_factorial(2, q**4)))
