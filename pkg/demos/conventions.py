"""Where a formula admits two readings, compute both and see which one holds.

Run with ``python3 demos/conventions.py``.
"""

from qminors import identities as ids
from qminors import sklyanin as sk

# 1. The explicit determinant formula needs p' to end in the largest index,
#    even for N = 2, where that forces (2,1) -> (1,2).
print("pi((2,1)) =", sk.pi_map((2, 1)))
print("explicit sdet, forced reading:", sk.sdet_explicit("O", 2) == sk.sdet("O", 2))
print("explicit sdet, pi_2 = id on S_2:", sk.sdet_explicit("O", 2, pi=tuple) == sk.sdet("O", 2))

# 2. Grassmann-Pluecker exponent on the right-hand side.
for n, m in ((1, 1), (1, 3), (3, 3)):
    print(f"exchange relation n={n} m={m}:", ids.gp_convention_report(n, m))

# 3. Sylvester: which indices border the small minors.
for border in ids.SYLVESTER_BORDERS:
    print(f"Sylvester O 2+1 with {border} border:", ids.sylvester_check("sdet", "O", 2, 1, border=border))

# 4. Pfaffian Sylvester: the power of Pf(X_J) must match degrees, which pins it to n-1.
for exponent in ids.PF_SYLVESTER_EXPONENTS:
    print(f"Pfaffian Sylvester 4+2, exponent from {exponent}:",
          ids.sylvester_check("pf", "Sp", 4, 2, exponent=exponent))
