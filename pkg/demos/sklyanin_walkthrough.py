"""A tour of the orthogonal reflection algebra at N = 3.

Run with ``python3 demos/sklyanin_walkthrough.py``.
"""

from qminors import make_presentation, normal_form, parse_expression
from qminors import matrix_algebra as ma
from qminors import sklyanin as sk
from qminors.ncalg import basis_enumerate, is_central

O3 = make_presentation("O", 3)
print("generators:", ", ".join(str(g) for g in O3.generator_elements()))

# x_ji is q^-1 x_ij, so only the upper triangle is stored
print("x[3,1] is stored as", parse_expression("x[3,1]", O3))

# products are reordered into the PBW basis
e = parse_expression("x[2,2]*x[1,1]", O3)
print("x22 x11 =", normal_form(e))
print("PBW monomials of degree <= 2:", len(basis_enumerate(O3, 2)))

d = sk.sdet("O", 3)
print("\nsdet has", len(d.terms), "terms:")
print(" ", d)
print("central:", is_central(d))

# the comatrix inverts X up to the determinant
X, H = sk.generator_matrix("O", 3), sk.comatrix("O", 3)
row = sum((H[(1, j)] * X[(j, 1)] for j in (1, 2, 3)), O3.zero())
print("(Xhat X)[1,1] == sdet:", row == d)

# under the embedding into A_q(Mat_3) the determinant becomes a1 a2 a3 det_q^2
a = ma.default_a(3, "O", symbolic=True)
image = ma.phi_embed(d, a)
det = ma.det_q(3)
print("phi(sdet) == a1 a2 a3 det_q^2:", image == (det * det).scale(a[0] * a[1] * a[2]))

# the explicit permutation formula agrees with the operator definition
print("explicit formula agrees:", sk.sdet_explicit("O", 3) == d)
