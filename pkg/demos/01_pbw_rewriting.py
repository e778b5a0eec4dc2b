#!/usr/bin/env python3
"""Rewriting words to the ordered basis of the deformed enveloping algebra.

The algebra is generated by X, Y, Z with X Y - Y X = h [X, Y] and the su(2)
bracket table [X,Y] = Z, [Y,Z] = X, [Z,X] = Y.  Every word rewrites to a
combination of nondecreasing words; each swap trades one inversion for an
h-weighted shorter word, so word length + h-degree is conserved.
"""

from orbitstar import NCPoly, format_cpoly, format_ncpoly, predefined

su2 = predefined("su2")

print("Normal forms of the three descents:")
for word, label in [((1, 0), "Y*X"), ((2, 0), "Z*X"), ((2, 1), "Z*Y")]:
    nf = NCPoly.word(su2, word).normal_form()
    print(f"  {label:4} -> {format_ncpoly(nf)}")

print("\nA longer word and its graded degree:")
w = NCPoly.word(su2, (2, 1, 0, 2))
nf = w.normal_form()
print(f"  Z*Y*X*Z -> {format_ncpoly(nf)}")
print(f"  graded degree (word length + h power): {nf.graded_degree()},",
      f"homogeneous: {nf.is_graded_homogeneous()}")

print("\nProducts are computed by concatenation followed by rewriting;")
print("associativity holds exactly:")
X, Y, Z = (NCPoly.generator(su2, i) for i in range(3))
left = (X * Y) * Z
right = X * (Y * Z)
print(f"  (X.Y).Z == X.(Y.Z): {left == right}")
print(f"  X.Y - Y.X          = {format_ncpoly(X * Y - Y * X)}")

print("\nLeftmost and rightmost rewriting strategies agree (confluence):")
e = NCPoly.word(su2, (1, 0, 2))
print(f"  Y*X*Z (leftmost)  -> {format_ncpoly(e.normal_form('leftmost'))}")
print(f"  Y*X*Z (rightmost) -> {format_ncpoly(e.normal_form('rightmost'))}")

print("\nSpecializing the deformation parameter:")
nf = NCPoly.word(su2, (1, 0)).normal_form()
print(f"  Y*X at h = 1   -> {format_ncpoly(nf.specialize(1))}")
print(f"  Y*X at h = 0   -> {format_ncpoly(nf.specialize(0))}")
shadow = format_cpoly(nf.project_h0(), su2.varnames)
print(f"  commutative shadow (h -> 0, words as monomials): {shadow}")
