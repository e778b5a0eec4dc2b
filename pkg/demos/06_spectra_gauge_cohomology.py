#!/usr/bin/env python3
"""Representation spectra, gauge equivalence, and the cohomology solver.

Different lifts c(h) of the same orbit level cut different quotients of the
deformed algebra.  Specializing h = 1 and scanning highest weights gives a
bounded certificate that two lifts differ; order-by-order gauge solves on
degree-bounded subspaces probe equivalence from the other side; and the
vanishing polynomial degree-two cohomology is the linear engine behind the
uniqueness of the deformed bracket.
"""

from fractions import Fraction

from orbitstar import (
    H,
    HPoly,
    H_ONE,
    NCPoly,
    casimir_scalar,
    format_cpoly,
    gauge_step,
    h2_dimension,
    highest_weight_casimir,
    nonisomorphism_witness,
    predefined,
    sl2_casimir,
    sphere_orbit,
    su2_defining_rep,
)
from orbitstar.lie import adjoint_rep

su2 = predefined("su2")
sl2 = predefined("sl2")

print("Casimir scalars at h = 1:")
P = NCPoly(su2, {(0, 0): 1, (1, 1): 1, (2, 2): 1})
print(f"  defining rep: {casimir_scalar(P, su2_defining_rep(), 1)}")
print(f"  adjoint rep:  {casimir_scalar(P, adjoint_rep(su2), 1)}")

omega = sl2_casimir(sl2)
hw = highest_weight_casimir(sl2, omega)
print(f"\nHighest-weight value of the quadratic casimir: "
      f"{format_cpoly(hw, ('lambda',))}")

print("\nSpectrum witness for two lifts of the same level:")
report = nonisomorphism_witness(HPoly.const(4), HPoly.const(4) + H * Fraction(1, 3), 20)
print(f"  lift {report['lift_a']}: weights {report['spectrum_a']}")
print(f"  lift {report['lift_b']}: weights {report['spectrum_b']}")
print(f"  disjoint, witness found: {report['witness_found']} "
      f"(bounded by lambda <= {report['lambda_bound']})")

print("\nGauge step between the orbit products of lifts 1 and 1 + h")
print("(degree bound 2; a bounded statement only):")
res = gauge_step(
    sphere_orbit(1).star_product(),
    sphere_orbit(1, lift=H_ONE + H).star_product(),
    1,
    2,
)
print(f"  feasible: {res['feasible']}")
if res["feasible"]:
    gens = [e for e in res["operator"] if sum(e) == 1]
    for e in sorted(gens):
        print(f"  T1{e} = {format_cpoly(res['operator'][e], su2.varnames)}")

print("\nDegree-two cohomology of the polynomial module (Whitehead):")
dims = {d: h2_dimension(su2, d) for d in range(5)}
print(f"  h2 by homogeneous degree: {dims}")
