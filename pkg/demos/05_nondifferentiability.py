#!/usr/bin/env python3
"""The orbit product's first order cannot come from differential operators.

In the chart where x, y are coordinates on the unit sphere, dz/dx = -x/z
and dz/dy = -y/z.  If the first-order term were a (1,1)-bidifferential
operator B_1(f,g) = sum b_uv (df/du)(dg/dv), the values on coordinate pairs
force b_yx = -z and the rest 0; clearing denominators in the (z,z) value
then demands 0 = -x*y*z on the orbit, which is false.  The engine builds
that linear system and reports the contradiction; a fault-injected (z,z)
value consistent with b_yx = -z is accepted, which controls the probe.
"""

from orbitstar import CPoly, format_cpoly, predefined, sphere_orbit

su2 = predefined("su2")
V = su2.varnames
x, y, z = (CPoly.variable(3, i) for i in range(3))
orb = sphere_orbit(1)
star = orb.star_product()

print("First-order values on coordinate pairs:")
for f, g, label in [(x, y, "x,y"), (y, x, "y,x"), (z, z, "z,z")]:
    print(f"  B1({label}) = {format_cpoly(star.bn(f, g, 1), V)}")

print("\nSolving for bounded-degree coefficients b_uv:")
res = orb.bidifferential_obstruction(3)
print(f"  feasible: {res['feasible']}")
print(f"  contradiction: 0 = {format_cpoly(res['certificate'], V)}")

print("\nControl: inject z^2 B1(z,z) = -x*y*z instead of the engine's 0:")
ctrl = orb.bidifferential_obstruction(3, zz_data=-(x * y * z))
byx = format_cpoly(ctrl["coefficients"][(1, 0)], V)
print(f"  feasible: {ctrl['feasible']} with b_yx = {byx}")
