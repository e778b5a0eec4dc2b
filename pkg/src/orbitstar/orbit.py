"""Orbit algebras: reduction modulo the orbit ideal on both sides of the
quantization, the induced star products, and the checks that probe them.

An Orbit couples an invariant polynomial p (validated Poisson-invariant)
with a level constant c0 and a lift c(h) with c(0) = c0.  On the commutative
side the ideal (p - c0) is handled by one confluent rewrite rule with the
last variable leading (z^2 -> c0 - x^2 - y^2 for the rank-one sphere); on
the deformed side the central element P = symmetrize(p) drives the analogous
word rewrite Z^2 -> c(h) - X^2 - Y^2 with renormalization, which terminates
because each substitution lowers the generator degree.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .envelope import NCPoly, _acc
from .lie import LieAlgebra, predefined
from .poly import (
    CPoly,
    ReductionSystem,
    kirillov_bracket,
    is_invariant,
    monomials_up_to,
    reduce as poly_reduce_by,
)
from .quantize import StarProduct, symmetrize
from .scalars import H, H_ONE, HPoly, as_gauss, as_hpoly


class Orbit:
    """A regular level set p = c0 together with a lift of its ideal."""

    def __init__(self, algebra: LieAlgebra, invariants, constants, lifts=None):
        self.algebra = algebra
        n = algebra.dim
        self.invariants = tuple(invariants)
        for p in self.invariants:
            if not is_invariant(algebra, p):
                raise ValueError("orbit generator is not an invariant polynomial")
        consts = []
        for c in constants:
            g = as_gauss(c if not isinstance(c, str) else Fraction(c))
            if g is None:
                raise TypeError(f"bad orbit constant {c!r}")
            consts.append(g)
        self.constants = tuple(consts)
        if len(self.constants) != len(self.invariants):
            raise ValueError("need one constant per invariant")
        if lifts is None:
            lifts = [HPoly.const(c) for c in self.constants]
        self.lifts = tuple(as_hpoly(c) for c in lifts)
        for lift, c0 in zip(self.lifts, self.constants):
            if lift.coeff(0) != c0:
                raise ValueError("lift must restrict to the orbit constant at h=0")
        # central lifts of the generators
        self.casimirs = tuple(symmetrize(algebra, p) for p in self.invariants)
        for P in self.casimirs:
            if not P.is_central():
                raise ValueError("symmetrized invariant is not central")
        # rank-one sphere shape: a single sum-of-squares generator, reduced
        # with the last variable leading
        sphere = CPoly.zero(n)
        for i in range(n):
            sphere = sphere + CPoly.variable(n, i) ** 2
        self._sphere = (
            len(self.invariants) == 1 and self.invariants[0] == sphere
        )
        if self._sphere and not self.constants[0]:
            raise ValueError("regular orbit needs a nonzero level constant")
        self.priority = (n - 1,) + tuple(range(n - 1))
        if self._sphere:
            gen = self.invariants[0] - CPoly.constant(n, self.constants[0])
            self.basis_rule = ReductionSystem.from_polynomials(
                [gen], priority=self.priority
            )
        else:
            self.basis_rule = ReductionSystem.from_polynomials(
                [
                    p - CPoly.constant(n, c)
                    for p, c in zip(self.invariants, self.constants)
                ],
                priority=self.priority,
            )
        self._products = {}

    def _need_sphere(self):
        if not self._sphere:
            raise ValueError(
                "this operation needs the rank-one sum-of-squares orbit"
            )

    # -- commutative side --------------------------------------------------
    def orbit_reduce(self, f: CPoly) -> CPoly:
        """The remainder of f modulo the orbit ideal's rewrite system."""
        _, rem = poly_reduce_by(f, self.basis_rule)
        return rem

    def decompose(self, f: CPoly):
        """Split f = a*(p - c0) + r(x, y) + s(x, y)*z exactly."""
        self._need_sphere()
        n = self.algebra.dim
        quots, rem = poly_reduce_by(f, self.basis_rule)
        r_terms, s_terms = {}, {}
        for exps, c in rem.terms.items():
            if exps[-1] == 0:
                r_terms[exps] = c
            else:
                s_terms[exps[:-1] + (exps[-1] - 1,)] = c
        return quots[0], CPoly(n, r_terms), CPoly(n, s_terms)

    def basis_monomials(self, max_degree):
        """Orbit-basis exponent vectors (leading-variable exponent <= 1)."""
        self._need_sphere()
        return [
            e
            for e in monomials_up_to(self.algebra.dim, max_degree, self.priority)
            if e[-1] <= 1
        ]

    # -- deformed side -----------------------------------------------------
    def neighbor_lift(self, c0_prime, index=0) -> HPoly:
        """The ideal lift of the nearby level c0': same h-part, shifted value."""
        g = as_gauss(c0_prime if not isinstance(c0_prime, str) else Fraction(c0_prime))
        return self.lifts[index] + (g - self.constants[index])

    def ideal_reduce(self, u: NCPoly, lift=None, track_quotient=False):
        """Reduce a canonical element modulo (P - c(h)).

        Words with leading-variable exponent >= 2 are rewritten through
        Z^2 = P - X^2 - Y^2 with P replaced by the lift, renormalizing as
        needed; the result is the canonical representative supported on
        words with leading exponent <= 1.  With track_quotient the left
        cofactor q with u = q*(P - c(h)) + r is returned as well.
        """
        self._need_sphere()
        if u.algebra is not self.algebra:
            raise ValueError("element lives over a different algebra")
        if not u.is_canonical():
            u = u.normal_form()
        lift = self.lifts[0] if lift is None else as_hpoly(lift)
        z = self.algebra.dim - 1
        terms = dict(u.terms)
        quotient = {}
        while True:
            cand = [w for w in terms if len(w) >= 2 and w[-2] == z]
            if not cand:
                break
            w = max(cand)
            coeff = terms.pop(w)
            base = w[:-2]
            if track_quotient:
                _acc(quotient, base, coeff)
            _acc(terms, base, coeff * lift)
            squares = NCPoly.zero(self.algebra)
            for i in range(z):
                squares = squares + NCPoly.word(self.algebra, base + (i, i))
            for ww, cc in squares.normal_form().terms.items():
                _acc(terms, ww, -(coeff * cc))
        rem = NCPoly(self.algebra, terms)
        if track_quotient:
            return NCPoly(self.algebra, quotient), rem
        return rem

    def casimir_minus_lift(self, lift=None) -> NCPoly:
        lift = self.lifts[0] if lift is None else as_hpoly(lift)
        return self.casimirs[0] - NCPoly.scalar(self.algebra, lift)

    def lifted_rule(self, lift=None):
        """The deformed-side rewrite as (leading word, replacement)."""
        self._need_sphere()
        lift = self.lifts[0] if lift is None else as_hpoly(lift)
        z = self.algebra.dim - 1
        repl = NCPoly.scalar(self.algebra, lift)
        for i in range(z):
            repl = repl - NCPoly.word(self.algebra, (i, i))
        return (z, z), repl

    # -- basis correspondences ----------------------------------------------
    def word_lift(self, f: CPoly) -> NCPoly:
        """Monomials to ordered words, x^a y^b z^t -> X^a Y^b Z^t."""
        out = NCPoly.zero(self.algebra)
        for exps, c in f.terms.items():
            out = out + NCPoly.ordered_word(self.algebra, exps, c)
        return out

    def word_lower(self, u: NCPoly, check_basis=True) -> CPoly:
        """Ordered words back to monomials; the inverse of word_lift on the
        reduced span."""
        if not u.is_canonical():
            raise ValueError("cannot lower a non-canonical element")
        z = self.algebra.dim - 1
        exps = u.word_exps()
        if check_basis and any(e[z] > 1 for e in exps):
            raise ValueError("inputs not in the orbit basis span")
        return CPoly(self.algebra.dim, exps)

    def split_embed(self, f: CPoly) -> NCPoly:
        """Embed along the split f = a*(p - c0) + rem: the cofactor rides on
        the central generator, the remainder maps to ordered words."""
        self._need_sphere()
        a, r, s = self.decompose(f)
        n = self.algebra.dim
        rem = r + s * CPoly.variable(n, n - 1)
        out = self.word_lift(rem)
        if not a.is_zero():
            c0 = self.constants[0]
            shifted = self.casimirs[0] - NCPoly.scalar(self.algebra, c0)
            out = out + self.word_lift(a) * shifted
        return out.normal_form()

    def split_embed_inverse(self, u: NCPoly) -> CPoly:
        self._need_sphere()
        c0 = self.constants[0]
        q, r = self.ideal_reduce(u, lift=HPoly.const(c0), track_quotient=True)
        n = self.algebra.dim
        gen = self.invariants[0] - CPoly.constant(n, c0)
        return self.word_lower(q, check_basis=False) * gen + self.word_lower(r)

    def tangential_embed(self, f: CPoly) -> NCPoly:
        """Embed along powers of the generator: (p - c0)^k * b maps to
        (P - c(h))^k times the ordered word of b."""
        self._need_sphere()
        parts = []
        work = f
        while not work.is_zero():
            quots, rem = poly_reduce_by(work, self.basis_rule)
            parts.append(rem)
            work = quots[0]
        shifted = self.casimir_minus_lift()
        out = NCPoly.zero(self.algebra)
        power = NCPoly.one(self.algebra)
        for rem in parts:
            out = out + self.word_lift(rem) * power
            power = power * shifted
        return out

    def tangential_embed_inverse(self, u: NCPoly) -> CPoly:
        self._need_sphere()
        n = self.algebra.dim
        gen = self.invariants[0] - CPoly.constant(n, self.constants[0])
        out = CPoly.zero(n)
        power = CPoly.one(n)
        work = u
        while not work.is_zero():
            q, r = self.ideal_reduce(work, track_quotient=True)
            out = out + self.word_lower(r) * power
            power = power * gen
            work = q
        return out

    # -- star products -------------------------------------------------------
    def star_product(self) -> StarProduct:
        """The product on the orbit induced by the ordered-word basis map."""
        self._need_sphere()
        if "orbit" not in self._products:
            L = self.algebra
            self._products["orbit"] = StarProduct(
                L,
                self.word_lift,
                self.word_lower,
                nc_reduce=lambda u: self.ideal_reduce(u),
                poly_reduce=self.orbit_reduce,
                bracket=lambda f, g: kirillov_bracket(L, f, g),
                priority=self.priority,
                name="orbit",
            )
        return self._products["orbit"]

    def tangential_product(self) -> StarProduct:
        """The ambient product of the tangential embedding."""
        self._need_sphere()
        if "tangential" not in self._products:
            self._products["tangential"] = StarProduct(
                self.algebra,
                self.tangential_embed,
                self.tangential_embed_inverse,
                priority=self.priority,
                name="tangential",
            )
        return self._products["tangential"]

    def split_product(self) -> StarProduct:
        """The ambient product of the quotient-split embedding."""
        self._need_sphere()
        if "split" not in self._products:
            self._products["split"] = StarProduct(
                self.algebra,
                self.split_embed,
                self.split_embed_inverse,
                priority=self.priority,
                name="split",
            )
        return self._products["split"]

    def orbit_star(self, f: CPoly, g: CPoly) -> CPoly:
        return self.star_product().star(f, g)

    # -- verification probes ---------------------------------------------------
    def tangentiality_check(self, embed, c0_prime, degree_bound):
        """Does the embedding carry the nearby orbit's ideal into the lifted
        nearby ideal?  Sweeps monomial cofactors g with deg(g) + 2 within the
        bound and reduces embed(g*(p - c0')) modulo (P - lift').  Returns the
        first nonvanishing remainder as a witness."""
        self._need_sphere()
        n = self.algebra.dim
        gen = self.invariants[0] - CPoly.constant(n, _scalar(c0_prime))
        lift = self.neighbor_lift(_scalar(c0_prime))
        for exps in monomials_up_to(n, max(degree_bound - 2, 0), self.priority):
            g = CPoly.monomial(n, exps)
            rem = self.ideal_reduce(embed(g * gen).normal_form(), lift=lift)
            if not rem.is_zero():
                return {
                    "passed": False,
                    "witness": {"cofactor": g, "remainder": rem},
                }
        return {"passed": True, "witness": None}

    def reduction_compatibility_check(self, embed, degree_bound):
        """Reducing after embedding must equal embedding the reduction."""
        self._need_sphere()
        n = self.algebra.dim
        for exps in monomials_up_to(n, degree_bound, self.priority):
            f = CPoly.monomial(n, exps)
            lhs = self.ideal_reduce(embed(f).normal_form())
            rhs = self.word_lift(self.orbit_reduce(f))
            if lhs != rhs:
                return {
                    "passed": False,
                    "witness": {"monomial": f, "lhs": lhs, "rhs": rhs},
                }
        return {"passed": True, "witness": None}

    def invariant_product_check(self, star: StarProduct, degree_bound):
        """Multiplication by invariants should be undeformed: g*p = gp.

        Sweeps monomial g within the bound against the invariant generators
        and their pairwise products."""
        n = self.algebra.dim
        fs = list(self.invariants)
        for p in self.invariants:
            for q in self.invariants:
                fs.append(p * q)
        for exps in monomials_up_to(n, degree_bound, self.priority):
            g = CPoly.monomial(n, exps)
            for f in fs:
                got = star.star(g, f)
                want = g * f
                if got != want:
                    return {
                        "passed": False,
                        "witness": {
                            "factor": g,
                            "invariant": f,
                            "got": got,
                            "expected": want,
                        },
                    }
        return {"passed": True, "witness": None}

    def first_order_check(self, p1: CPoly, p2: CPoly):
        """For polynomials in x, y on the unit sphere, the product's first
        two orders follow p1*p2 - h z (dp1/dy)(dp2/dx)."""
        self._need_sphere()
        n = self.algebra.dim
        if self.lifts[0] != H_ONE:
            raise ValueError("the first-order rule is stated on the unit level")
        for p in (p1, p2):
            if any(e[-1] != 0 for e in p.terms):
                raise ValueError("inputs must not involve the leading variable")
        lhs = self.orbit_star(p1, p2).truncate_h(2)
        z = CPoly.variable(n, n - 1)
        rhs = self.orbit_reduce(
            p1 * p2 - z * p1.partial(1) * p2.partial(0) * H
        ).truncate_h(2)
        return {
            "passed": lhs == rhs,
            "got": lhs,
            "expected": rhs,
        }

    def bidifferential_obstruction(self, coeff_degree_bound, zz_data=None):
        """Try to express the first-order term through first-order
        derivatives in the chart coordinates x, y.

        The ansatz B1(f, g) = sum_{u,v in {x,y}} b_uv (df/du)(dg/dv) with
        on-orbit polynomial coefficients of bounded degree is matched against
        the engine's first-order values on the coordinate pairs, and against
        the (z, z) value after clearing the chart denominators (dz/du =
        -u/z, so z^2 B1(z, z) = sum b_uv u v).  zz_data overrides the cleared
        (z, z) value for fault-injection controls.  Returns the solve outcome
        together with the residual equation as a certificate.
        """
        self._need_sphere()
        from .linalg import LinearSystem
        from .scalars import GR_ZERO

        n = self.algebra.dim
        star = self.star_product()
        x = CPoly.variable(n, 0)
        y = CPoly.variable(n, 1)
        z = CPoly.variable(n, n - 1)
        coords = [(0, x), (1, y)]
        b_values = {}
        for iu, u in coords:
            for iv, v in coords:
                b_values[(iu, iv)] = star.bn(u, v, 1)
        zz = star.bn(z, z, 1)
        cleared_zz = (
            zz_data if zz_data is not None else self.orbit_reduce(z * z * zz)
        )

        basis = self.basis_monomials(coeff_degree_bound)
        index = {}
        for uv in b_values:
            for exps in basis:
                index[(uv, exps)] = len(index)
        system = LinearSystem(len(index))
        # match the ansatz on coordinate pairs: b_uv = engine B1(x_u, x_v)
        for uv, val in b_values.items():
            for exps in set(val.terms) | set(basis):
                want = val.coeff(exps).as_scalar()
                key = (uv, exps)
                if key in index:
                    system.add({index[key]: 1}, want, tag=("match", uv, exps))
                elif want and system.conflict is None:
                    system.conflict = ("degree", uv, exps)
        # the cleared (z, z) equation: sum_uv b_uv * x_u x_v = cleared value
        rows = {}
        for iu, iv in b_values:
            uv_poly = self.orbit_reduce(
                CPoly.variable(n, iu) * CPoly.variable(n, iv)
            )
            for exps in basis:
                col = index[((iu, iv), exps)]
                prod = self.orbit_reduce(CPoly.monomial(n, exps) * uv_poly)
                for mexps, c in prod.terms.items():
                    row = rows.setdefault(mexps, {})
                    row[col] = row.get(col, GR_ZERO) + c.as_scalar()
        for mexps in sorted(set(rows) | set(cleared_zz.terms)):
            system.add(
                rows.get(mexps, {}),
                cleared_zz.coeff(mexps).as_scalar(),
                tag=("chart", mexps),
            )
        # the forced ansatz requires cleared_zz = forced; the certificate is
        # the unsatisfiable equation 0 = forced - cleared_zz
        forced = CPoly.zero(n)
        for (iu, iv), val in b_values.items():
            forced = forced + val * CPoly.variable(n, iu) * CPoly.variable(n, iv)
        residual = self.orbit_reduce(forced - cleared_zz)
        feasible = system.conflict is None
        return {
            "feasible": feasible,
            "certificate": None if feasible else residual,
            "coefficients": b_values,
            "degree_bound": coeff_degree_bound,
        }

    def __repr__(self):
        return (
            f"Orbit(algebra={self.algebra.names}, constants={self.constants}, "
            f"lifts={self.lifts})"
        )


def _scalar(x):
    g = as_gauss(x if not isinstance(x, str) else Fraction(x))
    if g is None:
        raise TypeError(f"bad level constant {x!r}")
    return g


def sphere_orbit(c0=1, lift=None, algebra=None) -> Orbit:
    """The standard orbit p = c0 for the compact rank-one algebra."""
    L = algebra if algebra is not None else predefined("su2")
    n = L.dim
    p = CPoly.zero(n)
    for i in range(n):
        p = p + CPoly.variable(n, i) ** 2
    lifts = None if lift is None else [as_hpoly(lift)]
    return Orbit(L, [p], [_scalar(c0)], lifts)


def orbit_from_json(data, algebra=None) -> Orbit:
    """Load an orbit description like {"algebra": "su2", "invariants":
    ["x^2+y^2+z^2"], "constants": ["1"], "lifts": ["1"]}."""
    from .exprs import parse_expression, parse_hpoly
    from .lie import algebra_from_json

    if isinstance(data, str):
        data = json.loads(data)
    entry = data.get("algebra", "su2")
    if algebra is not None:
        L = algebra
    elif isinstance(entry, str):
        L = predefined(entry)
    else:
        L = algebra_from_json(entry)
    invariants = [
        parse_expression(text, mode="commutative", algebra=L)
        for text in data["invariants"]
    ]
    constants = [Fraction(str(c)) for c in data["constants"]]
    lifts = None
    if data.get("lifts"):
        lifts = [parse_hpoly(str(t)) for t in data["lifts"]]
    return Orbit(L, invariants, constants, lifts)
