"""Symmetrizer quantization and star products.

symmetrize sends a monomial of degree p to the average of its p! orderings
(enumerated over distinct words with multinomial weights), and sym_inverse
recovers the polynomial by triangular descent on word length.  A StarProduct
packages an invertible basis correspondence between polynomials and the
deformed enveloping algebra; the induced product is
f * g = backward(forward(f) . forward(g)).
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .envelope import NCPoly, _acc
from .lie import LieAlgebra
from .poly import CPoly, acc_term, kirillov_bracket, monomials_up_to
from .scalars import HPoly


def _distinct_words(counts):
    """All distinct orderings of the multiset {i with multiplicity counts[i]}."""
    total = sum(counts)
    if total == 0:
        yield ()
        return
    for i, c in enumerate(counts):
        if c == 0:
            continue
        rest = list(counts)
        rest[i] -= 1
        for tail in _distinct_words(rest):
            yield (i,) + tail


def _sym_monomial(L: LieAlgebra, exps):
    cached = L._sym_cache.get(exps)
    if cached is not None:
        return cached
    p = sum(exps)
    weight = Fraction(1, factorial(p))
    for e in exps:
        weight *= factorial(e)
    w_coeff = HPoly.const(weight)
    raw = {word: w_coeff for word in _distinct_words(exps)}
    canonical = NCPoly(L, raw).normal_form().terms
    L._sym_cache[exps] = canonical
    return canonical


def symmetrize(L: LieAlgebra, f: CPoly) -> NCPoly:
    """The symmetrizer map, linearly extended and returned in canonical form."""
    if f.nvars != L.dim:
        raise ValueError("polynomial does not match the algebra's variables")
    out = {}
    for exps, coeff in f.terms.items():
        for word, cw in _sym_monomial(L, exps).items():
            _acc(out, word, coeff * cw)
    return NCPoly(L, out)


def sym_inverse(L: LieAlgebra, u: NCPoly) -> CPoly:
    """The inverse of symmetrize on canonical elements.

    Peels the longest words: they coincide with the top-degree part of the
    symmetrization of the matching monomials, so subtracting it strictly
    lowers the maximal word length.
    """
    if u.algebra is not L:
        raise ValueError("element lives over a different algebra")
    if not u.is_canonical():
        raise ValueError("sym_inverse expects a canonical element")
    n = L.dim
    rem = dict(u.terms)
    out = {}
    while rem:
        top = max(len(w) for w in rem)
        layer = {}
        for w, c in list(rem.items()):
            if len(w) != top:
                continue
            exps = [0] * n
            for g in w:
                exps[g] += 1
            layer[tuple(exps)] = c
        for exps, c in layer.items():
            acc_term(out, exps, c)
        peeled = symmetrize(L, CPoly(n, layer))
        for w, c in peeled.terms.items():
            _acc(rem, w, -c)
    return CPoly(n, out)


class StarProduct:
    """An associative deformation of polynomial multiplication.

    forward/backward realize the basis correspondence; nc_reduce, when
    present, is applied to every product before inversion (used by orbit
    products to pass to the quotient algebra), and poly_reduce normalizes
    the commutative side.  bracket is the first-order antisymmetric part
    the product is expected to deform.
    """

    def __init__(self, algebra: LieAlgebra, forward, backward, *, nc_reduce=None,
                 poly_reduce=None, bracket=None, priority=None, name="star"):
        self.algebra = algebra
        self.nvars = algebra.dim
        self.forward = forward
        self.backward = backward
        self.nc_reduce = nc_reduce
        self.poly_reduce = poly_reduce
        self.priority = tuple(priority) if priority is not None else None
        self.name = name
        if bracket is None:
            bracket = lambda f, g: kirillov_bracket(algebra, f, g)
        self._bracket = bracket
        self._pair_cache = {}

    # -- the product ------------------------------------------------------
    def _star_monomials(self, e1, e2):
        key = (e1, e2)
        hit = self._pair_cache.get(key)
        if hit is None:
            m1 = CPoly.monomial(self.nvars, e1)
            m2 = CPoly.monomial(self.nvars, e2)
            u = self.forward(m1) * self.forward(m2)
            if self.nc_reduce is not None:
                u = self.nc_reduce(u)
            hit = self.backward(u)
            self._pair_cache[key] = hit
        return hit

    def star(self, f: CPoly, g: CPoly) -> CPoly:
        """f * g, extended bilinearly over the monomial basis."""
        self._check_domain(f)
        self._check_domain(g)
        out = CPoly.zero(self.nvars)
        for e1, c1 in f.terms.items():
            for e2, c2 in g.terms.items():
                out = out + self._star_monomials(e1, e2) * (c1 * c2)
        return out

    def _check_domain(self, f):
        if f.nvars != self.nvars:
            raise ValueError("polynomial over the wrong variables")
        if self.poly_reduce is not None:
            for exps in f.terms:
                m = CPoly.monomial(self.nvars, exps)
                if self.poly_reduce(m) != m:
                    raise ValueError(
                        f"inputs not in the product's basis span: {exps}"
                    )

    def b0(self, f: CPoly, g: CPoly) -> CPoly:
        """The undeformed product (reduced when the domain is a quotient)."""
        prod = f * g
        if self.poly_reduce is not None:
            prod = self.poly_reduce(prod)
        return prod

    def bracket(self, f: CPoly, g: CPoly) -> CPoly:
        b = self._bracket(f, g)
        if self.poly_reduce is not None:
            b = self.poly_reduce(b)
        return b

    def bn(self, f: CPoly, g: CPoly, n: int) -> CPoly:
        """The coefficient of h^n in f * g, for h-free inputs."""
        if (f.h_degree() or 0) > 0 or (g.h_degree() or 0) > 0:
            raise ValueError("order coefficients are defined for h-free inputs")
        return self.star(f, g).h_coefficient(n)

    def monomial_basis(self, max_degree):
        """Exponent vectors of the product's monomial basis up to a degree."""
        out = []
        for exps in monomials_up_to(self.nvars, max_degree, self.priority):
            if self.poly_reduce is not None:
                m = CPoly.monomial(self.nvars, exps)
                if self.poly_reduce(m) != m:
                    continue
            out.append(exps)
        return out


def symmetrizer_product(L: LieAlgebra) -> StarProduct:
    """The star product induced by the symmetrizer correspondence."""
    return StarProduct(
        L,
        lambda f: symmetrize(L, f),
        lambda u: sym_inverse(L, u),
        name="sym",
    )


def pbw_basis_product(L: LieAlgebra) -> StarProduct:
    """The star product of the ordered-word basis map x^a -> X^a."""

    def forward(f):
        out = NCPoly.zero(L)
        for exps, c in f.terms.items():
            out = out + NCPoly.ordered_word(L, exps, c)
        return out

    def backward(u):
        if not u.is_canonical():
            raise ValueError("cannot invert a non-canonical element")
        return CPoly(L.dim, u.word_exps())

    return StarProduct(L, forward, backward, name="pbw")


def bn_coefficient(star: StarProduct, f: CPoly, g: CPoly, n: int) -> CPoly:
    return star.bn(f, g, n)


def check_deformation_axioms(star: StarProduct, degree_bound: int,
                             assoc_degree=None):
    """Exhaustively verify the deformation properties on monomials.

    For every ordered pair within the degree bound: f*g agrees with the
    undeformed product mod h, and the commutator agrees with h times the
    bracket mod h^2.  Associativity is checked on every monomial triple
    within assoc_degree (defaults to degree_bound).
    """
    if assoc_degree is None:
        assoc_degree = degree_bound
    basis = star.monomial_basis(max(degree_bound, assoc_degree))
    failures = []
    mono = lambda e: CPoly.monomial(star.nvars, e)
    names = tuple(star.algebra.varnames)

    def fmt(p):
        from .exprs import format_cpoly

        return format_cpoly(p, names)

    pairs = 0
    for e1 in basis:
        for e2 in basis:
            if sum(e1) + sum(e2) > degree_bound:
                continue
            pairs += 1
            f, g = mono(e1), mono(e2)
            fg = star.star(f, g)
            want0 = star.b0(f, g)
            if fg.h_coefficient(0) != want0:
                failures.append({
                    "property": "product-mod-h",
                    "pair": (fmt(f), fmt(g)),
                    "expected": fmt(want0),
                    "got": fmt(fg.h_coefficient(0)),
                })
            comm = fg - star.star(g, f)
            want1 = star.bracket(f, g)
            if not comm.h_coefficient(0).is_zero() or comm.h_coefficient(1) != want1:
                failures.append({
                    "property": "commutator-mod-h2",
                    "pair": (fmt(f), fmt(g)),
                    "expected": fmt(want1),
                    "got": fmt(comm.h_coefficient(1)),
                })
    triples = 0
    for e1 in basis:
        for e2 in basis:
            if sum(e1) + sum(e2) > assoc_degree:
                continue
            for e3 in basis:
                if sum(e1) + sum(e2) + sum(e3) > assoc_degree:
                    continue
                triples += 1
                f, g, k = mono(e1), mono(e2), mono(e3)
                left = star.star(star.star(f, g), k)
                right = star.star(f, star.star(g, k))
                if left != right:
                    failures.append({
                        "property": "associativity",
                        "pair": (fmt(f), fmt(g), fmt(k)),
                        "expected": fmt(right),
                        "got": fmt(left),
                    })
    return {
        "passed": not failures,
        "failures": failures,
        "pairs": pairs,
        "triples": triples,
    }


# ---------------------------------------------------------------------------
# Order-by-order gauge equivalence on degree-bounded subspaces.

def _apply_images(images, f: CPoly) -> CPoly:
    out = CPoly.zero(f.nvars)
    for exps, c in f.terms.items():
        img = images.get(exps)
        if img is None:
            raise ValueError(f"operator undefined on monomial {exps}")
        out = out + img * c
    return out


class _Affine:
    """A polynomial-valued affine function of the solver's unknowns."""

    __slots__ = ("const", "lin")

    def __init__(self, const, lin=None):
        self.const = const
        self.lin = lin or {}

    def add(self, other):
        lin = dict(self.lin)
        for u, p in other.lin.items():
            q = lin.get(u)
            q = p if q is None else q + p
            if q.is_zero():
                lin.pop(u, None)
            else:
                lin[u] = q
        return _Affine(self.const + other.const, lin)

    def neg(self):
        return _Affine(-self.const, {u: -p for u, p in self.lin.items()})

    def mul_poly(self, p, product):
        return _Affine(
            product(self.const, p),
            {u: product(q, p) for u, q in self.lin.items()},
        )


def gauge_step(star_a: StarProduct, star_b: StarProduct, n: int,
               degree_bound: int, t_partial=None):
    """Solve for the order-n gauge operator between two star products.

    Given operators T_1..T_{n-1} (t_partial, images over the monomial basis)
    making the products agree through order h^(n-1) on the degree-bounded
    space, look for a linear endomorphism T_n of that space such that the
    transported products agree mod h^(n+1) on every monomial pair within the
    bound.  The unknown images of products are pinned down by the derivation
    identity T_n(ab) = a T_n(b) + T_n(a) b + R(a, b), which leaves only the
    generator images free; the remaining pairs become an exact linear system.
    Returns a feasibility report; feasibility is a statement about the
    bounded subspace only.
    """
    if star_a.nvars != star_b.nvars:
        raise ValueError("products over different variable counts")
    basis = star_a.monomial_basis(degree_bound)
    if basis != star_b.monomial_basis(degree_bound):
        raise ValueError("products have different monomial bases")
    t_ops = list(t_partial or [])
    if len(t_ops) != n - 1:
        raise ValueError(f"t_partial must supply T_1..T_{n - 1}")
    nv = star_a.nvars
    mono = lambda e: CPoly.monomial(nv, e)

    def T(i, f):
        return f if i == 0 else _apply_images(t_ops[i - 1], f)

    def residual(fa, fb):
        # everything at order h^n except the three terms involving T_n
        acc = CPoly.zero(nv)
        for i in range(n):
            Ta = T(i, fa)
            for j in range(min(n - i, n - 1) + 1):
                acc = acc + star_b.bn(Ta, T(j, fb), n - i - j)
        for j in range(1, n + 1):
            acc = acc - T(n - j, star_a.bn(fa, fb, j))
        return acc

    # precondition: the partial gauge already matches through order n-1
    for m in range(1, n):
        for e1 in basis:
            for e2 in basis:
                if sum(e1) + sum(e2) > degree_bound:
                    continue
                lhs = CPoly.zero(nv)
                for i in range(m + 1):
                    lhs = lhs + T(i, star_a.bn(mono(e1), mono(e2), m - i))
                rhs = CPoly.zero(nv)
                for i in range(m + 1):
                    for j in range(m - i + 1):
                        rhs = rhs + star_b.bn(
                            T(i, mono(e1)), T(j, mono(e2)), m - i - j
                        )
                if lhs != rhs:
                    raise ValueError(
                        "inconsistent t_partial: products disagree at order "
                        f"h^{m} on {e1}, {e2}"
                    )

    gens = [e for e in basis if sum(e) == 1]
    unknown_index = {}
    for g in gens:
        for b in basis:
            unknown_index[(g, b)] = len(unknown_index)

    b0 = star_a.b0
    unit = tuple([0] * nv)
    images = {}
    images[unit] = _Affine(-residual(mono(unit), mono(unit)))
    for g in gens:
        images[g] = _Affine(
            CPoly.zero(nv),
            {unknown_index[(g, b)]: mono(b) for b in basis},
        )
    defining = {unit: (unit, unit)}
    basis_set = set(basis)
    for e in sorted(basis, key=lambda e: (sum(e), e)):
        if sum(e) < 2:
            continue
        v = None
        for i in range(nv):
            if e[i] > 0:
                rest = tuple(x - (1 if j == i else 0) for j, x in enumerate(e))
                if rest in basis_set:
                    v = tuple(1 if j == i else 0 for j in range(nv))
                    break
        if v is None:
            raise ValueError(f"monomial {e} does not factor inside the basis")
        rest = tuple(a - b for a, b in zip(e, v))
        aff = images[rest].mul_poly(mono(v), b0)
        aff = aff.add(images[v].mul_poly(mono(rest), b0))
        aff = aff.add(_Affine(residual(mono(v), mono(rest))))
        images[e] = aff
        defining[e] = (v, rest)

    def T_n_of(poly):
        acc = _Affine(CPoly.zero(nv))
        for exps, c in poly.terms.items():
            s = c.as_scalar()
            img = images[exps]
            acc = acc.add(
                _Affine(img.const * s, {u: p * s for u, p in img.lin.items()})
            )
        return acc

    system = LinearSystemOverMonomials(len(unknown_index))
    for e1 in basis:
        for e2 in basis:
            if sum(e1) + sum(e2) > degree_bound:
                continue
            prod = b0(mono(e1), mono(e2))
            key = next(iter(prod.terms)) if len(prod.terms) == 1 else None
            if key is not None and defining.get(key) == (e1, e2):
                continue
            expr = T_n_of(prod)
            expr = expr.add(images[e1].mul_poly(mono(e2), b0).neg())
            expr = expr.add(images[e2].mul_poly(mono(e1), b0).neg())
            expr = expr.add(_Affine(residual(mono(e1), mono(e2))).neg())
            if not system.add_affine(expr, tag=(e1, e2)):
                return {
                    "feasible": False,
                    "order": n,
                    "degree_bound": degree_bound,
                    "witness_pair": system.conflict,
                    "unknowns": len(unknown_index),
                }
    solution = system.solve()
    t_n = {}
    for e in basis:
        aff = images[e]
        val = aff.const
        for u, p in aff.lin.items():
            val = val + p * solution[u]
        t_n[e] = val
    return {
        "feasible": True,
        "order": n,
        "degree_bound": degree_bound,
        "operator": t_n,
        "unknowns": len(unknown_index),
        "rank": system.system.rank,
    }


class LinearSystemOverMonomials:
    """Flatten polynomial-valued affine constraints into scalar rows."""

    def __init__(self, nunknowns):
        from .linalg import LinearSystem

        self.system = LinearSystem(nunknowns)
        self.conflict = None

    def add_affine(self, expr: _Affine, tag=None) -> bool:
        support = set(expr.const.terms)
        for p in expr.lin.values():
            support.update(p.terms)
        for exps in sorted(support):
            row = {}
            for u, p in expr.lin.items():
                v = p.coeff(exps).as_scalar()
                if v:
                    row[u] = v
            rhs = -expr.const.coeff(exps).as_scalar()
            if not self.system.add(row, rhs, tag=(tag, exps)):
                self.conflict = self.system.conflict
                return False
        return True

    def solve(self):
        return self.system.solve()
