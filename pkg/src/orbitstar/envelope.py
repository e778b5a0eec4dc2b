"""The deformed enveloping algebra: words modulo X_i X_j - X_j X_i = h [X_i, X_j].

NCPoly stores linear combinations of generator-index words with Q(i)[h]
coefficients.  An element is canonical when every word is nondecreasing
(ordered-monomial form); normal_form rewrites any element to that basis by
swapping out-of-order adjacent pairs, each swap trading one inversion for an
h-weighted shorter word.  Normal forms of single words are cached on the
algebra, which makes repeated products cheap.
"""

from __future__ import annotations

from .lie import LieAlgebra
from .poly import CPoly
from .scalars import H, H_ONE, HPoly, as_hpoly


def _acc(d, key, val):
    cur = d.get(key)
    new = val if cur is None else cur + val
    if new:
        d[key] = new
    else:
        d.pop(key, None)


def _descent(word, strategy):
    rng = range(len(word) - 1)
    if strategy == "rightmost":
        rng = reversed(rng)
    for k in rng:
        if word[k] > word[k + 1]:
            return k
    return None


def _nf_word(L: LieAlgebra, word, strategy="leftmost"):
    """Canonical terms of a single word, as a dict word -> coefficient."""
    cache = L._nf_cache[strategy]
    hit = cache.get(word)
    if hit is not None:
        return hit
    stack = [word]
    while stack:
        w = stack[-1]
        if w in cache:
            stack.pop()
            continue
        k = _descent(w, strategy)
        if k is None:
            cache[w] = {w: H_ONE}
            stack.pop()
            continue
        j, i = w[k], w[k + 1]
        swapped = w[:k] + (i, j) + w[k + 2:]
        brackets = [
            (w[:k] + (m,) + w[k + 2:], v) for m, v in L.bracket_terms(j, i)
        ]
        missing = [d for d in [swapped] + [t for t, _ in brackets] if d not in cache]
        if missing:
            stack.extend(missing)
            continue
        acc = dict(cache[swapped])
        for wk, v in brackets:
            hv = H * v
            for ww, cc in cache[wk].items():
                _acc(acc, ww, hv * cc)
        cache[w] = acc
        stack.pop()
    return cache[word]


class NCPoly:
    """An element of the deformed enveloping algebra of a Lie algebra."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: LieAlgebra, terms=None):
        self.algebra = algebra
        clean = {}
        for word, coeff in (terms or {}).items():
            c = as_hpoly(coeff)
            if c is None:
                raise TypeError(f"bad coefficient {coeff!r}")
            if not c:
                continue
            word = tuple(word)
            if any(not 0 <= g < algebra.dim for g in word):
                raise ValueError(f"word {word} uses unknown generators")
            clean[word] = c
        self.terms = clean

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, algebra):
        return cls(algebra)

    @classmethod
    def scalar(cls, algebra, c):
        return cls(algebra, {(): as_hpoly(c)})

    @classmethod
    def one(cls, algebra):
        return cls.scalar(algebra, 1)

    @classmethod
    def generator(cls, algebra, i):
        return cls(algebra, {(i,): H_ONE})

    @classmethod
    def word(cls, algebra, indices, coeff=1):
        return cls(algebra, {tuple(indices): as_hpoly(coeff)})

    @classmethod
    def ordered_word(cls, algebra, exps, coeff=1):
        """The nondecreasing word with the given exponent vector."""
        w = tuple(i for i, e in enumerate(exps) for _ in range(e))
        return cls(algebra, {w: as_hpoly(coeff)})

    # -- structure --------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_canonical(self):
        return all(
            all(w[k] <= w[k + 1] for k in range(len(w) - 1)) for w in self.terms
        )

    def _check(self, other):
        if self.algebra is not other.algebra:
            raise ValueError("elements live over different algebras")

    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            other = _as_nc(other, self.algebra)
            if other is None:
                return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.algebra), frozenset(self.terms.items())))

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = _as_nc(other, self.algebra)
        if other is None:
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            _acc(out, w, c)
        return NCPoly(self.algebra, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_nc(other, self.algebra)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_nc(other, self.algebra)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return NCPoly(self.algebra, {w: -c for w, c in self.terms.items()})

    def concat(self, other):
        """The raw word-concatenation product, without normalization."""
        other = _as_nc(other, self.algebra)
        if other is None:
            raise TypeError("cannot concatenate")
        self._check(other)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                _acc(out, w1 + w2, c1 * c2)
        return NCPoly(self.algebra, out)

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            self._check(other)
            out = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    c = c1 * c2
                    for w, cw in _nf_word(self.algebra, w1 + w2).items():
                        _acc(out, w, c * cw)
            return NCPoly(self.algebra, out)
        c = as_hpoly(other)
        if c is None:
            return NotImplemented
        return NCPoly(self.algebra, {w: v * c for w, v in self.terms.items()})

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = NCPoly.one(self.algebra)
        for _ in range(n):
            out = out * self
        return out

    # -- the rewriting kernel ------------------------------------------------
    def normal_form(self, strategy="leftmost"):
        """Rewrite to the ordered-word basis; equal to self modulo the
        commutation ideal, deterministic for a fixed strategy."""
        out = {}
        for word, coeff in self.terms.items():
            for w, cw in _nf_word(self.algebra, word, strategy).items():
                _acc(out, w, coeff * cw)
        return NCPoly(self.algebra, out)

    def commutator(self, other):
        return self * other - other * self

    def is_central(self):
        """True iff the element commutes with every generator."""
        for i in range(self.algebra.dim):
            g = NCPoly.generator(self.algebra, i)
            if not self.commutator(g).is_zero():
                return False
        return True

    # -- grading and specialization -------------------------------------------
    def graded_degree(self):
        """Max over terms of word length + h-degree; None for zero."""
        if not self.terms:
            return None
        return max(len(w) + c.degree for w, c in self.terms.items())

    def is_graded_homogeneous(self):
        """All word-length + h-power contributions share one total degree."""
        degs = {
            len(w) + k
            for w, c in self.terms.items()
            for k, s in enumerate(c.coeffs)
            if s
        }
        return len(degs) <= 1

    def specialize(self, h0):
        """Evaluate every coefficient at h = h0."""
        return NCPoly(
            self.algebra,
            {w: HPoly((c.evaluate(h0),)) for w, c in self.terms.items()},
        )

    def h_coefficient(self, k):
        return NCPoly(
            self.algebra,
            {w: HPoly((c.coeff(k),)) for w, c in self.terms.items()},
        )

    def project_h0(self) -> CPoly:
        """Drop positive h-degrees and read words as commutative monomials."""
        n = self.algebra.dim
        out = {}
        for word, coeff in self.terms.items():
            v = coeff.coeff(0)
            if not v:
                continue
            exps = [0] * n
            for g in word:
                exps[g] += 1
            from .poly import acc_term

            acc_term(out, tuple(exps), HPoly((v,)))
        return CPoly(n, out)

    def word_exps(self):
        """For a canonical element: terms as exponent-vector -> coefficient."""
        n = self.algebra.dim
        out = {}
        for word, coeff in self.terms.items():
            exps = [0] * n
            for g in word:
                exps[g] += 1
            key = tuple(exps)
            if key in out:
                raise ValueError("element is not canonical")
            out[key] = coeff
        return out

    def __repr__(self):
        from .exprs import format_ncpoly

        return format_ncpoly(self)


def _as_nc(x, algebra):
    if isinstance(x, NCPoly):
        return x
    c = as_hpoly(x)
    if c is None:
        return None
    return NCPoly.scalar(algebra, c)


def multiply_at(a: NCPoly, b: NCPoly, h0) -> NCPoly:
    """Product in the algebra specialized at h = h0.

    The rewriting is h-linear, so specializing after the generic product
    computes the product of the specialized algebra.
    """
    return (a * b).specialize(h0)


def substitute_generators(u: NCPoly, images) -> NCPoly:
    """Apply the algebra map sending generator i to images[i].

    The images must satisfy the source bracket relations for this to be a
    homomorphism; no check is made here.
    """
    images = list(images)
    if len(images) != u.algebra.dim:
        raise ValueError("need one image per generator")
    target = images[0].algebra
    out = NCPoly.zero(target)
    for word, coeff in u.terms.items():
        prod = NCPoly.one(target)
        for g in word:
            prod = prod * images[g]
        out = out + prod * coeff
    return out
