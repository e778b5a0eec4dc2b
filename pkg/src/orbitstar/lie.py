"""Lie algebras presented by structure constants over Q(i).

A LieAlgebra stores the bracket table [X_i, X_j] = sum_k c[i][j][k] X_k.
Antisymmetry and the Jacobi identity are enforced at construction, so every
instance in circulation is a genuine Lie algebra.
"""

from __future__ import annotations

import json

from . import linalg
from .scalars import GR_ZERO, GaussianRational, as_gauss

_RESERVED_VARS = {"h", "i"}


def _constants_from(c):
    """Normalize nested structure constants into a dense scalar cube."""
    n = len(c)
    cube = []
    for i in range(n):
        plane = []
        for j in range(n):
            row = []
            for k in range(n):
                v = as_gauss(c[i][j][k])
                if v is None:
                    raise TypeError(f"bad structure constant c[{i}][{j}][{k}]")
                row.append(v)
            plane.append(tuple(row))
        cube.append(tuple(plane))
    return tuple(cube)


def is_antisymmetric(c) -> bool:
    n = len(c)
    return all(
        c[i][j][k] == -c[j][i][k]
        for i in range(n)
        for j in range(n)
        for k in range(n)
    )


def check_jacobi(c) -> bool:
    """True iff the Jacobi identity holds; expects antisymmetry already."""
    if isinstance(c, LieAlgebra):
        c = c.c
    n = len(c)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    s = GR_ZERO
                    for m in range(n):
                        s = s + c[i][j][m] * c[m][k][l]
                        s = s + c[j][k][m] * c[m][i][l]
                        s = s + c[k][i][m] * c[m][j][l]
                    if s:
                        return False
    return True


def _default_varnames(names):
    vars_ = tuple(name.lower() for name in names)
    if len(set(vars_)) != len(vars_) or _RESERVED_VARS & set(vars_):
        return tuple(f"x{i}" for i in range(len(names)))
    return vars_


class LieAlgebra:
    """A finite-dimensional Lie algebra given by its structure constants.

    names label the generators on the noncommutative side; varnames label
    the corresponding commutative coordinates (lowercased names, unless that
    would collide with the reserved symbols h and i).
    """

    def __init__(self, names, c, varnames=None):
        self.names = tuple(str(x) for x in names)
        self.dim = len(self.names)
        self.c = _constants_from(c)
        if len(self.c) != self.dim:
            raise ValueError("structure constant table does not match dim")
        if not is_antisymmetric(self.c):
            raise ValueError("structure constants are not antisymmetric")
        if not check_jacobi(self.c):
            raise ValueError("Jacobi identity fails")
        self.varnames = tuple(varnames) if varnames else _default_varnames(self.names)
        if len(self.varnames) != self.dim:
            raise ValueError("varnames length does not match dim")
        # nonzero bracket components, precomputed for the rewriting kernel
        self._bracket_nz = tuple(
            tuple(
                tuple((k, self.c[i][j][k]) for k in range(self.dim) if self.c[i][j][k])
                for j in range(self.dim)
            )
            for i in range(self.dim)
        )
        # normal-form caches, keyed by rewriting strategy then word
        self._nf_cache = {"leftmost": {}, "rightmost": {}}
        self._sym_cache = {}

    def bracket_terms(self, i, j):
        """Nonzero components of [X_i, X_j] as (k, coefficient) pairs."""
        return self._bracket_nz[i][j]

    def index(self, name) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown generator {name!r}") from None

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, names={self.names})"


class BasisChange:
    """An invertible change of basis; column j holds the j-th new generator
    expressed in the old basis."""

    def __init__(self, matrix):
        self.matrix = linalg.mat(matrix)
        n = len(self.matrix)
        if any(len(row) != n for row in self.matrix):
            raise ValueError("basis-change matrix must be square")
        inv = linalg.invert(self.matrix)
        if inv is None:
            raise ValueError("basis-change matrix is singular")
        self.inverse = inv

    @property
    def dim(self):
        return len(self.matrix)


def change_basis(L: LieAlgebra, B: BasisChange, names=None, varnames=None) -> LieAlgebra:
    """Transport structure constants along Y_j = sum_i B[i][j] X_i."""
    if B.dim != L.dim:
        raise ValueError("basis change dimension mismatch")
    n = L.dim
    M, Minv = B.matrix, B.inverse
    c = [[[GR_ZERO] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            # [Y_i, Y_j] in the old basis, then re-express through Minv
            old = [GR_ZERO] * n
            for a in range(n):
                if not M[a][i]:
                    continue
                for b in range(n):
                    f = M[a][i] * M[b][j]
                    if not f:
                        continue
                    for k, v in L.bracket_terms(a, b):
                        old[k] = old[k] + f * v
            for l in range(n):
                s = GR_ZERO
                for k in range(n):
                    s = s + Minv[l][k] * old[k]
                c[i][j][l] = s
    new_names = names or tuple(f"Y{i}" for i in range(n))
    return LieAlgebra(new_names, c, varnames=varnames)


def killing_form(L: LieAlgebra):
    """The matrix K[i][j] = sum_{k,l} c[i][k][l] * c[j][l][k]."""
    n = L.dim
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            s = GR_ZERO
            for k in range(n):
                for l in range(n):
                    s = s + L.c[i][k][l] * L.c[j][l][k]
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def killing_det(L: LieAlgebra) -> GaussianRational:
    return linalg.det(killing_form(L))


def is_semisimple(L: LieAlgebra) -> bool:
    """Cartan's criterion: the Killing form is nondegenerate."""
    return bool(killing_det(L))


def adjoint_rep(L: LieAlgebra):
    """The adjoint representation (ad_i)[k][j] = c[i][j][k]."""
    from .reps import MatrixRep

    n = L.dim
    mats = [
        tuple(tuple(L.c[i][j][k] for j in range(n)) for k in range(n))
        for i in range(n)
    ]
    return MatrixRep(n, mats)


_SU2_TABLE = {(0, 1): [(2, 1)], (1, 2): [(0, 1)], (2, 0): [(1, 1)]}
# triangular order F < H < E so that normal ordering puts E rightmost
_SL2_TABLE = {(0, 1): [(0, 2)], (1, 2): [(2, 2)], (2, 0): [(1, 1)]}


def _table_to_constants(n, table):
    c = [[[GR_ZERO] * n for _ in range(n)] for _ in range(n)]
    for (i, j), terms in table.items():
        for k, v in terms:
            g = as_gauss(v)
            c[i][j][k] = g
            c[j][i][k] = -g
    return c


_PREDEFINED = {}


def predefined(name: str) -> LieAlgebra:
    """Built-in presentations: "su2" (X,Y,Z) and "sl2" (F,H,E).

    Instances are cached, so elements built in different places share the
    same algebra object (and its normal-form cache).
    """
    hit = _PREDEFINED.get(name)
    if hit is not None:
        return hit
    if name == "su2":
        L = LieAlgebra(("X", "Y", "Z"), _table_to_constants(3, _SU2_TABLE))
    elif name == "sl2":
        L = LieAlgebra(("F", "H", "E"), _table_to_constants(3, _SL2_TABLE))
    else:
        raise ValueError(f"unknown algebra {name!r}")
    _PREDEFINED[name] = L
    return L


def algebra_from_json(data) -> LieAlgebra:
    """Load an algebra description.

    Accepts {"dim": n, "names": [...], "brackets": [[i, j, [[k, coeff], ...]],
    ...]} with 0-based indices listing only i < j pairs; the loader
    antisymmetrizes and validates.  Coefficients are scalar expressions such
    as "1", "-1/2" or "i".
    """
    from .exprs import parse_scalar

    if isinstance(data, str):
        data = json.loads(data)
    n = int(data["dim"])
    names = data.get("names") or [f"X{i}" for i in range(n)]
    if len(names) != n:
        raise ValueError("names length does not match dim")
    c = [[[GR_ZERO] * n for _ in range(n)] for _ in range(n)]
    for entry in data.get("brackets", ()):
        i, j, terms = entry
        i, j = int(i), int(j)
        if not 0 <= i < j < n:
            raise ValueError(f"bracket pair ({i}, {j}) must satisfy 0 <= i < j < dim")
        for k, coeff in terms:
            k = int(k)
            v = parse_scalar(str(coeff))
            c[i][j][k] = v
            c[j][i][k] = -v
    return LieAlgebra(names, c, varnames=data.get("varnames"))
