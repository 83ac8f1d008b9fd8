"""Invariant elements of wedge^2 g and their attached data.

The objects here are skew elements r in wedge^2 g, encoded by their upper
coefficients {(i, j): r_ij, i < j} with r = sum r_ij x_i ^ x_j and
x ^ y := x (x) y - y (x) x.  The module computes:

* the space of ad-invariant elements of wedge^2 m for an ideal m (invariance
  is the linear condition [x (x) 1 + 1 (x) x, r] = 0 for every generator x);
* the classical Yang-Baxter residual CYB(r) in g (x) g (x) g;
* the support of r (span of its components) and the symplectic matrix
  obtained by inverting r on its support, together with the inverse
  construction, which realizes the bijection between invariant elements and
  pairs (abelian ideal, invariant symplectic form);
* the degree-3 central element z with Delta(z) - z (x) 1 - 1 (x) z = [r, s]
  for invariant r, s, via exact arithmetic in the enveloping algebra;
* the splitting of a mixed invariant element into a central-times-center
  block and a purely unipotent block.

Wedge coordinates are always ordered lexicographically over pairs i < j and
bases are kept in reduced row echelon form, so outputs are reproducible.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

from . import linalg
from .lie import LieAlgebra, Subspace
from .linalg import ZERO, as_fraction


class NotInvariantError(ValueError):
    """The wedge element is not ad-invariant but the operation requires it."""


class NotIdealError(ValueError):
    """The given subspace is not an ideal of the ambient algebra."""


def wedge_pairs(n):
    return list(combinations(range(n), 2))


class WedgeElement:
    """Element of wedge^2 g as sparse upper coefficients {(i, j): c, i < j}."""

    __slots__ = ("ambient", "terms")

    def __init__(self, ambient, terms=None):
        if not isinstance(ambient, LieAlgebra):
            raise TypeError("ambient must be a LieAlgebra")
        self.ambient = ambient
        clean = {}
        for (i, j), c in (terms or {}).items():
            c = as_fraction(c)
            if c == 0:
                continue
            if i == j:
                raise ValueError(f"diagonal wedge index ({i},{i})")
            if i > j:
                i, j, c = j, i, -c
            if not 0 <= i < j < ambient.dim:
                raise ValueError(f"wedge index ({i},{j}) out of range")
            clean[(i, j)] = clean.get((i, j), ZERO) + c
        self.terms = {k: v for k, v in clean.items() if v != 0}

    @classmethod
    def basis_wedge(cls, ambient, i, j):
        return cls(ambient, {(i, j): Fraction(1)})

    @classmethod
    def zero(cls, ambient):
        return cls(ambient, {})

    @classmethod
    def of_vectors(cls, ambient, u, v):
        """u ^ v for arbitrary coordinate vectors."""
        terms = {}
        for i in range(ambient.dim):
            for j in range(i + 1, ambient.dim):
                c = u[i] * v[j] - u[j] * v[i]
                if c != 0:
                    terms[(i, j)] = as_fraction(c)
        return cls(ambient, terms)

    def coeff(self, i, j):
        if i == j:
            return ZERO
        if i < j:
            return self.terms.get((i, j), ZERO)
        return -self.terms.get((j, i), ZERO)

    def is_zero(self):
        return not self.terms

    def matrix(self):
        n = self.ambient.dim
        m = linalg.zeros(n, n)
        for (i, j), c in self.terms.items():
            m[i][j] = c
            m[j][i] = -c
        return m

    def full_terms(self):
        """Coefficients over all ordered pairs (i, j), i != j."""
        out = {}
        for (i, j), c in self.terms.items():
            out[(i, j)] = c
            out[(j, i)] = -c
        return out

    def coords(self):
        """Coordinate vector over the lexicographic wedge pairs."""
        return tuple(self.terms.get(p, ZERO) for p in wedge_pairs(self.ambient.dim))

    @classmethod
    def from_coords(cls, ambient, vec):
        pairs = wedge_pairs(ambient.dim)
        if len(vec) != len(pairs):
            raise linalg.DimensionMismatchError("wedge coordinate length mismatch")
        return cls(ambient, {p: c for p, c in zip(pairs, vec) if c != 0})

    def letters(self):
        out = set()
        for (i, j) in self.terms:
            out.add(i)
            out.add(j)
        return out

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, ZERO) + c
        return WedgeElement(self.ambient, terms)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        scalar = as_fraction(scalar)
        return WedgeElement(self.ambient, {k: scalar * c for k, c in self.terms.items()})

    def __neg__(self):
        return (-1) * self

    def __eq__(self, other):
        return (
            isinstance(other, WedgeElement)
            and other.ambient is self.ambient
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((id(self.ambient), tuple(sorted(self.terms.items()))))

    def _check(self, other):
        if not isinstance(other, WedgeElement) or other.ambient is not self.ambient:
            raise ValueError("wedge elements live over different algebras")

    def to_json(self):
        return {"terms": {f"{i},{j}": str(c) for (i, j), c in sorted(self.terms.items())}}

    def __repr__(self):
        names = self.ambient.basis_names
        if not self.terms:
            return "0"
        bits = []
        for (i, j), c in sorted(self.terms.items()):
            head = "" if c == 1 else ("-" if c == -1 else f"({c})*")
            bits.append(f"{head}{names[i]}^{names[j]}")
        return " + ".join(bits).replace("+ -", "- ")


class Tensor3:
    """Sparse element of g (x) g (x) g."""

    __slots__ = ("ambient", "terms")

    def __init__(self, ambient, terms=None):
        self.ambient = ambient
        self.terms = {k: as_fraction(v) for k, v in (terms or {}).items() if v != 0}

    def is_zero(self):
        return not self.terms

    def to_json(self):
        return {
            "terms": {f"{i},{j},{k}": str(c) for (i, j, k), c in sorted(self.terms.items())}
        }

    def __eq__(self, other):
        return (
            isinstance(other, Tensor3)
            and other.ambient is self.ambient
            and other.terms == self.terms
        )

    def __repr__(self):
        return f"Tensor3({len(self.terms)} terms)"


def wedge_from_json(ambient, data, path="wedge"):
    from .lie import SchemaError, _parse_pair, _parse_rational

    if not isinstance(data, dict) or "terms" not in data:
        raise SchemaError(path, "expected an object with a 'terms' field")
    terms = {}
    for key, val in data["terms"].items():
        i, j = _parse_pair(key, f"{path}.terms[{key!r}]")
        if not (0 <= i < ambient.dim and 0 <= j < ambient.dim and i < j):
            raise SchemaError(f"{path}.terms[{key!r}]", "expected indices with i < j in range")
        terms[(i, j)] = _parse_rational(val, f"{path}.terms[{key!r}]")
    return WedgeElement(ambient, terms)


# -- invariance ---------------------------------------------------------------


def invariance_defect_matrix(r, k):
    """The skew matrix of [x_k (x) 1 + 1 (x) x_k, r]."""
    g = r.ambient
    n = g.dim
    m = linalg.zeros(n, n)
    for (p, q), coeff in r.full_terms().items():
        for c, v in g.bracket_basis(k, p).items():
            m[c][q] += coeff * v
        for c, v in g.bracket_basis(k, q).items():
            m[p][c] += coeff * v
    return m


def is_invariant(r):
    g = r.ambient
    return all(
        all(all(v == 0 for v in row) for row in invariance_defect_matrix(r, k))
        for k in range(g.dim)
    )


def _require_invariant(r, name="r"):
    if not is_invariant(r):
        raise NotInvariantError(f"{name} is not an invariant wedge element")


def _invariance_matrix(g):
    """Rows of the invariance condition over wedge coordinates.

    One row per (generator k, target pair a < b); the column for wedge
    coordinate (p, q) holds the (a, b) entry of the defect of x_p ^ x_q
    under x_k.
    """
    n = g.dim
    pairs = wedge_pairs(n)
    rows = []
    for k in range(n):
        defects = [invariance_defect_matrix(WedgeElement.basis_wedge(g, p, q), k) for p, q in pairs]
        for a in range(n):
            for b in range(a + 1, n):
                row = [d[a][b] for d in defects]
                if any(v != 0 for v in row):
                    rows.append(row)
    return rows


def invariant_wedge2(g, within=None):
    """Echelonized basis of {r in wedge^2 m : [Delta(x), r] = 0 for all x in g}.

    ``within`` must be an ideal of g (defaults to all of g); raises
    NotIdealError otherwise.  The output is the reduced row echelon basis
    over lexicographic wedge coordinates, so runs are reproducible and two
    equal spaces produce identical bases.
    """
    if within is None:
        within = g.full_space()
    if not g.is_ideal(within):
        raise NotIdealError("invariant elements are only computed inside an ideal")
    pairs = wedge_pairs(g.dim)
    sub_wedges = [
        WedgeElement.of_vectors(g, u, v).coords()
        for u, v in combinations(within.basis, 2)
    ]
    if not sub_wedges:
        return []
    a = _invariance_matrix(g)
    # restrict the condition matrix to the wedge^2(within) block
    restricted = linalg.matmul(a, linalg.transpose(sub_wedges)) if a else []
    kernel = linalg.kernel_basis(restricted, len(sub_wedges))
    vectors = []
    for combo in kernel:
        vec = [ZERO] * len(pairs)
        for t, wedge in zip(combo, sub_wedges):
            if t != 0:
                for idx, c in enumerate(wedge):
                    vec[idx] += t * c
        vectors.append(vec)
    reduced, _ = linalg.rref(vectors)
    return [WedgeElement.from_coords(g, row) for row in reduced]


# -- classical Yang-Baxter ----------------------------------------------------


def cyb_residual(r):
    """CYB(r) = [r_12, r_13] + [r_12, r_23] + [r_13, r_23] in g (x) g (x) g."""
    g = r.ambient
    full = r.full_terms()
    out = {}

    def bump(key, val):
        acc = out.get(key, ZERO) + val
        if acc == 0:
            out.pop(key, None)
        else:
            out[key] = acc

    for (i, j), cij in full.items():
        for (k, l), ckl in full.items():
            prod = cij * ckl
            for a, c in g.bracket_basis(i, k).items():
                bump((a, j, l), prod * c)
            for a, c in g.bracket_basis(j, k).items():
                bump((i, a, l), prod * c)
            for a, c in g.bracket_basis(j, l).items():
                bump((i, k, a), prod * c)
    return Tensor3(g, out)


def support(r):
    """Span of the components of r (row space of its coefficient matrix)."""
    return Subspace(r.ambient.dim, r.matrix())


def components_commute(r):
    """True iff the span of the components of r is an abelian subalgebra."""
    g = r.ambient
    basis = support(r).basis
    return all(
        all(v == 0 for v in g.bracket(u, w)) for u, w in combinations(basis, 2)
    )


def is_minimal(r, ambient):
    """True iff the support of r is the whole given subspace."""
    return support(r) == ambient


@dataclass
class SupportData:
    """An abelian ideal together with the symplectic matrix on its basis."""

    support: Subspace
    omega: tuple  # tuple of tuples, dim x dim over the support basis

    def to_json(self):
        return {
            "support_basis": [[str(x) for x in v] for v in self.support.basis],
            "dimension": self.support.dim,
            "omega": [[str(x) for x in row] for row in self.omega],
        }


def _pivot_columns(sub):
    return [next(i for i, x in enumerate(row) if x != 0) for row in sub.basis]


def theta_lie(r):
    """(support, omega) for an invariant r, with omega the inverse of r there.

    Requires r invariant; the support of an invariant element is always an
    abelian ideal carrying a non-singular restriction, and both facts are
    re-checked here rather than assumed.
    """
    _require_invariant(r)
    g = r.ambient
    h = support(r)
    if not g.is_abelian_ideal(h):
        raise RuntimeError(
            "internal inconsistency: the support of an invariant element must be"
            " an abelian ideal"
        )
    if h.is_zero():
        return SupportData(h, ())
    pivots = _pivot_columns(h)
    m = r.matrix()
    rho = [[m[p][q] for q in pivots] for p in pivots]
    omega = linalg.invert(rho)  # non-singular since the support is the row space
    return SupportData(h, tuple(tuple(row) for row in omega))


def wedge_from_symplectic(g, h, omega):
    """Inverse direction: (abelian ideal h, omega) -> omega^{-1} in wedge^2 h."""
    rho = linalg.invert([list(row) for row in omega])
    basis = [list(v) for v in h.basis]
    if len(basis) != len(rho):
        raise linalg.DimensionMismatchError("omega size != support dimension")
    coeffs = linalg.matmul(linalg.matmul(linalg.transpose(basis), rho), basis)
    terms = {}
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            if coeffs[i][j] != 0:
                terms[(i, j)] = coeffs[i][j]
    return WedgeElement(g, terms)


def check_symplectic_cocycle(g, omega, h):
    """Check omega([x,y],z) + omega([z,x],y) + omega([y,z],x) = 0 on h.

    ``omega`` is a skew non-singular matrix over the basis of h; h must be a
    subalgebra so the brackets can be re-expressed in its basis.  The
    identity is trilinear and alternating, so distinct basis triples
    suffice.
    """
    m = h.dim
    if len(omega) != m or any(len(row) != m for row in omega):
        raise linalg.DimensionMismatchError("omega shape != support dimension")
    omega = [[as_fraction(v) for v in row] for row in omega]
    for i in range(m):
        for j in range(m):
            if omega[i][j] != -omega[j][i]:
                raise ValueError("omega is not skew-symmetric")
    try:
        linalg.invert(omega)
    except linalg.SingularMatrixError:
        raise ValueError("omega is degenerate") from None
    pivots = _pivot_columns(h)

    def in_h_coords(vec):
        coords = [vec[p] for p in pivots]
        recon = [ZERO] * g.dim
        for t, basis_vec in zip(coords, h.basis):
            for idx, x in enumerate(basis_vec):
                recon[idx] += t * x
        if tuple(recon) != tuple(vec):
            raise ValueError("h is not a subalgebra: a bracket leaves it")
        return coords

    def om(u_coords, b):
        return sum((u * omega[a][b] for a, u in enumerate(u_coords)), ZERO)

    basis = h.basis
    for p, q, s in combinations(range(m), 3):
        t = (
            om(in_h_coords(g.bracket(basis[p], basis[q])), s)
            + om(in_h_coords(g.bracket(basis[s], basis[p])), q)
            + om(in_h_coords(g.bracket(basis[q], basis[s])), p)
        )
        if t != 0:
            return False
    if m == 2:
        # a single triple type (p, q, p) survives skewness only trivially;
        # nothing to check beyond subalgebra containment
        for p, q in combinations(range(m), 2):
            in_h_coords(g.bracket(basis[p], basis[q]))
    return True


# -- the degree-3 central element ---------------------------------------------


@dataclass
class CentralElementData:
    """z with Delta(z) - z (x) 1 - 1 (x) z = [r, s], plus the verified data."""

    z: object  # PBWTensor with one factor
    c_symmetric: dict  # sorted index triple -> coefficient, totally symmetric
    bracket_rs: object  # PBWTensor with two factors, the commutator [r, s]
    delta_residual: object  # Delta(z) - z(x)1 - 1(x)z - [r, s]; must be zero

    @property
    def identity_holds(self):
        return self.delta_residual.is_zero()


def central_element_z(r, s):
    """Compute z = (1/6) mult([r, s]) and verify its defining identity.

    Both inputs must be invariant; the commutator [r, s] is computed exactly
    in U(g) (x) U(g), the coefficients c_ijk of its degree-(1,2) part are
    extracted and checked to be totally symmetric, and the reconstruction
    Delta(z) - z (x) 1 - 1 (x) z is compared to [r, s] coefficient by
    coefficient.  A symmetry or reconstruction failure raises, since it
    cannot occur for invariant inputs.
    """
    from . import pbw

    _require_invariant(r, "r")
    _require_invariant(s, "s")
    g = r.ambient
    ctx = pbw.PBWContext(g)
    rt = pbw.tensor_from_wedge(ctx, r)
    st = pbw.tensor_from_wedge(ctx, s)
    b = rt @ st - st @ rt

    candidates = {}
    for (m1, m2), coeff in b.terms.items():
        d1, d2 = sum(m1), sum(m2)
        if {d1, d2} != {1, 2}:
            raise ValueError(
                "internal inconsistency: [r, s] has a term of bidegree"
                f" ({d1},{d2}); expected (1,2) and (2,1) only"
            )
        single, double = (m1, m2) if d1 == 1 else (m2, m1)
        k = next(i for i, e in enumerate(single) if e)
        pair = []
        for i, e in enumerate(double):
            pair.extend([i] * e)
        i, j = pair
        value = coeff if i == j else coeff / 2
        key = tuple(sorted((i, j, k)))
        candidates.setdefault(key, set()).add(value)
    for key, values in candidates.items():
        if len(values) != 1:
            raise ValueError(f"internal inconsistency: c_{key} is not symmetric")
    c_sym = {key: values.pop() for key, values in sorted(candidates.items())}

    # rebuild sum c_ijk (x_k (x) x_i x_j + x_i x_j (x) x_k) and compare
    rebuilt = {}
    for key, c in c_sym.items():
        for i, j, k in set(permutations(key)):
            single = pbw.unit_monomial(g.dim, k)
            double = tuple(
                (1 if idx == i else 0) + (1 if idx == j else 0) for idx in range(g.dim)
            )
            for tkey in ((single, double), (double, single)):
                rebuilt[tkey] = rebuilt.get(tkey, ZERO) + c
    rebuilt = {k: v for k, v in rebuilt.items() if v != 0}
    if rebuilt != b.terms:
        raise ValueError("internal inconsistency: symmetric reconstruction of [r, s] failed")

    z = Fraction(1, 6) * pbw.mult_components(b)
    delta_res = (
        pbw.coproduct(z)
        - pbw.tensor_times_unit(z)
        - pbw.unit_times_tensor(z)
        - b
    )
    return CentralElementData(z=z, c_symmetric=c_sym, bracket_rs=b, delta_residual=delta_res)


# -- mixed splitting ----------------------------------------------------------


def split_mixed_invariant(g, r):
    """Split an invariant r in g ^ g_u into mixed and unipotent parts.

    Requires: the unmarked basis vectors span a central complement of the
    distinguished ideal g_u, and r has no component in wedge^2 of that
    complement.  Returns (r_mixed, r_unipotent) where the mixed part pairs
    central directions with central elements of g_u and the unipotent part
    is invariant under g_u; both containments are verified.
    """
    if g.unipotent is None:
        raise ValueError("the algebra has no distinguished unipotent ideal")
    flagged = set(g.unipotent)
    unflagged = [i for i in range(g.dim) if i not in flagged]
    for i in unflagged:
        for j in range(g.dim):
            if g.bracket_basis(i, j):
                raise ValueError(
                    f"basis vector {g.basis_names[i]} outside the unipotent ideal is not central"
                )
    for (i, j) in r.terms:
        if i not in flagged and j not in flagged:
            raise ValueError("r has a component outside g ^ g_u")
    _require_invariant(r)

    mixed = {}
    unip = {}
    for (i, j), c in r.terms.items():
        if i in flagged and j in flagged:
            unip[(i, j)] = c
        else:
            mixed[(i, j)] = c
    r_mixed = WedgeElement(g, mixed)
    r_unip = WedgeElement(g, unip)

    # mixed legs must be central in g_u
    rows = []
    for j in sorted(flagged):
        for k in range(g.dim):
            rows.append([g.structure_constant(i, j, k) for i in sorted(flagged)])
    center_u = Subspace(len(flagged), linalg.kernel_basis(rows, len(flagged)))
    order = sorted(flagged)
    for i in unflagged:
        leg = [r_mixed.coeff(i, j) for j in order]
        if any(x != 0 for x in leg) and not center_u.contains(leg):
            raise ValueError(
                "mixed part does not land in the center of the unipotent ideal"
            )

    for k in sorted(flagged):
        defect = invariance_defect_matrix(r_unip, k)
        if any(v != 0 for row in defect for v in row):
            raise ValueError("unipotent part is not invariant under the unipotent ideal")
    return r_mixed, r_unip
