"""Finite-dimensional Lie algebras over Q, presented by structure constants.

A ``LieAlgebra`` stores a sparse bracket table c^k_ij (meaning
[x_i, x_j] = sum_k c^k_ij x_k) together with optional markings: a
distinguished nilpotent ideal spanned by basis vectors (the unipotent part
of a group's Lie algebra).  Structure constants are user input, so
``validate`` reports every antisymmetry and Jacobi violation at once
instead of failing on the first.

Subspaces are kept in reduced row echelon form, which makes them unique
representatives: two subspaces are equal iff their stored bases are.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .linalg import ZERO, as_fraction


class Subspace:
    """Subspace of Q^n stored by its reduced row echelon basis."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim, vectors=()):
        self.ambient_dim = ambient_dim
        rows = [list(v) for v in vectors]
        if any(len(r) != ambient_dim for r in rows):
            raise linalg.DimensionMismatchError("vector length != ambient dimension")
        reduced, _ = linalg.rref(rows)
        self.basis = tuple(tuple(row) for row in reduced)

    @property
    def dim(self):
        return len(self.basis)

    def is_zero(self):
        return not self.basis

    def contains(self, vector):
        if all(x == 0 for x in vector):
            return True
        stacked = [list(v) for v in self.basis] + [list(vector)]
        return linalg.rank(stacked) == self.dim

    def contains_subspace(self, other):
        return all(self.contains(v) for v in other.basis)

    def intersection(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise linalg.DimensionMismatchError("ambient dimensions differ")
        if self.is_zero() or other.is_zero():
            return Subspace(self.ambient_dim)
        # x^T A = y^T B  <=>  (x, -y) in ker [A^T | B^T]... solve via columns
        a = [list(v) for v in self.basis]
        b = [list(v) for v in other.basis]
        rows = linalg.transpose(a + b)  # columns are basis vectors of both
        combos = linalg.kernel_basis(rows, len(a) + len(b))
        vectors = []
        for combo in combos:
            vec = [ZERO] * self.ambient_dim
            for coeff, basis_vec in zip(combo[: len(a)], a):
                for i, x in enumerate(basis_vec):
                    vec[i] += coeff * x
            vectors.append(vec)
        return Subspace(self.ambient_dim, vectors)

    def sum(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise linalg.DimensionMismatchError("ambient dimensions differ")
        return Subspace(self.ambient_dim, list(self.basis) + list(other.basis))

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim})"


@dataclass
class ValidationReport:
    """All structure-constant violations found in one pass."""

    antisymmetry: list = field(default_factory=list)  # (i, j, k, c_ijk + c_jik)
    jacobi: list = field(default_factory=list)  # (i, j, k, l, residual)
    unipotent_ideal: list = field(default_factory=list)  # human-readable messages

    @property
    def ok(self):
        return not (self.antisymmetry or self.jacobi or self.unipotent_ideal)

    def to_json(self):
        return {
            "valid": self.ok,
            "antisymmetry_violations": [
                {"i": i, "j": j, "k": k, "sum": str(v)} for i, j, k, v in self.antisymmetry
            ],
            "jacobi_violations": [
                {"i": i, "j": j, "k": k, "l": l, "residual": str(v)}
                for i, j, k, l, v in self.jacobi
            ],
            "unipotent_ideal_violations": list(self.unipotent_ideal),
        }


class LieAlgebra:
    """Lie algebra given by sparse structure constants.

    ``brackets`` maps index pairs (i, j) to sparse vectors {k: coefficient}.
    Pairs may be given for i < j only; the antisymmetric completion is
    implied.  Entries with i >= j are kept verbatim so ``validate`` can
    report inconsistent input rather than silently normalizing it.

    ``unipotent`` is an optional sorted tuple of basis indices spanning the
    distinguished nilpotent ideal (the Lie algebra of the unipotent radical
    for group-level input).
    """

    def __init__(self, dim, brackets=None, basis_names=None, unipotent=None):
        self.dim = int(dim)
        if self.dim < 0:
            raise ValueError("negative dimension")
        if basis_names is None:
            basis_names = [f"x{i}" for i in range(self.dim)]
        if len(basis_names) != self.dim:
            raise ValueError("basis_names length != dim")
        self.basis_names = tuple(str(s) for s in basis_names)
        raw = {}
        for (i, j), vec in (brackets or {}).items():
            i, j = int(i), int(j)
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise ValueError(f"bracket index pair ({i},{j}) out of range")
            entry = {}
            for k, c in vec.items():
                k = int(k)
                if not 0 <= k < self.dim:
                    raise ValueError(f"bracket target index {k} out of range")
                c = as_fraction(c)
                if c != 0:
                    entry[k] = c
            raw[(i, j)] = entry
        self._raw = raw
        if unipotent is None:
            self.unipotent = None
        else:
            self.unipotent = tuple(sorted(set(int(i) for i in unipotent)))
            if self.unipotent and not (
                0 <= self.unipotent[0] and self.unipotent[-1] < self.dim
            ):
                raise ValueError("unipotent index out of range")
        self._bracket_cache = {}
        self._center = None
        self._lcs = None

    # -- structure constants -------------------------------------------------

    def bracket_basis(self, i, j):
        """[x_i, x_j] as a sparse vector {k: coefficient}."""
        key = (i, j)
        cached = self._bracket_cache.get(key)
        if cached is not None:
            return cached
        if (i, j) in self._raw:
            vec = dict(self._raw[(i, j)])
        elif (j, i) in self._raw:
            vec = {k: -c for k, c in self._raw[(j, i)].items()}
        else:
            vec = {}
        self._bracket_cache[key] = vec
        return vec

    def structure_constant(self, i, j, k):
        return self.bracket_basis(i, j).get(k, ZERO)

    def commutes(self, i, j):
        return not self.bracket_basis(i, j)

    def bracket(self, x, y):
        """Bracket of two coordinate vectors."""
        if len(x) != self.dim or len(y) != self.dim:
            raise linalg.DimensionMismatchError("vector length != dim")
        out = [ZERO] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                for k, c in self.bracket_basis(i, j).items():
                    out[k] += xi * yj * c
        return tuple(out)

    def basis_vector(self, i):
        return tuple(Fraction(int(j == i)) for j in range(self.dim))

    def full_space(self):
        return Subspace(self.dim, [self.basis_vector(i) for i in range(self.dim)])

    def adjoint_matrix(self, k):
        """Matrix of ad(x_k): column i holds [x_k, x_i]."""
        m = linalg.zeros(self.dim, self.dim)
        for i in range(self.dim):
            for a, c in self.bracket_basis(k, i).items():
                m[a][i] = c
        return m

    # -- validation ----------------------------------------------------------

    def validate(self):
        report = ValidationReport()
        for (i, j) in sorted(self._raw):
            here = self._raw[(i, j)]
            if i == j:
                for k in sorted(here):
                    report.antisymmetry.append((i, j, k, 2 * here[k]))
                continue
            if i > j:
                continue  # checked from the (i < j) side
            mirror = self._raw.get((j, i))
            if mirror is None:
                continue
            for k in sorted(set(here) | set(mirror)):
                s = here.get(k, ZERO) + mirror.get(k, ZERO)
                if s != 0:
                    report.antisymmetry.append((i, j, k, s))
        if not report.antisymmetry:
            n = self.dim
            for i in range(n):
                for j in range(i + 1, n):
                    for k in range(j + 1, n):
                        res = self._jacobi_residual(i, j, k)
                        for l, v in enumerate(res):
                            if v != 0:
                                report.jacobi.append((i, j, k, l, v))
        if self.unipotent is not None:
            u = self.unipotent_subspace()
            for i in range(self.dim):
                for j in self.unipotent:
                    img = self.bracket(self.basis_vector(i), self.basis_vector(j))
                    if not u.contains(img):
                        report.unipotent_ideal.append(
                            f"[{self.basis_names[i]}, {self.basis_names[j]}] leaves the"
                            " distinguished ideal"
                        )
        return report

    def _jacobi_residual(self, i, j, k):
        out = [ZERO] * self.dim
        for pair, third in (((i, j), k), ((j, k), i), ((k, i), j)):
            for m, c in self.bracket_basis(*pair).items():
                for l, c2 in self.bracket_basis(m, third).items():
                    out[l] += c * c2
        return out

    # -- derived structure ---------------------------------------------------

    def center(self):
        """{x : [x, y] = 0 for all y}, from the stacked adjoint kernel."""
        if self._center is None:
            rows = []
            for j in range(self.dim):
                for k in range(self.dim):
                    rows.append([self.structure_constant(i, j, k) for i in range(self.dim)])
            self._center = Subspace(self.dim, linalg.kernel_basis(rows, self.dim))
        return self._center

    def bracket_span(self, a, b):
        """Span of all [u, v] with u in a, v in b."""
        vectors = []
        for u in a.basis:
            for v in b.basis:
                w = self.bracket(u, v)
                if any(x != 0 for x in w):
                    vectors.append(w)
        return Subspace(self.dim, vectors)

    def lower_central_series(self):
        """([g, [g,g], ...] down to stabilization, nilpotency class or None).

        The series list starts at the full algebra and ends with the first
        repeated term (the zero subspace iff the algebra is nilpotent); the
        class is the number of nonzero terms.
        """
        if self._lcs is None:
            series = [self.full_space()]
            while True:
                nxt = self.bracket_span(self.full_space(), series[-1])
                series.append(nxt)
                if nxt == series[-2] or nxt.is_zero():
                    break
            if series[-1].is_zero():
                cls = len(series) - 1 if self.dim > 0 else 0
                if self.dim == 0:
                    series = [self.full_space()]
                self._lcs = (series, cls)
            else:
                self._lcs = (series, None)
        return self._lcs

    def nilpotency_class(self):
        return self.lower_central_series()[1]

    def is_abelian(self):
        return all(
            not self.bracket_basis(i, j)
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
        )

    def is_ideal(self, s):
        full = self.full_space()
        return s.contains_subspace(self.bracket_span(full, s))

    def is_abelian_ideal(self, s):
        """True iff [g, s] is contained in s and [s, s] = 0."""
        if not self.is_ideal(s):
            return False
        return self.bracket_span(s, s).is_zero()

    def unipotent_subspace(self):
        if self.unipotent is None:
            return Subspace(self.dim)
        return Subspace(self.dim, [self.basis_vector(i) for i in self.unipotent])

    def subalgebra_closure(self, vectors):
        """Smallest subalgebra containing the given vectors."""
        current = Subspace(self.dim, vectors)
        while True:
            nxt = current.sum(self.bracket_span(current, current))
            if nxt == current:
                return current
            current = nxt

    def subalgebra_class(self, sub):
        """Nilpotency class of a subalgebra (None if not nilpotent)."""
        if sub.is_zero():
            return 0
        series = [sub]
        while True:
            nxt = self.bracket_span(sub, series[-1])
            if nxt.is_zero():
                return len(series)
            if nxt == series[-1]:
                return None
            series.append(nxt)

    # -- serialization ---------------------------------------------------------

    def to_json(self):
        brackets = {}
        for (i, j) in sorted(self._raw):
            entry = {str(k): str(c) for k, c in sorted(self._raw[(i, j)].items())}
            if entry:
                brackets[f"{i},{j}"] = entry
        out = {
            "dim": self.dim,
            "basis": list(self.basis_names),
            "brackets": brackets,
        }
        if self.unipotent is not None:
            out["unipotent_ideal"] = list(self.unipotent)
        return out

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, basis={list(self.basis_names)})"


class SchemaError(ValueError):
    """Schema violation in JSON input, with a field path for diagnostics."""

    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}")


def _parse_pair(text, path):
    parts = str(text).split(",")
    if len(parts) != 2:
        raise SchemaError(path, f"expected 'i,j', got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise SchemaError(path, f"expected integer pair, got {text!r}") from None


def _parse_rational(value, path):
    if isinstance(value, bool) or isinstance(value, float):
        raise SchemaError(path, f"rationals must be integers or 'p/q' strings, got {value!r}")
    try:
        return Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError):
        raise SchemaError(path, f"invalid rational {value!r}") from None


def lie_from_json(data, path="lie"):
    """Parse the Lie algebra input schema.

    Expected shape: {"dim": n, "basis": [names], "brackets":
    {"i,j": {"k": "p/q", ...}}, "unipotent_ideal": [indices]} with 0-based
    indices, pairs given for i < j only, and rationals as strings or ints.
    """
    if not isinstance(data, dict):
        raise SchemaError(path, "expected an object")
    if "dim" not in data:
        raise SchemaError(f"{path}.dim", "missing")
    dim = data["dim"]
    if not isinstance(dim, int) or dim < 0:
        raise SchemaError(f"{path}.dim", f"expected a nonnegative integer, got {dim!r}")
    names = data.get("basis")
    if names is not None:
        if not isinstance(names, list) or len(names) != dim:
            raise SchemaError(f"{path}.basis", f"expected a list of {dim} names")
    brackets = {}
    for key, entry in (data.get("brackets") or {}).items():
        i, j = _parse_pair(key, f"{path}.brackets[{key!r}]")
        if not (0 <= i < dim and 0 <= j < dim):
            raise SchemaError(f"{path}.brackets[{key!r}]", "index out of range")
        if i >= j:
            raise SchemaError(f"{path}.brackets[{key!r}]", "pairs must satisfy i < j")
        if not isinstance(entry, dict):
            raise SchemaError(f"{path}.brackets[{key!r}]", "expected an object {k: rational}")
        vec = {}
        for k, c in entry.items():
            try:
                ki = int(k)
            except ValueError:
                raise SchemaError(
                    f"{path}.brackets[{key!r}][{k!r}]", "expected an integer index"
                ) from None
            if not 0 <= ki < dim:
                raise SchemaError(f"{path}.brackets[{key!r}][{k!r}]", "index out of range")
            vec[ki] = _parse_rational(c, f"{path}.brackets[{key!r}][{k!r}]")
        brackets[(i, j)] = vec
    unipotent = data.get("unipotent_ideal")
    if unipotent is not None:
        if not isinstance(unipotent, list) or not all(isinstance(i, int) for i in unipotent):
            raise SchemaError(f"{path}.unipotent_ideal", "expected a list of integer indices")
        if any(not 0 <= i < dim for i in unipotent):
            raise SchemaError(f"{path}.unipotent_ideal", "index out of range")
    return LieAlgebra(dim, brackets, basis_names=names, unipotent=unipotent)
