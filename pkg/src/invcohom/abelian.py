"""Finitely generated abelian groups and alternating bicharacters.

Groups are kept in invariant-factor form (free rank plus a divisibility
chain), normalized through Smith normal form, so equal groups compare equal:

>>> FgAbelianGroup(0, [2, 3]) == FgAbelianGroup(0, [6])
True
>>> print(FgAbelianGroup(1, [2, 4]).wedge_square())
Z/2 x Z/2 x Z/4

Bicharacter values in k^x are never concrete field elements.  A value is a
pair (exponent of one fixed abstract root of unity, held in Q/Z; integer
exponent vector over formal multiplicatively independent transcendentals
q_1, ..., q_t).  Over an algebraically closed field of characteristic 0 this
captures everything nondegeneracy can see, and it keeps all computations in
exact integer arithmetic.
"""

from fractions import Fraction
from math import comb, gcd, lcm

from . import linalg

_ZERO = Fraction(0)


class FgAbelianGroup:
    """Z^free_rank x Z/d_1 x ... x Z/d_k with d_1 | d_2 | ... and d_i >= 2.

    Any torsion list is accepted and renormalized:

    >>> FgAbelianGroup(0, [4, 6]).invariant_factors
    (2, 12)
    >>> print(FgAbelianGroup(2))
    Z^2
    >>> print(FgAbelianGroup(0))
    trivial
    """

    __slots__ = ("free_rank", "invariant_factors")

    def __init__(self, free_rank=0, torsion=()):
        free_rank = int(free_rank)
        if free_rank < 0:
            raise ValueError("negative free rank")
        orders = []
        for d in torsion:
            d = int(d)
            if d == 0:
                raise ValueError("use free_rank for infinite cyclic factors")
            d = abs(d)
            if d > 1:
                orders.append(d)
        if orders:
            diag = [[orders[i] if i == j else 0 for j in range(len(orders))] for i in range(len(orders))]
            _, d, _ = linalg.smith_normal_form(diag)
            orders = [d[i][i] for i in range(len(orders)) if d[i][i] > 1]
        self.free_rank = free_rank
        self.invariant_factors = tuple(orders)

    @property
    def num_generators(self):
        return self.free_rank + len(self.invariant_factors)

    def generator_orders(self):
        """Order of each generator, 0 meaning infinite, free generators first."""
        return (0,) * self.free_rank + self.invariant_factors

    def is_trivial(self):
        return self.free_rank == 0 and not self.invariant_factors

    def direct_sum(self, other):
        return FgAbelianGroup(
            self.free_rank + other.free_rank,
            self.invariant_factors + other.invariant_factors,
        )

    def tensor(self, other):
        """Tensor product over Z.

        >>> print(FgAbelianGroup(1, [4]).tensor(FgAbelianGroup(1, [6])))
        Z x Z/2 x Z/2 x Z/12
        """
        torsion = []
        torsion.extend(d for d in self.invariant_factors for _ in range(other.free_rank))
        torsion.extend(e for e in other.invariant_factors for _ in range(self.free_rank))
        torsion.extend(
            gcd(d, e) for d in self.invariant_factors for e in other.invariant_factors
        )
        return FgAbelianGroup(self.free_rank * other.free_rank, torsion)

    def wedge_square(self):
        """The exterior square.

        Cyclic factors contribute nothing on their own; the free part gives
        Z^(n choose 2), and every unordered pair of distinct factors
        contributes its tensor product:

        >>> print(FgAbelianGroup(2).wedge_square())
        Z
        >>> FgAbelianGroup(0, [2]).wedge_square().is_trivial()
        True
        >>> print(FgAbelianGroup(1, [6]).wedge_square())
        Z/6
        """
        n = self.free_rank
        torsion = []
        for d in self.invariant_factors:
            torsion.extend([d] * n)
        factors = self.invariant_factors
        for i in range(len(factors)):
            for j in range(i + 1, len(factors)):
                torsion.append(gcd(factors[i], factors[j]))
        return FgAbelianGroup(comb(n, 2), torsion)

    def __eq__(self, other):
        return (
            isinstance(other, FgAbelianGroup)
            and other.free_rank == self.free_rank
            and other.invariant_factors == self.invariant_factors
        )

    def __hash__(self):
        return hash((self.free_rank, self.invariant_factors))

    def __str__(self):
        bits = []
        if self.free_rank == 1:
            bits.append("Z")
        elif self.free_rank > 1:
            bits.append(f"Z^{self.free_rank}")
        bits.extend(f"Z/{d}" for d in self.invariant_factors)
        return " x ".join(bits) if bits else "trivial"

    def __repr__(self):
        return f"FgAbelianGroup({self.free_rank}, {list(self.invariant_factors)})"

    def to_json(self):
        return {"free_rank": self.free_rank, "invariant_factors": list(self.invariant_factors)}


def lattice_from_json(data, path="z_r_lattice"):
    from .lie import SchemaError

    if not isinstance(data, dict):
        raise SchemaError(path, "expected an object")
    free_rank = data.get("free_rank", 0)
    if not isinstance(free_rank, int) or free_rank < 0:
        raise SchemaError(f"{path}.free_rank", f"expected a nonnegative integer, got {free_rank!r}")
    factors = data.get("invariant_factors", [])
    if not isinstance(factors, list) or not all(
        isinstance(d, int) and d >= 1 for d in factors
    ):
        raise SchemaError(f"{path}.invariant_factors", "expected a list of positive integers")
    return FgAbelianGroup(free_rank, factors)


class HomToKx:
    """Hom(L, k^x) for k algebraically closed of characteristic 0.

    Each Z summand contributes one copy of k^x, each Z/d one cyclic factor
    of order d.
    """

    __slots__ = ("kx_rank", "finite_factors")

    def __init__(self, kx_rank, finite_factors):
        self.kx_rank = int(kx_rank)
        self.finite_factors = tuple(finite_factors)

    def __eq__(self, other):
        return (
            isinstance(other, HomToKx)
            and other.kx_rank == self.kx_rank
            and other.finite_factors == self.finite_factors
        )

    def __repr__(self):
        return f"HomToKx(kx_rank={self.kx_rank}, finite_factors={list(self.finite_factors)})"


def hom_to_kx(lattice):
    return HomToKx(lattice.free_rank, lattice.invariant_factors)


class KxValue:
    """Structural element of k^x, written additively.

    ``torsion`` is the exponent of the fixed abstract root of unity, as a
    rational mod 1; ``free`` is the integer exponent vector over the formal
    transcendentals.
    """

    __slots__ = ("torsion", "free")

    def __init__(self, torsion=0, free=()):
        t = Fraction(torsion)
        self.torsion = t - (t.numerator // t.denominator)  # reduce into [0, 1)
        self.free = tuple(int(x) for x in free)

    def is_zero(self):
        return self.torsion == 0 and all(x == 0 for x in self.free)

    def __add__(self, other):
        if len(self.free) != len(other.free):
            raise ValueError("values use different transcendental bases")
        return KxValue(self.torsion + other.torsion, tuple(a + b for a, b in zip(self.free, other.free)))

    def __neg__(self):
        return KxValue(-self.torsion, tuple(-x for x in self.free))

    def __rmul__(self, k):
        k = int(k)
        return KxValue(k * self.torsion, tuple(k * x for x in self.free))

    def __eq__(self, other):
        return (
            isinstance(other, KxValue)
            and other.torsion == self.torsion
            and other.free == self.free
        )

    def __hash__(self):
        return hash((self.torsion, self.free))

    def __repr__(self):
        return f"KxValue({self.torsion}, {list(self.free)})"


class AlternatingBicharacter:
    """Alternating pairing on a f.g. abelian group, valued in k^x.

    Stored by the generator matrix B(e_i, e_j) with free generators first;
    the matrix must be skew with zero diagonal (that is the alternating
    condition, bilinearity does the rest) and torsion-compatible: a
    generator of order d pairs into d-torsion values.
    """

    def __init__(self, domain, num_transcendentals, entries):
        self.domain = domain
        self.num_transcendentals = int(num_transcendentals)
        m = domain.num_generators
        zero = KxValue(0, (0,) * self.num_transcendentals)
        matrix = [[zero] * m for _ in range(m)]
        for (i, j), value in entries.items():
            if not (0 <= i < m and 0 <= j < m) or i == j:
                raise ValueError(f"bad generator pair ({i}, {j})")
            if len(value.free) != self.num_transcendentals:
                raise ValueError("value has the wrong number of transcendental exponents")
            matrix[i][j] = matrix[i][j] + value
            matrix[j][i] = matrix[j][i] + (-value)
        self.matrix = matrix
        orders = domain.generator_orders()
        for i, d in enumerate(orders):
            if d == 0:
                continue
            for j in range(m):
                v = d * matrix[i][j]
                if not v.is_zero():
                    raise ValueError(
                        f"generator {i} has order {d} but d*B(e_{i}, e_{j}) != 1"
                    )

    def value(self, i, j):
        return self.matrix[i][j]

    def is_nondegenerate(self):
        """True iff a |-> B(a, .) has trivial kernel.

        The radical is an integer lattice problem: exponents of the formal
        transcendentals give exact linear conditions, the root-of-unity
        exponents give congruences.  The solution lattice is computed by
        Smith normal form and compared with the relation lattice of the
        group; nondegeneracy is exact equality.
        """
        m = self.domain.num_generators
        if m == 0:
            return True
        orders = self.domain.generator_orders()
        # integer conditions from the transcendental exponents
        rows = []
        for j in range(m):
            for l in range(self.num_transcendentals):
                row = [self.matrix[i][j].free[l] for i in range(m)]
                if any(row):
                    rows.append(row)
        k0 = linalg.integer_kernel_basis(rows, m) if rows else [
            tuple(int(p == i) for p in range(m)) for i in range(m)
        ]
        if not k0:
            return True  # even the relation lattice maps to 0 only trivially
        # congruence conditions from the root-of-unity exponents
        tau = [
            [
                sum((Fraction(vec[i]) * self.matrix[i][j].torsion for i in range(m)), _ZERO)
                for j in range(m)
            ]
            for vec in k0
        ]
        modulus = 1
        for row in tau:
            for x in row:
                modulus = lcm(modulus, x.denominator)
        s = len(k0)
        cond = [[int(tau[p][j] * modulus) for p in range(s)] for j in range(m)]
        _, d, v = linalg.smith_normal_form(cond)
        stretch = []
        for k in range(s):
            dk = d[k][k] if k < len(d) else 0
            stretch.append(modulus // gcd(dk, modulus) if dk != 0 else 1)
        # lattice of radical representatives, in ambient coordinates
        for k in range(s):
            coeffs = [v[p][k] * stretch[k] for p in range(s)]
            vec = [0] * m
            for p, c in enumerate(coeffs):
                for i in range(m):
                    vec[i] += c * k0[p][i]
            for i, x in enumerate(vec):
                if orders[i] == 0:
                    if x != 0:
                        return False
                elif x % orders[i] != 0:
                    return False
        return True

    def change_generators(self, u):
        """Pull back along the endomorphism sending f_j to sum_i u[i][j] e_i.

        The matrix must define a group automorphism (columns of the right
        orders); the pulled-back pairing is alternating again, and
        nondegeneracy is invariant under this operation.
        """
        m = self.domain.num_generators
        orders = self.domain.generator_orders()
        for j in range(m):
            d = orders[j]
            if d != 0:
                for i in range(m):
                    if orders[i] == 0 and u[i][j] != 0:
                        raise ValueError("automorphism maps a torsion generator to infinite order")
                    if orders[i] != 0 and (d * u[i][j]) % orders[i] != 0:
                        raise ValueError("column order incompatible with the group")
        entries = {}
        zero = KxValue(0, (0,) * self.num_transcendentals)
        for a in range(m):
            for b in range(a + 1, m):
                acc = zero
                for i in range(m):
                    if u[i][a] == 0:
                        continue
                    for j in range(m):
                        if u[j][b] == 0:
                            continue
                        acc = acc + (u[i][a] * u[j][b]) * self.matrix[i][j]
                if not acc.is_zero():
                    entries[(a, b)] = acc
        return AlternatingBicharacter(self.domain, self.num_transcendentals, entries)


def standard_nondegenerate_example(n):
    """The pairing on Z^2 x Z/n with B(x, y) = q and B(x, a) = zeta_n.

    Nondegenerate for every n >= 2 even though n is not a perfect square.
    """
    domain = FgAbelianGroup(2, [n])
    return AlternatingBicharacter(
        domain,
        1,
        {
            (0, 1): KxValue(0, (1,)),
            (0, 2): KxValue(Fraction(1, n), (0,)),
        },
    )


def zero_bicharacter(domain):
    return AlternatingBicharacter(domain, 0, {})
