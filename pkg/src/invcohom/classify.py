"""Classification of the invariant second cohomology of connected groups.

For a connected affine algebraic group in characteristic 0 the group of
invariant Hopf 2-cocycle classes is commutative, a direct product of

* Hom(wedge^2 L, k^x) for L the character lattice of the reductive part of
  the center (user input: the finite part of the center is invisible to the
  Lie algebra),
* the additive group (z_r tensor z_u), paired central directions, and
* the additive group of unipotent invariants (wedge^2 g_u)^G.

The classifier computes the last two factors from structure constants and
assembles the first from the lattice.  Only connected input is accepted:
the identification of group invariance with Lie algebra invariance, and the
centrality of the reductive part of the center's action, both need
connectedness.
"""

from dataclasses import dataclass, field
from math import comb

from .abelian import FgAbelianGroup, hom_to_kx, lattice_from_json
from .invariants import WedgeElement, invariant_wedge2, is_minimal, theta_lie
from .lie import LieAlgebra, SchemaError, Subspace, lie_from_json


@dataclass
class GroupInput:
    """Connected-group data: Lie algebra with marked unipotent ideal plus
    the character lattice of the reductive part of the center."""

    lie: LieAlgebra
    z_r_lattice: FgAbelianGroup
    connected: bool = True


@dataclass
class ClassificationReport:
    kx_rank: int
    finite_factors: tuple
    additive_dim: int
    invariant_basis: list = field(default_factory=list)  # basis of (wedge^2 g_u)^G
    mixed_basis: list = field(default_factory=list)  # z_r ^ z_u directions
    bset_summary: list = field(default_factory=list)  # (support dim, minimality)

    @property
    def isomorphism_type(self):
        bits = []
        if self.kx_rank == 1:
            bits.append("(k^x)")
        elif self.kx_rank > 1:
            bits.append(f"(k^x)^{self.kx_rank}")
        bits.extend(f"Z/{d}" for d in self.finite_factors)
        if self.additive_dim == 1:
            bits.append("k")
        elif self.additive_dim > 1:
            bits.append(f"k^{self.additive_dim}")
        return " x ".join(bits) if bits else "trivial"

    def is_trivial(self):
        return self.kx_rank == 0 and not self.finite_factors and self.additive_dim == 0

    def to_json(self):
        return {
            "kx_rank": self.kx_rank,
            "finite_factors": list(self.finite_factors),
            "additive_dim": self.additive_dim,
            "isomorphism_type": self.isomorphism_type,
            "invariant_basis": [r.to_json() for r in self.invariant_basis],
            "mixed_basis": [r.to_json() for r in self.mixed_basis],
            "bset_summary": [
                {"support_dim": d, "minimal": m} for d, m in self.bset_summary
            ],
        }


def _central_complement(g, z, zu):
    """Deterministic basis of a complement of zu inside the center z."""
    kept = []
    span = zu
    for v in z.basis:
        if not span.contains(v):
            kept.append(v)
            span = span.sum(Subspace(g.dim, [v]))
    return kept


def _bset_basis(g, z, zu, invariant_basis):
    mixed = [
        WedgeElement.of_vectors(g, t, u)
        for t in _central_complement(g, z, zu)
        for u in zu.basis
    ]
    return mixed, list(invariant_basis)


def _validated_algebra(gi):
    if not gi.connected:
        raise ValueError("only connected groups are classified")
    g = gi.lie
    report = g.validate()
    if not report.ok:
        raise ValueError("structure constants fail validation; run validate for details")
    gu = g.unipotent_subspace()
    if g.subalgebra_class(gu) is None:
        raise ValueError("the distinguished unipotent ideal is not nilpotent")
    z = g.center()
    zu = z.intersection(gu)
    zr_dim = z.dim - zu.dim
    if zr_dim != gi.z_r_lattice.free_rank:
        raise ValueError(
            f"character lattice has free rank {gi.z_r_lattice.free_rank}, but the"
            f" reductive center has dimension {zr_dim}"
        )
    return g, gu, z, zu, zr_dim


def classify_connected(gi):
    """Assemble the full classification report for a connected group.

    The reductive factor Hom(wedge^2 L, k^x) comes from the lattice alone;
    the additive factor has dimension dim(z_r) dim(z_u) + dim (wedge^2 g_u)^G,
    where the unipotent invariants are recomputed by the linear solver.
    """
    g, gu, z, zu, zr_dim = _validated_algebra(gi)
    invariant_basis = invariant_wedge2(g, gu)
    hom = hom_to_kx(gi.z_r_lattice.wedge_square())
    mixed, unip = _bset_basis(g, z, zu, invariant_basis)
    full = g.full_space()
    summary = [
        (theta_lie(r).support.dim, is_minimal(r, full)) for r in mixed + unip
    ]
    return ClassificationReport(
        kx_rank=hom.kx_rank,
        finite_factors=hom.finite_factors,
        additive_dim=zr_dim * zu.dim + len(invariant_basis),
        invariant_basis=unip,
        mixed_basis=mixed,
        bset_summary=summary,
    )


def bset_elements(gi):
    """The parameterizing basis of the Lie-level pairs (support, form).

    Returns (SupportData, minimality flag) per basis element of the additive
    part; general elements are spanned combinations of these, so the list
    parameterizes the variety rather than enumerating it.  When the additive
    part vanishes only the trivial pair remains.
    """
    g, gu, z, zu, _ = _validated_algebra(gi)
    mixed, unip = _bset_basis(g, z, zu, invariant_wedge2(g, gu))
    basis = mixed + unip
    full = g.full_space()
    if not basis:
        basis = [WedgeElement.zero(g)]
    return [(theta_lie(r), is_minimal(r, full)) for r in basis]


def classify_commutative(lattice, a_r_dim=None, a_u_dim=0, u_action=None):
    """Classification for a commutative group, straight from the formula.

    ``lattice`` is the character lattice of the reductive part, ``a_r_dim``
    and ``a_u_dim`` the torus and vector-group dimensions.  The additive
    dimension is a_r a_u + (a_u choose 2) with no invariance solving, which
    makes this an independent cross-check of classify_connected on
    commutative input.
    """
    if u_action is not None:
        raise ValueError("a commutative group admits no nontrivial unipotent action")
    if a_r_dim is None:
        a_r_dim = lattice.free_rank
    if a_r_dim != lattice.free_rank:
        raise ValueError(
            f"torus dimension {a_r_dim} contradicts the lattice free rank"
            f" {lattice.free_rank}"
        )
    g = LieAlgebra(
        a_r_dim + a_u_dim,
        {},
        basis_names=[f"t{i}" for i in range(a_r_dim)]
        + [f"u{i}" for i in range(a_u_dim)],
        unipotent=range(a_r_dim, a_r_dim + a_u_dim),
    )
    mixed = [
        WedgeElement.basis_wedge(g, i, a_r_dim + j)
        for i in range(a_r_dim)
        for j in range(a_u_dim)
    ]
    unip = [
        WedgeElement.basis_wedge(g, a_r_dim + i, a_r_dim + j)
        for i in range(a_u_dim)
        for j in range(i + 1, a_u_dim)
        if i < j
    ]
    hom = hom_to_kx(lattice.wedge_square())
    full = g.full_space()
    summary = [
        (theta_lie(r).support.dim, is_minimal(r, full)) for r in mixed + unip
    ]
    return ClassificationReport(
        kx_rank=hom.kx_rank,
        finite_factors=hom.finite_factors,
        additive_dim=a_r_dim * a_u_dim + comb(a_u_dim, 2),
        invariant_basis=unip,
        mixed_basis=mixed,
        bset_summary=summary,
    )


def group_input_from_json(data, path="group"):
    """Parse {"lie": {...}, "z_r_lattice": {...}, "connected": true}."""
    if not isinstance(data, dict):
        raise SchemaError(path, "expected an object")
    if "lie" not in data:
        raise SchemaError(f"{path}.lie", "missing")
    lie = lie_from_json(data["lie"], f"{path}.lie")
    if "z_r_lattice" not in data:
        raise SchemaError(f"{path}.z_r_lattice", "missing")
    lattice = lattice_from_json(data["z_r_lattice"], f"{path}.z_r_lattice")
    connected = data.get("connected")
    if connected is not True:
        raise SchemaError(
            f"{path}.connected", "must be true; disconnected groups are out of scope"
        )
    return GroupInput(lie=lie, z_r_lattice=lattice, connected=True)
