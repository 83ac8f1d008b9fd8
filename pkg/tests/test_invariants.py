from fractions import Fraction

import pytest

from invcohom.invariants import (
    NotIdealError,
    NotInvariantError,
    Tensor3,
    WedgeElement,
    central_element_z,
    check_symplectic_cocycle,
    components_commute,
    cyb_residual,
    invariant_wedge2,
    is_invariant,
    is_minimal,
    split_mixed_invariant,
    support,
    theta_lie,
    wedge_from_json,
    wedge_from_symplectic,
)
from invcohom.lie import LieAlgebra, Subspace

F = Fraction


def heisenberg():
    return LieAlgebra(3, {(0, 1): {2: 1}}, basis_names=["a", "b", "c"])


def sl2():
    return LieAlgebra(
        3,
        {(0, 2): {1: 1}, (1, 0): {0: 2}, (1, 2): {2: -2}},
        basis_names=["e", "h", "f"],
    )


def abelian(n):
    return LieAlgebra(n, {})


def torus_heisenberg():
    # one central direction t plus the Heisenberg algebra on (a, b, c)
    return LieAlgebra(
        4, {(1, 2): {3: 1}}, basis_names=["t", "a", "b", "c"], unipotent=[1, 2, 3]
    )


# -- invariant basis ----------------------------------------------------------


def test_heisenberg_invariants_match_expected_basis():
    g = heisenberg()
    basis = invariant_wedge2(g)
    assert basis == [
        WedgeElement(g, {(0, 2): 1}),
        WedgeElement(g, {(1, 2): 1}),
    ]


def test_abelian_invariants_full_wedge():
    for n in range(1, 6):
        assert len(invariant_wedge2(abelian(n))) == n * (n - 1) // 2


def test_sl2_invariants_empty():
    assert invariant_wedge2(sl2()) == []


def test_invariants_within_non_ideal_rejected():
    g = heisenberg()
    not_ideal = Subspace(3, [g.basis_vector(0), g.basis_vector(1)])
    with pytest.raises(NotIdealError):
        invariant_wedge2(g, not_ideal)


def test_invariants_within_unipotent_ideal():
    g = torus_heisenberg()
    basis = invariant_wedge2(g, g.unipotent_subspace())
    assert basis == [
        WedgeElement(g, {(1, 3): 1}),
        WedgeElement(g, {(2, 3): 1}),
    ]


def test_invariant_basis_closed_under_condition():
    # every returned element re-checks as invariant
    for g in (heisenberg(), abelian(4), torus_heisenberg()):
        for r in invariant_wedge2(g):
            assert is_invariant(r)


# -- CYB ----------------------------------------------------------------------


def test_cyb_zero_element():
    assert cyb_residual(WedgeElement.zero(heisenberg())).is_zero()


def test_cyb_heisenberg_invariant():
    g = heisenberg()
    assert cyb_residual(WedgeElement(g, {(0, 2): 1})).is_zero()


def test_cyb_sl2_casimir_like_term():
    # direct expansion of the three commutators for r = e ^ f
    g = sl2()
    r = WedgeElement(g, {(0, 2): 1})
    expected = Tensor3(
        g,
        {
            (1, 0, 2): 1,
            (1, 2, 0): -1,
            (0, 1, 2): -1,
            (2, 1, 0): 1,
            (0, 2, 1): 1,
            (2, 0, 1): -1,
        },
    )
    assert cyb_residual(r) == expected


def test_cyb_agrees_with_enveloping_algebra_commutators():
    # independent route: compute [r12, r13] + [r12, r23] + [r13, r23] in
    # U(g)^(x3) with degree-one tensors and compare
    from invcohom import pbw

    g = heisenberg()
    ctx = pbw.PBWContext(g)
    for terms in ({(0, 1): 2, (0, 2): 1}, {(0, 1): 1, (1, 2): F(1, 3)}):
        r = WedgeElement(g, terms)
        t2 = pbw.tensor_from_wedge(ctx, r)
        r12 = pbw.pad_tensor(t2, 3, (0, 1))
        r13 = pbw.pad_tensor(t2, 3, (0, 2))
        r23 = pbw.pad_tensor(t2, 3, (1, 2))

        def comm(x, y):
            return x @ y - y @ x

        total = comm(r12, r13) + comm(r12, r23) + comm(r13, r23)
        expected = cyb_residual(r)
        got = {}
        for (m1, m2, m3), c in total.terms.items():
            idx = tuple(next(i for i, e in enumerate(m) if e) for m in (m1, m2, m3))
            got[idx] = got.get(idx, F(0)) + c
        assert {k: v for k, v in got.items() if v != 0} == expected.terms


# -- support / components -----------------------------------------------------


def test_components_commute():
    g = heisenberg()
    assert components_commute(WedgeElement(g, {(0, 2): 1}))
    assert components_commute(WedgeElement.zero(g))
    assert not components_commute(WedgeElement(sl2(), {(0, 2): 1}))


def test_support_examples():
    g = heisenberg()
    assert support(WedgeElement(g, {(0, 2): 1})) == Subspace(
        3, [g.basis_vector(0), g.basis_vector(2)]
    )
    assert support(WedgeElement.zero(g)).is_zero()
    a4 = abelian(4)
    full_rank = WedgeElement(a4, {(0, 1): 1, (2, 3): 1})
    assert support(full_rank) == a4.full_space()


def test_is_minimal():
    a2 = abelian(2)
    assert is_minimal(WedgeElement(a2, {(0, 1): 1}), a2.full_space())
    a3 = abelian(3)
    assert not is_minimal(WedgeElement(a3, {(0, 1): 1}), a3.full_space())
    assert not is_minimal(WedgeElement.zero(a3), a3.full_space())


# -- theta --------------------------------------------------------------------


def test_theta_heisenberg():
    g = heisenberg()
    data = theta_lie(WedgeElement(g, {(0, 2): 1}))
    assert data.support == Subspace(3, [g.basis_vector(0), g.basis_vector(2)])
    assert data.omega == ((F(0), F(-1)), (F(1), F(0)))


def test_theta_zero_is_trivial_pair():
    data = theta_lie(WedgeElement.zero(heisenberg()))
    assert data.support.is_zero()
    assert data.omega == ()


def test_theta_abelian_inverse():
    a2 = abelian(2)
    r = WedgeElement(a2, {(0, 1): F(3)})
    data = theta_lie(r)
    assert data.support == a2.full_space()
    assert data.omega == ((F(0), F(-1, 3)), (F(1, 3), F(0)))


def test_theta_requires_invariance():
    with pytest.raises(NotInvariantError):
        theta_lie(WedgeElement(sl2(), {(0, 2): 1}))


def test_theta_round_trip():
    g = heisenberg()
    for r in (
        WedgeElement(g, {(0, 2): 1}),
        WedgeElement(g, {(0, 2): F(2, 3), (1, 2): -5}),
    ):
        data = theta_lie(r)
        assert wedge_from_symplectic(g, data.support, data.omega) == r


# -- symplectic cocycle check ---------------------------------------------------


def test_symplectic_cocycle_abelian_always_true():
    a4 = abelian(4)
    omega = [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 2], [0, 0, -2, 0]]
    assert check_symplectic_cocycle(a4, omega, a4.full_space())


def test_symplectic_cocycle_two_dim_nonabelian():
    # [x, y] = y with omega(x, y) = 1 is a quasi-Frobenius structure
    g = LieAlgebra(2, {(0, 1): {1: 1}})
    omega = [[0, 1], [-1, 0]]
    assert check_symplectic_cocycle(g, omega, g.full_space())


def test_symplectic_cocycle_degenerate_rejected():
    a2 = abelian(2)
    with pytest.raises(ValueError):
        check_symplectic_cocycle(a2, [[0, 0], [0, 0]], a2.full_space())


def test_symplectic_cocycle_nonskew_rejected():
    a2 = abelian(2)
    with pytest.raises(ValueError):
        check_symplectic_cocycle(a2, [[0, 1], [1, 0]], a2.full_space())


def test_symplectic_cocycle_odd_dimension_rejected():
    # a skew form on an odd-dimensional space is always singular
    g = sl2()
    omega = [[0, 1, 0], [-1, 0, 1], [0, -1, 0]]
    with pytest.raises(ValueError):
        check_symplectic_cocycle(g, omega, g.full_space())


def test_symplectic_cocycle_violation_detected():
    g = LieAlgebra(4, {(0, 1): {2: 1}, (0, 2): {3: 1}})
    omega = [
        [0, 1, 0, 0],
        [-1, 0, 0, 0],
        [0, 0, 0, 1],
        [0, 0, -1, 0],
    ]
    assert check_symplectic_cocycle(g, omega, g.full_space()) is False


# -- central element ------------------------------------------------------------


def test_central_element_heisenberg():
    g = heisenberg()
    r = WedgeElement(g, {(0, 2): 1})
    s = WedgeElement(g, {(1, 2): 1})
    data = central_element_z(r, s)
    c = (0, 0, 1)
    c2 = (0, 0, 2)
    assert data.bracket_rs.terms == {(c, c2): F(1), (c2, c): F(1)}
    assert data.z.terms == {((0, 0, 3),): F(1, 3)}
    assert data.c_symmetric == {(2, 2, 2): F(1)}
    assert data.identity_holds


def test_central_element_zero_cases():
    g = heisenberg()
    r = WedgeElement(g, {(0, 2): 1})
    zero = WedgeElement.zero(g)
    data = central_element_z(r, zero)
    assert data.bracket_rs.is_zero()
    assert data.z.is_zero()
    a3 = abelian(3)
    data = central_element_z(WedgeElement(a3, {(0, 1): 1}), WedgeElement(a3, {(1, 2): 1}))
    assert data.bracket_rs.is_zero()
    assert data.z.is_zero()


def test_central_element_requires_invariance():
    g = sl2()
    with pytest.raises(NotInvariantError):
        central_element_z(WedgeElement(g, {(0, 2): 1}), WedgeElement.zero(g))


def test_central_element_z_is_central_and_kills_brackets():
    from invcohom import pbw

    g = heisenberg()
    ctx = pbw.PBWContext(g)
    r = WedgeElement(g, {(0, 2): 1})
    s = WedgeElement(g, {(1, 2): 1})
    data = central_element_z(r, s)
    for k in range(g.dim):
        xk = pbw.generator(ctx, k)
        assert (data.z @ xk - xk @ data.z).is_zero()
    for w in (r, s):
        t = pbw.tensor_from_wedge(ctx, w)
        assert (t @ data.bracket_rs - data.bracket_rs @ t).is_zero()


# -- mixed splitting -------------------------------------------------------------


def test_split_mixed_invariant():
    g = torus_heisenberg()
    r = WedgeElement(g, {(0, 3): 1, (1, 3): 1})  # t^c + a^c
    r_mixed, r_unip = split_mixed_invariant(g, r)
    assert r_mixed == WedgeElement(g, {(0, 3): 1})
    assert r_unip == WedgeElement(g, {(1, 3): 1})


def test_split_mixed_trivial_cases():
    g = torus_heisenberg()
    r = WedgeElement(g, {(1, 3): 1})
    assert split_mixed_invariant(g, r) == (WedgeElement.zero(g), r)
    zero = WedgeElement.zero(g)
    assert split_mixed_invariant(g, zero) == (zero, zero)


def test_split_mixed_rejects_bad_input():
    g = torus_heisenberg()
    with pytest.raises(NotInvariantError):
        split_mixed_invariant(g, WedgeElement(g, {(1, 2): 1}))  # a^b not invariant
    bad = LieAlgebra(
        4,
        {(0, 1): {2: 1}, (1, 2): {3: 1}},
        unipotent=[1, 2, 3],
    )
    with pytest.raises(ValueError):
        split_mixed_invariant(bad, WedgeElement(bad, {(1, 3): 1}))


# -- serialization ----------------------------------------------------------------


def test_wedge_json_roundtrip():
    g = heisenberg()
    r = WedgeElement(g, {(0, 2): F(2, 3), (1, 2): -1})
    assert wedge_from_json(g, r.to_json()) == r
    assert r.to_json() == {"terms": {"0,2": "2/3", "1,2": "-1"}}


def test_wedge_normalizes_orientation():
    g = heisenberg()
    assert WedgeElement(g, {(2, 0): 1}) == WedgeElement(g, {(0, 2): -1})
