import random
from fractions import Fraction

import pytest

from invcohom.lie import LieAlgebra, SchemaError, Subspace, lie_from_json

F = Fraction


def heisenberg():
    return LieAlgebra(3, {(0, 1): {2: 1}}, basis_names=["a", "b", "c"])


def sl2():
    # basis (e, h, f): [e, f] = h, [h, e] = 2e, [h, f] = -2f
    return LieAlgebra(
        3,
        {(0, 2): {1: 1}, (1, 0): {0: 2}, (1, 2): {2: -2}},
        basis_names=["e", "h", "f"],
    )


def abelian(n):
    return LieAlgebra(n, {})


def filiform4():
    return LieAlgebra(4, {(0, 1): {2: 1}, (0, 2): {3: 1}})


def test_validate_abelian():
    assert abelian(4).validate().ok


def test_validate_heisenberg():
    assert heisenberg().validate().ok


def test_validate_antisymmetry_violation():
    g = LieAlgebra(4, {(1, 2): {3: 1}, (2, 1): {3: 1}})
    report = g.validate()
    assert not report.ok
    assert report.antisymmetry == [(1, 2, 3, F(2))]


def test_validate_jacobi_violation():
    # [[x2,x0],x1] = -x2 is the only surviving Jacobi term for (0,1,2)
    g = LieAlgebra(3, {(0, 1): {2: 1}, (0, 2): {0: 1}})
    report = g.validate()
    assert report.jacobi == [(0, 1, 2, 2, F(-1))]


def test_validate_reports_all_jacobi_rows():
    g = sl2()
    assert g.validate().ok


def test_bracket_heisenberg():
    g = heisenberg()
    a, b, c = g.basis_vector(0), g.basis_vector(1), g.basis_vector(2)
    assert g.bracket(a, b) == c
    assert g.bracket(b, a) == tuple(-x for x in c)
    assert g.bracket(a, a) == (F(0),) * 3


def test_bracket_sl2():
    g = sl2()
    e, h, f = g.basis_vector(0), g.basis_vector(1), g.basis_vector(2)
    assert g.bracket(h, e) == tuple(2 * x for x in e)
    assert g.bracket(h, f) == tuple(-2 * x for x in f)
    assert g.bracket(e, f) == h


def test_center_heisenberg():
    g = heisenberg()
    z = g.center()
    assert z.dim == 1
    assert z.contains(g.basis_vector(2))


def test_center_abelian_and_sl2():
    assert abelian(3).center().dim == 3
    assert sl2().center().dim == 0


def test_lower_central_series():
    series, cls = heisenberg().lower_central_series()
    assert cls == 2
    assert [s.dim for s in series] == [3, 1, 0]
    assert abelian(2).nilpotency_class() == 1
    assert sl2().nilpotency_class() is None
    assert filiform4().nilpotency_class() == 3


def test_is_abelian_ideal():
    g = heisenberg()
    ac = Subspace(3, [g.basis_vector(0), g.basis_vector(2)])
    ab = Subspace(3, [g.basis_vector(0), g.basis_vector(1)])
    assert g.is_abelian_ideal(ac)
    assert not g.is_abelian_ideal(ab)
    assert g.is_abelian_ideal(Subspace(3))


def test_center_is_abelian_ideal_everywhere():
    for g in (heisenberg(), sl2(), abelian(5), filiform4()):
        assert g.is_abelian_ideal(g.center())


def test_bracket_properties_random():
    rng = random.Random(7)
    for g in (heisenberg(), sl2(), filiform4()):
        for _ in range(20):
            x, y, z = (
                tuple(F(rng.randint(-4, 4)) for _ in range(g.dim)) for _ in range(3)
            )
            assert g.bracket(x, y) == tuple(-v for v in g.bracket(y, x))
            jac = [
                a + b + c
                for a, b, c in zip(
                    g.bracket(x, g.bracket(y, z)),
                    g.bracket(z, g.bracket(x, y)),
                    g.bracket(y, g.bracket(z, x)),
                )
            ]
            assert all(v == 0 for v in jac)


def test_iterated_brackets_vanish_at_class_plus_one():
    for g in (heisenberg(), filiform4()):
        cls = g.nilpotency_class()
        for seq in _index_words(g.dim, cls + 1):
            v = g.basis_vector(seq[0])
            for i in seq[1:]:
                v = g.bracket(g.basis_vector(i), v)
            assert all(x == 0 for x in v)


def _index_words(n, length):
    if length == 1:
        return [(i,) for i in range(n)]
    return [w + (i,) for w in _index_words(n, length - 1) for i in range(n)]


def test_subspace_intersection_and_sum():
    s1 = Subspace(3, [(1, 0, 0), (0, 1, 0)])
    s2 = Subspace(3, [(0, 1, 0), (0, 0, 1)])
    both = s1.intersection(s2)
    assert both.dim == 1
    assert both.contains((0, 1, 0))
    assert s1.sum(s2).dim == 3


def test_subalgebra_closure_and_class():
    g = heisenberg()
    closed = g.subalgebra_closure([g.basis_vector(0), g.basis_vector(1)])
    assert closed.dim == 3
    assert g.subalgebra_class(closed) == 2
    ac = g.subalgebra_closure([g.basis_vector(0), g.basis_vector(2)])
    assert ac.dim == 2
    assert g.subalgebra_class(ac) == 1


def test_unipotent_ideal_validation():
    g = LieAlgebra(3, {(0, 1): {2: 1}}, unipotent=[1, 2])
    assert g.validate().ok
    bad = LieAlgebra(3, {(0, 1): {2: 1}}, unipotent=[0, 1])
    assert bad.validate().unipotent_ideal


def test_json_roundtrip():
    g = LieAlgebra(
        4,
        {(0, 1): {2: F(1, 2)}, (0, 2): {3: -2}},
        basis_names=["p", "q", "r", "s"],
        unipotent=[1, 2, 3],
    )
    g2 = lie_from_json(g.to_json())
    assert g2.dim == 4
    assert g2.basis_names == g.basis_names
    assert g2.unipotent == (1, 2, 3)
    assert g2.bracket_basis(0, 1) == {2: F(1, 2)}
    assert g2.to_json() == g.to_json()


def test_schema_errors_are_addressed():
    with pytest.raises(SchemaError) as err:
        lie_from_json({"dim": 2, "brackets": {"0": {}}})
    assert "brackets" in str(err.value)
    with pytest.raises(SchemaError):
        lie_from_json({"dim": 2, "brackets": {"1,0": {"0": "1"}}})
    with pytest.raises(SchemaError):
        lie_from_json({"dim": 2, "brackets": {"0,1": {"0": "1/x"}}})
    with pytest.raises(SchemaError):
        lie_from_json({"dim": 2, "brackets": {"0,1": {"0": 0.5}}})
    with pytest.raises(SchemaError):
        lie_from_json({"basis": []})
