from invcohom import corpus
from invcohom.classify import classify_connected
from invcohom.invariants import (
    components_commute,
    cyb_residual,
    invariant_wedge2,
    is_invariant,
    support,
    theta_lie,
    wedge_from_symplectic,
)


def test_corpus_is_complete():
    names = corpus.lie_fixture_names()
    assert len(names) == 21
    # full nilpotent classification through dimension 5:
    # 2 in dim 3 (abelian, heisenberg), 3 in dim 4, 9 in dim 5
    dim_counts = {}
    for name, g in corpus.iter_lie_corpus():
        if name.startswith(("torus", "sl2")):
            continue
        dim_counts[g.dim] = dim_counts.get(g.dim, 0) + 1
    assert dim_counts == {1: 1, 2: 1, 3: 2, 4: 3, 5: 9, 6: 1}


def test_all_lie_fixtures_validate():
    for name, g in corpus.iter_lie_corpus():
        assert g.validate().ok, name


def test_fixture_algebras_are_pairwise_structurally_sane():
    # nilpotency classes of the classification list
    classes = {
        name: g.nilpotency_class() for name, g in corpus.iter_lie_corpus()
    }
    assert classes["sl2"] is None
    assert classes["heisenberg_3"] == 2
    assert classes["heisenberg_5"] == 2
    assert classes["nilpotent_4_3"] == 3
    assert classes["nilpotent_5_7"] == 4
    assert classes["nilpotent_5_6"] == 4
    assert all(classes[f"abelian_{n}"] == 1 for n in range(1, 7))


def test_solver_matches_oracle_everywhere():
    for name, g in corpus.iter_lie_corpus():
        solver = invariant_wedge2(g)
        oracle = corpus.oracle_invariants(g)
        assert solver == oracle, name


def test_expected_dimensions_recorded_in_fixtures():
    for name in corpus.lie_fixture_names():
        data = corpus.load_lie_json(name)
        g = corpus.load_lie(name)
        expected = data["expected"]["invariant_dimension"]
        assert len(invariant_wedge2(g)) == expected, name
        assert data["expected"]["provenance"] in {"paper", "trivial", "derived-oracle"}


def test_invariants_solve_cyb_and_commute():
    for name, g in corpus.iter_lie_corpus():
        for r in invariant_wedge2(g):
            assert cyb_residual(r).is_zero(), name
            assert components_commute(r), name


def test_supports_are_abelian_ideals():
    for name, g in corpus.iter_lie_corpus():
        for r in invariant_wedge2(g):
            assert g.is_abelian_ideal(support(r)), name


def test_theta_round_trip_on_corpus():
    for name, g in corpus.iter_lie_corpus():
        basis = invariant_wedge2(g)
        for r in basis:
            data = theta_lie(r)
            assert wedge_from_symplectic(g, data.support, data.omega) == r, name
        if len(basis) >= 2:
            combo = basis[0] + 2 * basis[1]
            data = theta_lie(combo)
            assert wedge_from_symplectic(g, data.support, data.omega) == combo, name


def test_invariant_bases_recheck_invariance():
    for name, g in corpus.iter_lie_corpus():
        for r in invariant_wedge2(g):
            assert is_invariant(r), name


def test_group_fixtures_classify_to_recorded_reports():
    for name in corpus.group_fixture_names():
        data = corpus.load_group_json(name)
        rep = classify_connected(corpus.load_group(name))
        expected = data["expected"]
        assert rep.kx_rank == expected["kx_rank"], name
        assert list(rep.finite_factors) == expected["finite_factors"], name
        assert rep.additive_dim == expected["additive_dim"], name
        assert rep.isomorphism_type == expected["isomorphism_type"], name
