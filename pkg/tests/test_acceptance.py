"""Acceptance suite: one test per criterion, exact tolerances, stated budgets.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one pass/fail line
per criterion.  Every equality below is exact rational equality; there are
no numerical tolerances anywhere.
"""

import time
from fractions import Fraction

from invcohom import corpus, pbw
from invcohom.abelian import FgAbelianGroup, standard_nondegenerate_example, zero_bicharacter
from invcohom.classify import classify_connected
from invcohom.invariants import (
    WedgeElement,
    central_element_z,
    components_commute,
    cyb_residual,
    invariant_wedge2,
    support,
    theta_lie,
    wedge_from_symplectic,
)
from invcohom.pbw import PBWContext

F = Fraction
N = 6


def _report(num, label, elapsed=None):
    timing = f" [{elapsed:.2f}s]" if elapsed is not None else ""
    print(f"ACCEPTANCE {num}: {label} PASS{timing}")


def _invariant_corpus():
    for name, g in corpus.iter_lie_corpus():
        yield name, g, invariant_wedge2(g)


def test_acceptance_1_heisenberg_invariants():
    t0 = time.monotonic()
    g = corpus.load_lie("heisenberg_3")
    basis = invariant_wedge2(g)
    assert basis == [WedgeElement(g, {(0, 2): 1}), WedgeElement(g, {(1, 2): 1})]
    elapsed = time.monotonic() - t0
    assert elapsed < 1.0
    _report(1, "Heisenberg invariant basis is exactly {a^c, b^c}", elapsed)


def test_acceptance_2_central_element():
    t0 = time.monotonic()
    g = corpus.load_lie("heisenberg_3")
    r = WedgeElement(g, {(0, 2): 1})
    s = WedgeElement(g, {(1, 2): 1})
    data = central_element_z(r, s)
    c, c2 = (0, 0, 1), (0, 0, 2)
    assert data.bracket_rs.terms == {(c, c2): F(1), (c2, c): F(1)}
    assert data.z.terms == {((0, 0, 3),): F(1, 3)}
    # coefficient-by-coefficient comparison on the verification window
    lhs = pbw.coproduct(data.z) - pbw.tensor_times_unit(data.z) - pbw.unit_times_tensor(data.z)
    assert lhs.window(N) == data.bracket_rs.window(N)
    assert data.identity_holds
    elapsed = time.monotonic() - t0
    assert elapsed < 1.0
    _report(2, "[r,s] = c(x)c^2 + c^2(x)c and z = c^3/3 with its identity", elapsed)


def test_acceptance_3_invariants_solve_cyb_and_commute():
    t0 = time.monotonic()
    count = 0
    for name, g, basis in _invariant_corpus():
        for r in basis:
            assert cyb_residual(r).is_zero(), name
            assert components_commute(r), name
            count += 1
    elapsed = time.monotonic() - t0
    assert elapsed < 30.0
    _report(3, f"CYB residual 0 and commuting components for {count} invariants", elapsed)


def test_acceptance_4_product_relation_suite():
    t0 = time.monotonic()
    pairs = 0
    for name, g, basis in _invariant_corpus():
        if not basis:
            continue
        ctx = PBWContext(g)
        for r in basis:
            for s in basis:
                relation = pbw.verify_product_relation(ctx, r, s, N)
                assert relation.residual_product.is_zero(), name
                assert relation.residual_coboundary.is_zero(), name
                pairs += 1
    elapsed = time.monotonic() - t0
    assert elapsed < 300.0
    _report(
        4,
        f"J_r J_s = J_(r+s) exp([r,s]/8) and the exp(z/8) gauge for {pairs} pairs",
        elapsed,
    )


def test_acceptance_5_twist_and_invariance_defects():
    t0 = time.monotonic()
    count = 0
    for name, g, basis in _invariant_corpus():
        if not basis:
            continue
        ctx = PBWContext(g)
        for r in basis:
            assert pbw.twist_defect_of(ctx, r, N).is_zero(), name
            assert all(d.is_zero() for d in pbw.invariance_defect_of(ctx, r, N)), name
            count += 1
    elapsed = time.monotonic() - t0
    _report(5, f"twist and invariance defects vanish for {count} twists", elapsed)


def test_acceptance_6_supports_are_abelian_ideals():
    t0 = time.monotonic()
    for name, g, basis in _invariant_corpus():
        for r in basis:
            assert g.is_abelian_ideal(support(r)), name
    _report(6, "support of every corpus invariant is an abelian ideal", time.monotonic() - t0)


def test_acceptance_7_classification_fixtures():
    t0 = time.monotonic()
    rep = classify_connected(corpus.load_group("sl2_type"))
    assert (rep.kx_rank, rep.finite_factors, rep.additive_dim) == (0, (), 0)
    assert rep.isomorphism_type == "trivial"
    for n in range(1, 5):
        rep = classify_connected(corpus.load_group(f"torus_{n}"))
        assert (rep.kx_rank, rep.finite_factors, rep.additive_dim) == (
            n * (n - 1) // 2,
            (),
            0,
        )
    rep = classify_connected(corpus.load_group("gm_heisenberg"))
    assert (rep.kx_rank, rep.finite_factors, rep.additive_dim) == (0, (), 3)
    assert rep.isomorphism_type == "k^3"
    rep = classify_connected(corpus.load_group("gm_ga"))
    assert (rep.kx_rank, rep.finite_factors, rep.additive_dim) == (0, (), 1)
    assert rep.bset_summary == [(2, True)]  # the minimal basis element
    _report(7, "classification reports match on all group fixtures", time.monotonic() - t0)


def test_acceptance_8_bicharacter_nondegeneracy():
    t0 = time.monotonic()
    for n in (2, 3, 6):
        assert standard_nondegenerate_example(n).is_nondegenerate()
    assert not zero_bicharacter(FgAbelianGroup(2, [3])).is_nondegenerate()
    assert not zero_bicharacter(FgAbelianGroup(1)).is_nondegenerate()
    _report(8, "Z^2 x Z/n pairing nondegenerate for n in {2,3,6}; zero pairing is not",
            time.monotonic() - t0)


def test_acceptance_9_solver_oracle_equivalence():
    t0 = time.monotonic()
    for name, g in corpus.iter_lie_corpus():
        assert invariant_wedge2(g) == corpus.oracle_invariants(g), name
    _report(9, "linear solver and brute-force oracle agree on the whole corpus",
            time.monotonic() - t0)


def test_acceptance_10_bijection_round_trip():
    t0 = time.monotonic()
    for name, g, basis in _invariant_corpus():
        for r in basis:
            data = theta_lie(r)
            assert wedge_from_symplectic(g, data.support, data.omega) == r, name
        if len(basis) >= 2:
            mixed = basis[0] + F(3, 2) * basis[-1]
            data = theta_lie(mixed)
            assert wedge_from_symplectic(g, data.support, data.omega) == mixed, name
    _report(10, "support/form pairs invert back to every corpus invariant",
            time.monotonic() - t0)
