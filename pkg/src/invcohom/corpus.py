"""The bundled desk-scale corpus and the brute-force invariance oracle.

Fixture files live under ``fixtures/v1`` in two flavors: ``lie/`` holds
structure-constant files (every nilpotent Lie algebra of dimension at most
5 over Q, the Heisenberg algebras in dimensions 3 and 5, abelian algebras
through dimension 6, and sl2 as the zero-invariant control) and ``groups/``
holds connected-group inputs (tori, an sl2-type group, and torus x unipotent
products).  Derived fixtures carry an ``expected`` block produced by the
oracle in this module, so every recorded value names its computation.
"""

import json
from importlib import resources

from . import linalg
from .classify import group_input_from_json
from .invariants import WedgeElement, wedge_pairs
from .lie import lie_from_json


def fixture_root():
    return resources.files("invcohom") / "fixtures" / "v1"


def _names(kind):
    return sorted(p.name[: -len(".json")] for p in (fixture_root() / kind).iterdir() if p.name.endswith(".json"))


def lie_fixture_names():
    return _names("lie")


def group_fixture_names():
    return _names("groups")


def load_lie_json(name):
    return json.loads((fixture_root() / "lie" / f"{name}.json").read_text())


def load_group_json(name):
    return json.loads((fixture_root() / "groups" / f"{name}.json").read_text())


def load_lie(name):
    return lie_from_json(load_lie_json(name), path=name)


def load_group(name):
    return group_input_from_json(load_group_json(name), path=name)


def iter_lie_corpus():
    for name in lie_fixture_names():
        yield name, load_lie(name)


def iter_group_corpus():
    for name in group_fixture_names():
        yield name, load_group(name)


def oracle_invariants(g):
    """Brute-force invariant basis of wedge^2 g.

    Assembles the raw invariance system directly from structure constants,
    one row per (generator k, ordered target pair (a, b)), with no skew
    reduction and none of the solver's machinery, then takes its kernel.
    Exists to cross-check the optimized solver; both sides echelonize the
    same way, so agreement is plain list equality.
    """
    n = g.dim
    pairs = wedge_pairs(n)
    rows = []
    for k in range(n):
        for a in range(n):
            for b in range(n):
                row = []
                for (p, q) in pairs:
                    v = linalg.ZERO
                    if b == q:
                        v += g.structure_constant(k, p, a)
                    if b == p:
                        v -= g.structure_constant(k, q, a)
                    if a == p:
                        v += g.structure_constant(k, q, b)
                    if a == q:
                        v -= g.structure_constant(k, p, b)
                    row.append(v)
                rows.append(row)
    kernel = linalg.kernel_basis(rows, len(pairs))
    return [WedgeElement.from_coords(g, vec) for vec in kernel]
