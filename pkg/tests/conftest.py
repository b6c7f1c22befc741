"""Shared fixtures: the fixed catalog and small random corpora."""

import pytest

from boxwood import generate


@pytest.fixture(scope="session")
def catalog():
    return generate.catalog()


@pytest.fixture(scope="session")
def small_catalog(catalog):
    """Catalog members with at most 8 vertices (exhaustive-check sized)."""
    return {k: g for k, g in catalog.items() if g.n <= 8}


@pytest.fixture(scope="session")
def mixed_corpus():
    """A quick mixed bag of random 3-connected instances (kept small)."""
    out = []
    for s in range(24):
        out.append((f"corpus{s}", generate.corpus_graph(s)))
    return out


@pytest.fixture(scope="session")
def quad_corpus():
    """Quadrangulations: prime, glued, and nested chains."""
    out = [("k23", generate.k23()), ("cubeq", generate.cube_quadrangulation())]
    for k in (3, 4, 6):
        out.append((f"pdw{k}", generate.pseudo_double_wheel(k)))
    for s in range(6):
        out.append((f"prime{s}", generate.random_prime_quadrangulation(s, max_n=60)))
    for s in range(4):
        out.append((f"glued{s}", generate.random_glued_quadrangulation(s, max_n=80)))
    for k in (1, 2, 5):
        out.append((f"chain{k}", generate.nested_chain_quadrangulation(k)))
    return out
