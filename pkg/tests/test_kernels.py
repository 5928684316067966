"""Search kernels: backend parity, brute-force parity, size fallback."""

import subprocess
import sys

import pytest

from oracles import brute_exists, ok_acyclic, ok_circular, ok_tree, random_digraphs
from stardi import Digraph, available_backends, backend_name, underlying_graph
from stardi.kernels import get_backend, search_acyclic
from stardi.solvers import _search_order

CORPUS = random_digraphs(30, 6, seed0=2000)
KD_PAIRS = ((1, 1), (2, 1), (3, 2), (4, 3), (5, 2))

needs_compiled = pytest.mark.skipif(
    "compiled" not in available_backends(), reason="extension not built"
)


def _order(masks) -> tuple[int, ...]:
    return _search_order(masks)


def test_backend_registry():
    assert backend_name() in available_backends()
    assert get_backend("python").BACKEND == "python"
    with pytest.raises(ValueError):
        get_backend("fortran")


@needs_compiled
def test_compiled_backend_reports_its_limit():
    assert get_backend("compiled").MAX_VERTICES == 63
    assert get_backend("python").MAX_VERTICES is None


@needs_compiled
def test_backends_agree_exactly():
    # same witness and same node count: the two kernels walk one search tree
    py = get_backend("python")
    cy = get_backend("compiled")
    for D in CORPUS:
        order = _order(D.adj_masks)
        G = underlying_graph(D)
        gorder = _order(G.adj_masks)
        for k, d in KD_PAIRS:
            assert py.search_acyclic(D.n, k, d, D.out_masks, order) == (
                cy.search_acyclic(D.n, k, d, D.out_masks, order)
            )
            assert py.search_circular(
                D.n, k, d, D.out_masks, D.in_masks, order
            ) == cy.search_circular(D.n, k, d, D.out_masks, D.in_masks, order)
            assert py.search_tree(G.n, k, d, G.adj_masks, gorder) == (
                cy.search_tree(G.n, k, d, G.adj_masks, gorder)
            )


def test_kernel_feasibility_matches_brute_force():
    mod = get_backend(backend_name())
    for D in CORPUS[:18]:
        order = _order(D.adj_masks)
        G = underlying_graph(D)
        gorder = _order(G.adj_masks)
        for k, d in ((2, 1), (3, 2), (4, 3)):
            res, _ = mod.search_acyclic(D.n, k, d, D.out_masks, order)
            assert (res is not None) == brute_exists(D, k, d, ok_acyclic)
            res, _ = mod.search_circular(D.n, k, d, D.out_masks, D.in_masks, order)
            assert (res is not None) == brute_exists(D, k, d, ok_circular)
            res, _ = mod.search_tree(G.n, k, d, G.adj_masks, gorder)
            assert (res is not None) == brute_exists(G, k, d, ok_tree)


def test_kernel_witnesses_are_valid():
    mod = get_backend(backend_name())
    for D in CORPUS:
        order = _order(D.adj_masks)
        for k, d in KD_PAIRS:
            res, nodes = mod.search_acyclic(D.n, k, d, D.out_masks, order)
            assert nodes >= 1
            if res is not None:
                assert ok_acyclic(D, k, d, res)
                assert res[order[0]] == 0  # symmetry anchor


def test_kernel_is_deterministic():
    mod = get_backend(backend_name())
    D = CORPUS[0]
    order = _order(D.adj_masks)
    runs = {mod.search_acyclic(D.n, 3, 2, D.out_masks, order) for _ in range(3)}
    assert len(runs) == 1


def test_large_instances_fall_back_to_python():
    # 70 vertices exceed the 64-bit mask budget; the dispatcher must still work
    n = 70
    D = Digraph(n, [(i, (i + 1) % n) for i in range(n)])
    res, _ = search_acyclic(D.n, 2, 1, D.out_masks, _order(D.adj_masks))
    assert res is not None
    assert ok_acyclic(D, 2, 1, res)


@pytest.mark.parametrize("name", ["python", "compiled"])
def test_env_override_selects_backend(name):
    if name not in available_backends():
        pytest.skip("extension not built")
    out = subprocess.run(
        [sys.executable, "-c", "import stardi; print(stardi.backend_name())"],
        env={"PATH": "/usr/bin:/bin", "STARDI_KERNEL": name},
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == name
