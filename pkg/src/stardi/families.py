"""Generators for the digraph and graph families used throughout.

All generators are deterministic: given equal parameters they return
identical objects, and random_orientation is a pure function of its seed.
"""

from __future__ import annotations

import random
from itertools import combinations

from .graphs import CapExceeded, Digraph, Graph


def circulant(k: int, d: int) -> Digraph:
    """Vertex i in Z_k sends arcs to i+d, i+d+1, ..., i+k-1 (mod k), so each
    vertex has exactly k-d out-neighbours."""
    if not 1 <= d <= k:
        raise ValueError(f"need 1 <= d <= k, got k={k}, d={d}")
    arcs = [(i, (i + j) % k) for i in range(k) for j in range(d, k)]
    return Digraph(k, arcs)


def dicycle(n: int) -> Digraph:
    """The directed cycle 0 -> 1 -> ... -> n-1 -> 0."""
    if n < 2:
        raise ValueError("a directed cycle needs at least 2 vertices")
    return Digraph(n, [(i, (i + 1) % n) for i in range(n)])


def symmetric(G: Graph) -> Digraph:
    """Replace every edge by a digon."""
    arcs = []
    for u, w in G.edges:
        arcs.append((u, w))
        arcs.append((w, u))
    return Digraph(G.n, arcs)


def add_source(D: Digraph) -> Digraph:
    """Add a dominating source: new vertex n with an arc to every old vertex."""
    arcs = list(D.arcs) + [(D.n, v) for v in range(D.n)]
    return Digraph(D.n + 1, arcs)


def wheel(k: int) -> Graph:
    """Rim cycle 0..k-1 plus hub k joined to every rim vertex (2k edges)."""
    if k < 3:
        raise ValueError("wheel rim needs at least 3 vertices")
    edges = [(i, (i + 1) % k) for i in range(k)] + [(i, k) for i in range(k)]
    return Graph(k + 1, edges)


def wheel_alternating(k: int) -> Digraph:
    """The wheel orientation with a directed rim cycle and alternating
    spokes: hub -> i for even i, i -> hub for odd i.  Every second hub
    triangle becomes a directed 3-cycle."""
    if k < 4 or k % 2 != 0:
        raise ValueError("alternating spokes need an even rim of size >= 4")
    hub = k
    arcs = [(i, (i + 1) % k) for i in range(k)]
    for i in range(k):
        arcs.append((hub, i) if i % 2 == 0 else (i, hub))
    return Digraph(k + 1, arcs)


def kneser2(n: int) -> Graph:
    """Vertices are the 2-subsets of {0..n-1} in lexicographic order; edges
    join disjoint pairs.  kneser2(5) is the Petersen graph."""
    if n < 4:
        raise ValueError("need n >= 4 so that disjoint pairs exist")
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    edges = [
        (index[p], index[q])
        for p, q in combinations(pairs, 2)
        if not (set(p) & set(q))
    ]
    return Graph(len(pairs), edges)


def knauer(g: int, f: int) -> Digraph:
    """Planar digraphs of digirth g on f(g-1)+1 vertices with small acyclic
    induced sets.

    Stage 1 is the directed g-cycle.  Each later stage adds a directed path
    of g-1 fresh vertices s_1 -> ... -> s_{g-1} and attaches it to two
    existing vertices x != y via arcs x -> s_1, s_{g-1} -> x, y -> s_1,
    s_{g-1} -> y, so that both x and y close directed g-cycles with the
    path.  The attachment pair is the endpoint pair (s_1, s_{g-1}) of the
    previous stage's path; stage 2, having no previous path, uses the
    adjacent base-cycle vertices 0 and 1.  (The construction leaves the
    exact attachment pair open; this choice keeps the acyclic-set bound
    tight, unlike attaching every stage to the same pair, which admits
    oversized acyclic sets.)"""
    if g < 3:
        raise ValueError("digirth must be at least 3")
    if f < 1:
        raise ValueError("need at least one stage")
    arcs = [(i, (i + 1) % g) for i in range(g)]
    x, y = 0, 1
    count = g
    for _ in range(2, f + 1):
        path = list(range(count, count + g - 1))
        count += g - 1
        arcs += [(path[t], path[t + 1]) for t in range(g - 2)]
        arcs += [(x, path[0]), (path[-1], x), (y, path[0]), (path[-1], y)]
        x, y = path[0], path[-1]
    return Digraph(count, arcs)


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def orientation(G: Graph, mask: int) -> Digraph:
    """The orientation selected by a bitmask over G.edges: bit i clear
    orients edge i as stored (low -> high), set reverses it."""
    if not 0 <= mask < (1 << G.m):
        raise ValueError(f"mask {mask} out of range for {G.m} edges")
    arcs = [
        (w, u) if (mask >> i) & 1 else (u, w) for i, (u, w) in enumerate(G.edges)
    ]
    return Digraph(G.n, arcs)


def all_orientations(G: Graph, edge_cap: int = 18):
    """Yield the 2^m orientations of G in bitmask order."""
    if G.m > edge_cap:
        raise CapExceeded(f"{G.m} edges exceed the orientation cap of {edge_cap}")
    for mask in range(1 << G.m):
        yield orientation(G, mask)


def random_orientation(G: Graph, seed: int) -> Digraph:
    """A seeded orientation; identical seeds give identical digraphs."""
    rng = random.Random(seed)
    mask = 0
    for i in range(G.m):
        mask |= rng.randrange(2) << i
    return orientation(G, mask)


# ----------------------------------------------------------------------------
# family dispatch for the command line

_FAMILIES = {
    "circulant": (circulant, ("k", "d")),
    "dicycle": (dicycle, ("n",)),
    "wheel": (wheel, ("k",)),
    "wheel-alternating": (wheel_alternating, ("k",)),
    "kneser2": (kneser2, ("n",)),
    "knauer": (knauer, ("g", "f")),
    "complete": (complete, ("n",)),
}

_TRANSFORMS = {
    "symmetric": (symmetric, Graph),
    "add-source": (add_source, Digraph),
}


def family_names() -> tuple[str, ...]:
    return tuple(sorted(_FAMILIES)) + tuple(sorted(_TRANSFORMS))


def build_family(name: str, params: dict, base=None):
    """Construct a family member from CLI-style parameters.  Transform
    families (symmetric, add-source) require a base object instead."""
    if name in _TRANSFORMS:
        func, expected = _TRANSFORMS[name]
        if base is None:
            raise ValueError(f"family {name!r} needs an input graph file")
        if not isinstance(base, expected):
            kind = "graph" if expected is Graph else "digraph"
            raise ValueError(f"family {name!r} expects a {kind} as input")
        return func(base)
    if name not in _FAMILIES:
        raise ValueError(f"unknown family {name!r}")
    func, wanted = _FAMILIES[name]
    missing = [p for p in wanted if params.get(p) is None]
    if missing:
        raise ValueError(f"family {name!r} needs --{missing[0]}")
    return func(*(params[p] for p in wanted))
