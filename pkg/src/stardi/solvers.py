"""Exact solvers for the colouring parameters.

Every rational parameter is minimised over a finite candidate ladder: the
reduced fractions k/d with d <= k <= n_bound inside a half-open window.
Feasibility of the pair (k, d) depends only on the ratio k/d and is monotone
in it for all three colouring notions, which justifies narrowing the window
to (chi - 1, chi] around the integer parameter chi and binary-searching the
ladder; a paranoid mode scans linearly instead and asserts the monotone
feasibility pattern along the way.

Directed cuts are transparent for the dichromatic and star parameters, so
those decompose over strongly connected components.  The circular parameter
is NOT cut-transparent (a dominating source can raise it) and is always
solved on the whole digraph.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .colourings import (
    CircularColouring,
    check_acyclic_kd,
    check_circular_kd,
    check_tree_kd,
)
from .families import orientation
from .graphs import (
    CapExceeded,
    Digraph,
    Graph,
    induced_subdigraph,
    strong_components,
)


@dataclass(frozen=True)
class CandidateLadder:
    """All reduced fractions k/d with d <= k <= n_bound in (lo, hi], sorted
    ascending."""

    n_bound: int
    lo: Fraction
    hi: Fraction
    fractions: tuple[Fraction, ...]


@dataclass(frozen=True)
class SolveStats:
    """nodes: search-tree nodes over every search run for the solve.
    candidates: ladder fractions in the order tested, with feasibility."""

    nodes: int
    candidates: tuple[tuple[Fraction, bool], ...]


@dataclass(frozen=True)
class SolverResult:
    value: Fraction
    witness: CircularColouring
    stats: SolveStats


def candidate_fractions(n_bound: int, lo, hi) -> CandidateLadder:
    if n_bound < 1:
        raise ValueError("n_bound must be positive")
    lo = Fraction(lo)
    hi = Fraction(hi)
    if lo >= hi:
        raise ValueError(f"empty window: lo={lo} >= hi={hi}")
    values = {
        Fraction(k, d)
        for k in range(1, n_bound + 1)
        for d in range(1, k + 1)
    }
    selected = sorted(f for f in values if lo < f <= hi)
    return CandidateLadder(n_bound, lo, hi, tuple(selected))


def _search_order(adj_masks) -> tuple[int, ...]:
    # decreasing degree in the underlying graph, ties by vertex id
    return tuple(
        sorted(range(len(adj_masks)), key=lambda v: (-adj_masks[v].bit_count(), v))
    )


def _validate_kd(k: int, d: int) -> None:
    if not (isinstance(k, int) and isinstance(d, int)):
        raise ValueError("k and d must be integers")
    if not 1 <= d <= k:
        raise ValueError(f"need 1 <= d <= k, got k={k}, d={d}")


def _probe_acyclic(D: Digraph, k: int, d: int):
    colours, nodes = kernels.search_acyclic(
        D.n, k, d, D.out_masks, _search_order(D.adj_masks)
    )
    witness = None if colours is None else CircularColouring(k, d, colours)
    return witness, nodes


def _probe_circular(D: Digraph, k: int, d: int):
    colours, nodes = kernels.search_circular(
        D.n, k, d, D.out_masks, D.in_masks, _search_order(D.adj_masks)
    )
    witness = None if colours is None else CircularColouring(k, d, colours)
    return witness, nodes


def _probe_tree(G: Graph, k: int, d: int):
    colours, nodes = kernels.search_tree(
        G.n, k, d, G.adj_masks, _search_order(G.adj_masks)
    )
    witness = None if colours is None else CircularColouring(k, d, colours)
    return witness, nodes


def exists_acyclic_kd(D: Digraph, k: int, d: int):
    """A colouring whose window preimages are all acyclic, or None; an
    exhausted backtracking search certifies infeasibility."""
    _validate_kd(k, d)
    witness, _ = _probe_acyclic(D, k, d)
    if witness is not None and check_acyclic_kd(D, witness) is not None:
        raise AssertionError("search returned a colouring the checker rejects")
    return witness


def exists_circular_kd(D: Digraph, k: int, d: int):
    _validate_kd(k, d)
    witness, _ = _probe_circular(D, k, d)
    if witness is not None and check_circular_kd(D, witness) is not None:
        raise AssertionError("search returned a colouring the checker rejects")
    return witness


def exists_tree_kd(G: Graph, k: int, d: int):
    _validate_kd(k, d)
    witness, _ = _probe_tree(G, k, d)
    if witness is not None and check_tree_kd(G, witness) is not None:
        raise AssertionError("search returned a colouring the checker rejects")
    return witness


# ----------------------------------------------------------------------------
# ladder scan


def _ladder_scan(ladder, probe, paranoid: bool):
    """Least feasible fraction of a ladder whose top entry is feasible.

    probe(f) -> (witness | None, nodes).  Binary search by default; under
    paranoid every candidate is probed ascending and the monotone pattern
    (infeasible*, feasible*) is asserted."""
    tested: list[tuple[Fraction, bool]] = []
    cache: dict[int, CircularColouring | None] = {}
    nodes_total = 0

    def run(i: int):
        nonlocal nodes_total
        witness, nodes = probe(ladder[i])
        nodes_total += nodes
        tested.append((ladder[i], witness is not None))
        cache[i] = witness
        return witness

    if paranoid:
        first = None
        for i in range(len(ladder)):
            witness = run(i)
            if witness is not None:
                if first is None:
                    first = i
            elif first is not None:
                raise AssertionError(
                    f"feasibility not monotone: {ladder[i]} infeasible above "
                    f"feasible {ladder[first]}"
                )
        if first is None:
            raise AssertionError("no feasible candidate on the ladder")
        return ladder[first], cache[first], nodes_total, tested

    lo, hi = 0, len(ladder) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if run(mid) is not None:
            hi = mid
        else:
            lo = mid + 1
    if lo not in cache:
        run(lo)
    witness = cache[lo]
    if witness is None:
        raise AssertionError("ladder top is infeasible")
    return ladder[lo], witness, nodes_total, tested


def _least_k_acyclic(D: Digraph):
    """Least k such that (k, 1) is feasible, with the node total."""
    nodes_total = 0
    for k in range(1, D.n + 1):
        witness, nodes = _probe_acyclic(D, k, 1)
        nodes_total += nodes
        if witness is not None:
            return k, nodes_total
    raise AssertionError("no (n, 1) colouring found")  # n singleton classes always work


def dichromatic(D: Digraph, *, decompose: bool = True) -> int:
    """Least number of acyclic classes in a vertex partition; 1 iff D is
    acyclic.  Decomposes over strong components by default."""
    if not decompose:
        return _least_k_acyclic(D)[0]
    best = 1
    for comp in strong_components(D).components:
        sub = induced_subdigraph(D, comp)
        best = max(best, _least_k_acyclic(sub)[0])
    return best


def _min_ratio(D: Digraph, probe, paranoid: bool):
    """Shared ladder driver: integer parameter first, then the rational
    ladder on (chi - 1, chi] with numerators bounded by |V|."""
    chi, nodes0 = _least_k_acyclic(D)
    ladder = candidate_fractions(D.n, chi - 1, chi).fractions
    value, witness, nodes, tested = _ladder_scan(ladder, probe, paranoid)
    return value, witness, nodes0 + nodes, tested


def star_dichromatic(
    D: Digraph, *, paranoid: bool = False, decompose: bool = True
) -> SolverResult:
    """Minimum ratio k/d over acyclic window colourings.

    With decompose (default) the value is the maximum over strongly
    connected components; the returned witness is still a colouring of all
    of D at the maximising (k, d), assembled per component (directed cycles
    never cross component boundaries)."""
    if not decompose:
        value, witness, nodes, tested = _min_ratio(
            D, lambda f: _probe_acyclic(D, f.numerator, f.denominator), paranoid
        )
        result = SolverResult(value, witness, SolveStats(nodes, tuple(tested)))
    else:
        comps = strong_components(D).components
        total_nodes = 0
        tested_all: list[tuple[Fraction, bool]] = []
        value = Fraction(1)
        for comp in comps:
            sub = induced_subdigraph(D, comp)
            v, _, nodes, tested = _min_ratio(
                sub, lambda f: _probe_acyclic(sub, f.numerator, f.denominator), paranoid
            )
            total_nodes += nodes
            tested_all += tested
            if v > value:
                value = v
        k, d = value.numerator, value.denominator
        colours = [0] * D.n
        for comp in comps:
            sub = induced_subdigraph(D, comp)
            witness, nodes = _probe_acyclic(sub, k, d)
            total_nodes += nodes
            if witness is None:
                raise AssertionError("component infeasible at the final ratio")
            for local, v_glob in enumerate(comp):
                colours[v_glob] = witness.colours[local]
        result = SolverResult(
            value,
            CircularColouring(k, d, tuple(colours)),
            SolveStats(total_nodes, tuple(tested_all)),
        )
    if check_acyclic_kd(D, result.witness) is not None:
        raise AssertionError("star witness failed verification")
    return result


def circular_dichromatic(D: Digraph, *, paranoid: bool = False) -> SolverResult:
    """Minimum ratio k/d over circular colourings.  Always solved on the
    whole digraph: directed cuts are not transparent for this parameter."""
    value, witness, nodes, tested = _min_ratio(
        D, lambda f: _probe_circular(D, f.numerator, f.denominator), paranoid
    )
    if check_circular_kd(D, witness) is not None:
        raise AssertionError("circular witness failed verification")
    return SolverResult(value, witness, SolveStats(nodes, tuple(tested)))


def circular_vertex_arboricity(
    G: Graph, numerator_cap: int | None = None, *, paranoid: bool = False
) -> SolverResult:
    """Minimum ratio k/d over tree colourings of a graph.

    The reported value is the least feasible ratio with numerator at most
    numerator_cap (default |V|), hence exact whenever the true optimum is
    attained within the cap."""
    cap = G.n if numerator_cap is None else numerator_cap
    if cap < 1:
        raise ValueError("numerator cap must be positive")
    nodes_total = 0
    va = None
    for k in range(1, G.n + 1):
        witness, nodes = _probe_tree(G, k, 1)
        nodes_total += nodes
        if witness is not None:
            va = k
            break
    if va is None:
        raise AssertionError("no (n, 1) tree colouring found")
    if cap < va:
        raise ValueError(
            f"numerator cap {cap} lies below the integer vertex arboricity {va}"
        )
    ladder = candidate_fractions(cap, va - 1, va).fractions
    value, witness, nodes, tested = _ladder_scan(
        ladder, lambda f: _probe_tree(G, f.numerator, f.denominator), paranoid
    )
    if check_tree_kd(G, witness) is not None:
        raise AssertionError("tree witness failed verification")
    return SolverResult(value, witness, SolveStats(nodes_total + nodes, tuple(tested)))


# ----------------------------------------------------------------------------
# largest acyclic induced set


def _shortest_cycle_in_mask(out_masks, mask: int):
    """Vertex tuple of a shortest directed cycle within mask, or None.
    BFS from every vertex with parent reconstruction."""
    n = len(out_masks)
    best = None
    for s in range(n):
        if not (mask >> s) & 1:
            continue
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        qi = 0
        closing = None
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            nbrs = out_masks[x] & mask
            while nbrs:
                bit = nbrs & -nbrs
                nbrs ^= bit
                y = bit.bit_length() - 1
                if y == s:
                    closing = x
                    qi = len(queue)  # shortest cycle through s found
                    break
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
        if closing is not None:
            length = dist[closing] + 1
            if best is None or length < len(best):
                cyc = []
                x = closing
                while x != -1:
                    cyc.append(x)
                    x = parent[x]
                cyc.reverse()
                best = cyc
                if length == 2:
                    break
    if best is None:
        return None
    return tuple(best)


def alpha(D: Digraph) -> int:
    """Largest size of a vertex set inducing an acyclic subdigraph.

    Branch and bound on a shortest cycle of the remaining digraph: the cycle
    must lose at least one vertex, so branch on deleting each in turn."""
    out = D.out_masks
    best = 0
    seen: set[int] = set()

    def visit(mask: int) -> None:
        nonlocal best
        if mask in seen or mask.bit_count() <= best:
            return
        seen.add(mask)
        cyc = _shortest_cycle_in_mask(out, mask)
        if cyc is None:
            best = mask.bit_count()
            return
        for v in cyc:
            visit(mask & ~(1 << v))

    visit((1 << D.n) - 1)
    return best


# ----------------------------------------------------------------------------
# orientation sweeps


_SWEEP_PARAMS = ("star", "circular", "fractional", "dichromatic")


def _evaluate_orientation(D: Digraph, parameter: str) -> Fraction:
    if parameter == "star":
        return star_dichromatic(D).value
    if parameter == "circular":
        return circular_dichromatic(D).value
    if parameter == "dichromatic":
        return Fraction(dichromatic(D))
    if parameter == "fractional":
        from . import lp  # local import: lp depends on this module

        return lp.fractional_dichromatic(D).value
    raise ValueError(f"unknown sweep parameter {parameter!r}")


def _wheel_transforms(G: Graph, rim: int):
    """Edge-index maps for the dihedral symmetries of the wheel with rim
    vertices 0..rim-1 and hub rim.  Each transform is a list of
    (source_index, flip) per edge position."""
    if G.n != rim + 1:
        raise ValueError("wheel symmetry requires the wheel layout (hub last)")
    eindex = {e: i for i, e in enumerate(G.edges)}
    perms = []
    for shift in range(rim):
        for reflect in (False, True):
            perm = []
            for v in range(G.n):
                if v == rim:
                    perm.append(rim)
                elif reflect:
                    perm.append((shift - v) % rim)
                else:
                    perm.append((v + shift) % rim)
            perms.append(perm)
    transforms = []
    for perm in perms:
        table = [None] * len(G.edges)
        for i, (u, w) in enumerate(G.edges):
            pu, pw = perm[u], perm[w]
            flip = pu > pw
            key = (pw, pu) if flip else (pu, pw)
            j = eindex.get(key)
            if j is None:
                raise ValueError("wheel symmetry requires the wheel layout")
            table[j] = (i, flip)
        transforms.append(table)
    return transforms


def _canonical_mask(mask: int, transforms, m: int) -> int:
    best = mask
    for table in transforms:
        image = 0
        for j in range(m):
            i, flip = table[j]
            bit = (mask >> i) & 1
            if flip:
                bit ^= 1
            image |= bit << j
        if image < best:
            best = image
    return best


def sweep_orientations(
    G: Graph,
    parameter: str,
    *,
    edge_cap: int = 18,
    wheel_symmetry: int | None = None,
):
    """Maximum of a parameter over all orientations of G, with the first
    maximising orientation in bitmask order.

    wheel_symmetry=r prunes orientations equivalent under the hardcoded
    dihedral symmetry of the wheel with rim size r (hub last); the sweep
    then visits canonical representatives only, which is sound because every
    parameter here is invariant under digraph isomorphism."""
    if parameter not in _SWEEP_PARAMS:
        raise ValueError(f"unknown sweep parameter {parameter!r}")
    m = G.m
    if m > edge_cap:
        raise CapExceeded(f"{m} edges exceed the sweep cap of {edge_cap}")
    transforms = (
        _wheel_transforms(G, wheel_symmetry) if wheel_symmetry is not None else None
    )
    best = None
    best_orientation = None
    for mask in range(1 << m):
        if transforms is not None and _canonical_mask(mask, transforms, m) != mask:
            continue
        D = orientation(G, mask)
        value = _evaluate_orientation(D, parameter)
        if best is None or value > best:
            best = value
            best_orientation = D
    return best, best_orientation
