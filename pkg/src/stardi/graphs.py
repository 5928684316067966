"""Loopless digraphs and simple graphs on dense integer vertices, plus the
line-oriented text interchange format.

Vertices are always 0..n-1.  Digons (anti-parallel arc pairs) are allowed,
loops and multi-arcs are not.  All objects are immutable after construction
and every function in this module is pure.
"""

from __future__ import annotations

from dataclasses import dataclass


class ParseError(ValueError):
    """Malformed input text (graph, digraph or colouring file)."""


class CapExceeded(RuntimeError):
    """An operation was asked to exceed its configured size cap."""


def _check_vertex(v: int, n: int) -> None:
    if not isinstance(v, int) or isinstance(v, bool):
        raise ValueError(f"vertex {v!r} is not an integer")
    if not 0 <= v < n:
        raise ValueError(f"vertex {v} out of range [0, {n})")


class Digraph:
    """A loopless directed graph; anti-parallel arc pairs are permitted."""

    __slots__ = ("n", "arcs", "_out", "_in", "_adj")

    def __init__(self, n: int, arcs=()) -> None:
        if not isinstance(n, int) or n < 1:
            raise ValueError("vertex count must be a positive integer")
        seen = set()
        for u, w in arcs:
            _check_vertex(u, n)
            _check_vertex(w, n)
            if u == w:
                raise ValueError(f"loop at vertex {u}")
            if (u, w) in seen:
                raise ValueError(f"duplicate arc ({u}, {w})")
            seen.add((u, w))
        self.n = n
        self.arcs = tuple(sorted(seen))
        self._out = None
        self._in = None
        self._adj = None

    @property
    def m(self) -> int:
        return len(self.arcs)

    @property
    def out_masks(self) -> tuple[int, ...]:
        """Bitmask of out-neighbours per vertex."""
        if self._out is None:
            out = [0] * self.n
            for u, w in self.arcs:
                out[u] |= 1 << w
            self._out = tuple(out)
        return self._out

    @property
    def in_masks(self) -> tuple[int, ...]:
        if self._in is None:
            inc = [0] * self.n
            for u, w in self.arcs:
                inc[w] |= 1 << u
            self._in = tuple(inc)
        return self._in

    @property
    def adj_masks(self) -> tuple[int, ...]:
        """Neighbour bitmasks in the underlying graph (digons merge)."""
        if self._adj is None:
            self._adj = tuple(o | i for o, i in zip(self.out_masks, self.in_masks))
        return self._adj

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Digraph)
            and self.n == other.n
            and self.arcs == other.arcs
        )

    def __hash__(self) -> int:
        return hash(("Digraph", self.n, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={list(self.arcs)})"


class Graph:
    """A simple undirected graph; edges are stored as sorted pairs."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges=()) -> None:
        if not isinstance(n, int) or n < 1:
            raise ValueError("vertex count must be a positive integer")
        seen = set()
        for u, w in edges:
            _check_vertex(u, n)
            _check_vertex(w, n)
            if u == w:
                raise ValueError(f"loop at vertex {u}")
            e = (u, w) if u < w else (w, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        self.n = n
        self.edges = tuple(sorted(seen))
        self._adj = None

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def adj_masks(self) -> tuple[int, ...]:
        if self._adj is None:
            adj = [0] * self.n
            for u, w in self.edges:
                adj[u] |= 1 << w
                adj[w] |= 1 << u
            self._adj = tuple(adj)
        return self._adj

    def degree(self, v: int) -> int:
        return self.adj_masks[v].bit_count()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash(("Graph", self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class SccDecomposition:
    """Ordered partition into strongly connected blocks.

    Blocks are listed in a topological order of the condensation: every arc
    between distinct blocks goes from an earlier block to a later one.
    Within a block, vertices are ascending.
    """

    components: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def block_of(self, v: int) -> int:
        for i, comp in enumerate(self.components):
            if v in comp:
                return i
        raise ValueError(f"vertex {v} not in decomposition")


# ----------------------------------------------------------------------------
# text interchange format


def parse_digraph(text):
    """Parse the line format ("p dg n m" + "a u v" records, or "p ug n m" +
    "e u v") into a Digraph or a Graph.  Errors carry 1-based line numbers."""
    if isinstance(text, (bytes, bytearray)):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not ASCII text: {exc}") from exc
    kind = None
    n = m = 0
    header_line = 0
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    last_line = 0
    for ln, raw in enumerate(text.split("\n"), start=1):
        last_line = ln
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if kind is not None:
                raise ParseError(f"duplicate header at line {ln}")
            if len(tokens) != 4 or tokens[1] not in ("dg", "ug"):
                raise ParseError(f"malformed header at line {ln}")
            try:
                n = int(tokens[2])
                m = int(tokens[3])
            except ValueError:
                raise ParseError(f"malformed header at line {ln}") from None
            if n < 1 or m < 0:
                raise ParseError(f"malformed header at line {ln}")
            kind = tokens[1]
            header_line = ln
            continue
        if kind is None:
            raise ParseError(f"record before header at line {ln}")
        tag = "a" if kind == "dg" else "e"
        noun = "arc" if kind == "dg" else "edge"
        if tokens[0] != tag:
            raise ParseError(f"expected '{tag}' record at line {ln}")
        if len(pairs) == m:
            raise ParseError(f"unexpected extra {noun} at line {ln}")
        if len(tokens) != 3:
            raise ParseError(f"malformed {noun} record at line {ln}")
        try:
            u = int(tokens[1])
            w = int(tokens[2])
        except ValueError:
            raise ParseError(f"malformed {noun} record at line {ln}") from None
        if u == w:
            raise ParseError(f"loop at line {ln}")
        if not (0 <= u < n and 0 <= w < n):
            raise ParseError(f"endpoint out of range at line {ln}")
        if kind == "ug" and u > w:
            u, w = w, u
        if (u, w) in seen:
            raise ParseError(f"duplicate {noun} at line {ln}")
        seen.add((u, w))
        pairs.append((u, w))
    if kind is None:
        raise ParseError(f"missing header (no 'p' line in {last_line} lines)")
    if len(pairs) != m:
        noun = "arc" if kind == "dg" else "edge"
        raise ParseError(
            f"{noun} count mismatch at line {header_line}: "
            f"declared {m}, found {len(pairs)}"
        )
    if kind == "dg":
        return Digraph(n, pairs)
    return Graph(n, pairs)


def serialize(obj) -> str:
    """Canonical text form: header, then records sorted lexicographically.

    serialize/parse_digraph round-trip bit-exactly (comments are dropped)."""
    if isinstance(obj, Digraph):
        lines = [f"p dg {obj.n} {obj.m}"]
        lines += [f"a {u} {w}" for u, w in obj.arcs]
    elif isinstance(obj, Graph):
        lines = [f"p ug {obj.n} {obj.m}"]
        lines += [f"e {u} {w}" for u, w in obj.edges]
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------------
# structural queries


def _subset_mask(n: int, subset) -> int:
    mask = 0
    for v in subset:
        _check_vertex(v, n)
        mask |= 1 << v
    return mask


def _mask_is_acyclic(out_masks, mask: int) -> bool:
    # Repeatedly peel vertices with no out-neighbour inside the mask; a
    # non-empty residue means every remaining vertex lies on a cycle chain.
    while mask:
        peeled = False
        rem = mask
        while rem:
            bit = rem & -rem
            rem ^= bit
            if out_masks[bit.bit_length() - 1] & mask == 0:
                mask ^= bit
                peeled = True
        if not peeled:
            return False
    return True


def is_acyclic(D: Digraph, subset=None) -> bool:
    """Whether the subdigraph induced by `subset` (default: all vertices)
    contains no directed cycle.  A digon counts as a 2-cycle."""
    mask = (1 << D.n) - 1 if subset is None else _subset_mask(D.n, subset)
    return _mask_is_acyclic(D.out_masks, mask)


def _rotate_min_first(cycle: list[int]) -> tuple[int, ...]:
    i = cycle.index(min(cycle))
    return tuple(cycle[i:] + cycle[:i])


def find_directed_cycle(D: Digraph, subset=None):
    """A directed cycle inside the induced subdigraph as a vertex tuple
    (consecutive entries are arcs, last wraps to first), or None.
    Deterministic: smallest-vertex walk on the peeled core."""
    mask = (1 << D.n) - 1 if subset is None else _subset_mask(D.n, subset)
    out = D.out_masks
    # peel to the core where every vertex keeps an out-neighbour
    while mask:
        peeled = False
        rem = mask
        while rem:
            bit = rem & -rem
            rem ^= bit
            if out[bit.bit_length() - 1] & mask == 0:
                mask ^= bit
                peeled = True
        if not peeled:
            break
    if not mask:
        return None
    path: list[int] = []
    pos: dict[int, int] = {}
    v = (mask & -mask).bit_length() - 1
    while v not in pos:
        pos[v] = len(path)
        path.append(v)
        v = ((out[v] & mask) & -(out[v] & mask)).bit_length() - 1
    return _rotate_min_first(path[pos[v]:])


def find_undirected_cycle(G: Graph, subset=None):
    """A cycle of the induced subgraph as a vertex tuple, or None."""
    mask = (1 << G.n) - 1 if subset is None else _subset_mask(G.n, subset)
    adj = G.adj_masks
    visited = 0
    rem = mask
    while rem:
        root_bit = rem & -rem
        root = root_bit.bit_length() - 1
        # iterative DFS with parent tracking; a visited non-parent neighbour
        # closes a cycle
        parent = {root: -1}
        stack = [root]
        visited |= root_bit
        while stack:
            v = stack.pop()
            nbrs = adj[v] & mask
            while nbrs:
                bit = nbrs & -nbrs
                nbrs ^= bit
                w = bit.bit_length() - 1
                if w == parent[v]:
                    continue
                if w in parent:
                    # walk both ancestor chains back to the meeting point
                    av, aw = v, w
                    anc_v = []
                    while av != -1:
                        anc_v.append(av)
                        av = parent[av]
                    anc_set = set(anc_v)
                    path_w = []
                    while aw not in anc_set:
                        path_w.append(aw)
                        aw = parent[aw]
                    cyc = []
                    for x in anc_v:
                        cyc.append(x)
                        if x == aw:
                            break
                    cyc.reverse()
                    cyc += path_w
                    if len(cyc) >= 3:
                        return _rotate_min_first(cyc)
                    continue
                parent[w] = v
                visited |= bit
                stack.append(w)
        rem = mask & ~visited
    return None


def is_forest(G: Graph, subset=None) -> bool:
    return find_undirected_cycle(G, subset) is None


def strong_components(D: Digraph) -> SccDecomposition:
    """Tarjan's algorithm; blocks come out in topological order of the
    condensation.  Deterministic: roots and neighbours ascending."""
    n = D.n
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, w in D.arcs:
        adj[u].append(w)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[tuple[int, ...]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work: list[list[int]] = [[root, 0]]
        while work:
            v, ptr = work[-1]
            if ptr == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            descended = False
            while ptr < len(adj[v]):
                w = adj[v][ptr]
                ptr += 1
                if index[w] == -1:
                    work[-1][1] = ptr
                    work.append([w, 0])
                    descended = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if descended:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(tuple(sorted(comp)))
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    comps.reverse()
    return SccDecomposition(tuple(comps))


def digirth(D: Digraph):
    """Length of a shortest directed cycle, or None when D is acyclic.
    A digon gives digirth 2.  BFS from every vertex."""
    n = D.n
    out_lists: list[list[int]] = [[] for _ in range(n)]
    for u, w in D.arcs:
        out_lists[u].append(w)
    in_lists: list[list[int]] = [[] for _ in range(n)]
    for u, w in D.arcs:
        in_lists[w].append(u)
    best = None
    for v in range(n):
        dist = [-1] * n
        dist[v] = 0
        queue = [v]
        qi = 0
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            for y in out_lists[x]:
                if dist[y] == -1:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        for u in in_lists[v]:
            if dist[u] != -1:
                cand = dist[u] + 1
                if best is None or cand < best:
                    best = cand
    return best


def underlying_graph(D: Digraph) -> Graph:
    """Forget orientation; digons collapse to a single edge."""
    return Graph(D.n, {(u, w) if u < w else (w, u) for u, w in D.arcs})


def induced_subdigraph(D: Digraph, vertices) -> Digraph:
    """Induced subdigraph relabelled to 0..len(vertices)-1 following the
    sorted order of `vertices`."""
    vs = sorted(set(vertices))
    for v in vs:
        _check_vertex(v, D.n)
    pos = {v: i for i, v in enumerate(vs)}
    arcs = [(pos[u], pos[w]) for u, w in D.arcs if u in pos and w in pos]
    return Digraph(len(vs), arcs)
