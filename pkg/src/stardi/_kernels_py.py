"""Pure-Python search kernels (bitmask backtracking).

Reference implementation for the compiled kernels in ``_kernels_cy``: both
backends must visit search nodes in the same order, return the same witness
and report the same node count, so either can stand in for the other.

Every kernel takes the vertex count, the candidate pair (k, d), neighbour
bitmasks and a vertex ordering; ``order[0]`` is pinned to colour 0, which is
sound because all three constraint families are invariant under rotating the
colour circle.  Returns (colours | None, nodes): colours is the
lexicographically least feasible assignment along ``order`` with colours
tried ascending, and an exhausted search proves infeasibility.
"""

from __future__ import annotations

BACKEND = "python"
MAX_VERTICES = None  # unbounded (Python ints)


def _cycle_through(v, mask, out_masks):
    # Directed cycle through v inside mask | {v}: breadth-first reachability
    # from v's out-neighbours, looking for an arc back into v.
    S = mask | (1 << v)
    target = 1 << v
    frontier = out_masks[v] & mask
    reach = 0
    while frontier:
        reach |= frontier
        nxt = 0
        f = frontier
        while f:
            bit = f & -f
            f ^= bit
            nxt |= out_masks[bit.bit_length() - 1]
        if nxt & target:
            return True
        frontier = nxt & S & ~reach
    return False


def search_acyclic(n, k, d, out_masks, order):
    """Acyclic window colouring: every window preimage stays acyclic.

    Incremental pruning: per window, the bitmask of coloured vertices whose
    colour lies in the window; assigning colour c touches the d windows
    containing c, and each must not acquire a directed cycle through v."""
    colours = [-1] * n
    window = [0] * k
    nodes = 0

    def place(idx):
        nonlocal nodes
        nodes += 1
        if idx == n:
            return True
        v = order[idx]
        bit = 1 << v
        for c in range(1 if idx == 0 else k):
            ok = True
            for t in range(d):
                i = c - t
                if i < 0:
                    i += k
                if _cycle_through(v, window[i], out_masks):
                    ok = False
                    break
            if not ok:
                continue
            for t in range(d):
                i = c - t
                if i < 0:
                    i += k
                window[i] |= bit
            colours[v] = c
            if place(idx + 1):
                return True
            colours[v] = -1
            for t in range(d):
                i = c - t
                if i < 0:
                    i += k
                window[i] &= ~bit
        return False

    found = place(0)
    return (tuple(colours) if found else None), nodes


def search_circular(n, k, d, out_masks, in_masks, order):
    """Circular colouring: every arc (u, w) needs (c(w) - c(u)) mod k >= d or
    equal colours, and every colour class stays acyclic."""
    colours = [-1] * n
    klass = [0] * k
    nodes = 0

    def place(idx, coloured):
        nonlocal nodes
        nodes += 1
        if idx == n:
            return True
        v = order[idx]
        bit = 1 << v
        for c in range(1 if idx == 0 else k):
            ok = True
            f = out_masks[v] & coloured
            while f:
                b = f & -f
                f ^= b
                diff = (colours[b.bit_length() - 1] - c) % k
                if diff != 0 and diff < d:
                    ok = False
                    break
            if ok:
                f = in_masks[v] & coloured
                while f:
                    b = f & -f
                    f ^= b
                    diff = (c - colours[b.bit_length() - 1]) % k
                    if diff != 0 and diff < d:
                        ok = False
                        break
            if ok and _cycle_through(v, klass[c], out_masks):
                ok = False
            if not ok:
                continue
            klass[c] |= bit
            colours[v] = c
            if place(idx + 1, coloured | bit):
                return True
            colours[v] = -1
            klass[c] &= ~bit
        return False

    found = place(0, 0)
    return (tuple(colours) if found else None), nodes


def _flood(x, S, adj_masks):
    comp = 0
    frontier = 1 << x
    while frontier:
        comp |= frontier
        nxt = 0
        f = frontier
        while f:
            bit = f & -f
            f ^= bit
            nxt |= adj_masks[bit.bit_length() - 1]
        frontier = nxt & S & ~comp
    return comp


def _closes_undirected_cycle(v, S, adj_masks):
    # v closes a cycle in G[S + v] iff two of its neighbours in S share a
    # connected component of G[S].
    nb = adj_masks[v] & S
    if nb & (nb - 1) == 0:
        return False
    rem = nb
    while rem:
        bit = rem & -rem
        comp = _flood(bit.bit_length() - 1, S, adj_masks)
        if comp & nb & ~bit:
            return True
        rem &= ~comp
    return False


def search_tree(n, k, d, adj_masks, order):
    """Tree colouring of a graph: every window preimage induces a forest."""
    colours = [-1] * n
    window = [0] * k
    nodes = 0

    def place(idx):
        nonlocal nodes
        nodes += 1
        if idx == n:
            return True
        v = order[idx]
        bit = 1 << v
        for c in range(1 if idx == 0 else k):
            ok = True
            for t in range(d):
                i = c - t
                if i < 0:
                    i += k
                if _closes_undirected_cycle(v, window[i], adj_masks):
                    ok = False
                    break
            if not ok:
                continue
            for t in range(d):
                i = c - t
                if i < 0:
                    i += k
                window[i] |= bit
            colours[v] = c
            if place(idx + 1):
                return True
            colours[v] = -1
            for t in range(d):
                i = c - t
                if i < 0:
                    i += k
                window[i] &= ~bit
        return False

    found = place(0)
    return (tuple(colours) if found else None), nodes
