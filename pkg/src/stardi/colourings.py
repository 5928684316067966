"""Witness colourings and feasibility checkers.

A colouring assigns to every vertex a colour in Z_k.  The cyclic window
W_i = {i, i+1, ..., i+d-1} (mod k) is the width-d block starting at i; the
four checkers below decide, for a total colouring, the window/arc/class
conditions of the colouring notions handled by the solvers.  Each checker is
naive on purpose (it re-derives everything from the definition) so it can act
as an independent referee for search output.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    Digraph,
    Graph,
    ParseError,
    find_directed_cycle,
    find_undirected_cycle,
)


@dataclass(frozen=True)
class CircularColouring:
    """A total assignment V -> Z_k together with the window width d."""

    k: int
    d: int
    colours: tuple[int, ...]

    def __post_init__(self):
        if not (isinstance(self.k, int) and isinstance(self.d, int)):
            raise ValueError("k and d must be integers")
        if not 1 <= self.d <= self.k:
            raise ValueError(f"need 1 <= d <= k, got d={self.d}, k={self.k}")
        object.__setattr__(self, "colours", tuple(self.colours))
        for v, c in enumerate(self.colours):
            if not isinstance(c, int) or not 0 <= c < self.k:
                raise ValueError(f"colour {c!r} of vertex {v} not in [0, {self.k})")

    def rotated(self, r: int) -> "CircularColouring":
        return CircularColouring(
            self.k, self.d, tuple((c + r) % self.k for c in self.colours)
        )

    def reflected(self) -> "CircularColouring":
        return CircularColouring(
            self.k, self.d, tuple((-c) % self.k for c in self.colours)
        )


@dataclass(frozen=True)
class Violation:
    """First failure found by a checker, with a concrete witness.

    kind is one of "cyclic-window", "short-arc", "cyclic-class",
    "cyclic-window-undirected".  The cycle witness (when present) lists
    vertices in cycle order.
    """

    kind: str
    window: int | None = None
    arc: tuple[int, int] | None = None
    colour_class: int | None = None
    cycle: tuple[int, ...] | None = None

    def __str__(self) -> str:
        if self.kind == "cyclic-window":
            return (
                f"cyclic-window: window {self.window} preimage contains the "
                f"directed cycle {'->'.join(map(str, self.cycle))}->{self.cycle[0]}"
            )
        if self.kind == "short-arc":
            u, w = self.arc
            return f"short-arc: arc ({u}, {w}) spans fewer than d colour steps"
        if self.kind == "cyclic-class":
            return (
                f"cyclic-class: colour class {self.colour_class} contains the "
                f"directed cycle {'->'.join(map(str, self.cycle))}->{self.cycle[0]}"
            )
        if self.kind == "cyclic-window-undirected":
            return (
                f"cyclic-window-undirected: window {self.window} preimage "
                f"contains the cycle {'-'.join(map(str, self.cycle))}-{self.cycle[0]}"
            )
        return f"violation: {self.kind}"


def _require_total(n: int, colouring: CircularColouring) -> None:
    if len(colouring.colours) != n:
        raise ValueError(
            f"partial colouring: {len(colouring.colours)} colours for {n} vertices"
        )


def _window_preimage(colouring: CircularColouring, i: int) -> list[int]:
    k, d = colouring.k, colouring.d
    return [v for v, c in enumerate(colouring.colours) if (c - i) % k < d]


def check_acyclic_kd(D: Digraph, colouring: CircularColouring):
    """None when every window preimage induces an acyclic subdigraph,
    else the first Violation scanning windows 0..k-1 ascending."""
    _require_total(D.n, colouring)
    for i in range(colouring.k):
        cyc = find_directed_cycle(D, _window_preimage(colouring, i))
        if cyc is not None:
            return Violation("cyclic-window", window=i, cycle=cyc)
    return None


def check_circular_kd(D: Digraph, colouring: CircularColouring):
    """Arc rule ((c(w) - c(u)) mod k >= d, or equal colours) plus acyclic
    colour classes.  Arcs are scanned lexicographically, then classes
    ascending."""
    _require_total(D.n, colouring)
    k, d = colouring.k, colouring.d
    col = colouring.colours
    for u, w in D.arcs:
        diff = (col[w] - col[u]) % k
        if diff != 0 and diff < d:
            return Violation("short-arc", arc=(u, w))
    for i in range(k):
        cyc = find_directed_cycle(D, [v for v, c in enumerate(col) if c == i])
        if cyc is not None:
            return Violation("cyclic-class", colour_class=i, cycle=cyc)
    return None


def check_partition_k(D: Digraph, colouring: CircularColouring):
    """d = 1 specialisation of check_acyclic_kd: the windows are exactly the
    colour classes, so this checks a partition into k acyclic sets."""
    if colouring.d != 1:
        raise ValueError("partition check requires d = 1")
    return check_acyclic_kd(D, colouring)


def check_tree_kd(G: Graph, colouring: CircularColouring):
    """None when every window preimage induces a forest, else the first
    Violation scanning windows ascending."""
    _require_total(G.n, colouring)
    for i in range(colouring.k):
        cyc = find_undirected_cycle(G, _window_preimage(colouring, i))
        if cyc is not None:
            return Violation("cyclic-window-undirected", window=i, cycle=cyc)
    return None


# ----------------------------------------------------------------------------
# colouring files: one "<vertex> <colour>" line per vertex


def parse_colouring(text, n: int, k: int, d: int) -> CircularColouring:
    if isinstance(text, (bytes, bytearray)):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not ASCII text: {exc}") from exc
    colours: dict[int, int] = {}
    for ln, raw in enumerate(text.split("\n"), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        if len(tokens) != 2:
            raise ParseError(f"malformed colouring record at line {ln}")
        try:
            v = int(tokens[0])
            c = int(tokens[1])
        except ValueError:
            raise ParseError(f"malformed colouring record at line {ln}") from None
        if not 0 <= v < n:
            raise ParseError(f"vertex out of range at line {ln}")
        if not 0 <= c < k:
            raise ParseError(f"colour out of range at line {ln}")
        if v in colours:
            raise ParseError(f"duplicate vertex at line {ln}")
        colours[v] = c
    missing = [v for v in range(n) if v not in colours]
    if missing:
        raise ParseError(f"missing colour for vertex {missing[0]}")
    return CircularColouring(k, d, tuple(colours[v] for v in range(n)))


def serialize_colouring(colouring: CircularColouring) -> str:
    return "".join(f"{v} {c}\n" for v, c in enumerate(colouring.colours))
