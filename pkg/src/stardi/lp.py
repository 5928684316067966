"""Exact fractional dichromatic number via a covering linear program.

The cover programme puts a weight on each inclusion-maximal acyclic vertex
set so that every vertex collects total weight at least 1, minimising the
total; the packing dual puts weight on vertices so that no acyclic set
carries more than 1.  One exact-rational simplex pass produces both optima,
and the pair is returned as a certificate whose feasibility and matching
objectives are re-verified by direct arithmetic, so equality pins the value
without trusting the solver.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction

from ._kernels_py import _cycle_through
from .graphs import (
    CapExceeded,
    Digraph,
    induced_subdigraph,
    is_acyclic,
    strong_components,
)
from .solvers import alpha


class LpInfeasible(ValueError):
    """No point satisfies the constraints."""


class LpUnbounded(ValueError):
    """The objective can be improved without limit."""


@dataclass(frozen=True)
class AcyclicSetSystem:
    """Column set of the cover programme: the inclusion-maximal acyclic
    vertex sets of one digraph, each sorted, listed in sorted order."""

    ground: int
    sets: tuple

    def __post_init__(self):
        if self.ground < 1:
            raise ValueError("ground set must be non-empty")
        sets = tuple(tuple(s) for s in self.sets)
        for s in sets:
            if not s or list(s) != sorted(set(s)) or s[0] < 0 or s[-1] >= self.ground:
                raise ValueError(f"malformed vertex set {s!r}")
        if len(set(sets)) != len(sets):
            raise ValueError("duplicate vertex set")
        object.__setattr__(self, "sets", sets)


@dataclass(frozen=True)
class LinearProgram:
    """A programme in one of two standard shapes over non-negative variables:
    sense "min" reads minimise objective.x subject to matrix.x >= rhs, and
    sense "max" reads maximise objective.x subject to matrix.x <= rhs.
    All entries are coerced to Fraction."""

    sense: str
    matrix: tuple
    rhs: tuple
    objective: tuple

    def __post_init__(self):
        if self.sense not in ("min", "max"):
            raise ValueError(f"unknown objective sense {self.sense!r}")
        matrix = tuple(tuple(Fraction(e) for e in row) for row in self.matrix)
        rhs = tuple(Fraction(b) for b in self.rhs)
        objective = tuple(Fraction(c) for c in self.objective)
        if not matrix or not objective:
            raise ValueError("the programme needs at least one row and one column")
        if len(rhs) != len(matrix):
            raise ValueError("one right-hand side per row required")
        if any(len(row) != len(objective) for row in matrix):
            raise ValueError("every row needs one entry per variable")
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "rhs", rhs)
        object.__setattr__(self, "objective", objective)


@dataclass(frozen=True)
class LpSolution:
    """Optimal primal and dual vectors with their shared objective value."""

    primal: tuple
    dual: tuple
    value: Fraction


@dataclass(frozen=True)
class LpCertificate:
    """Matched cover and packing optima for one digraph.

    cover lists (vertex set, weight) pairs of positive weight; packing holds
    one weight per vertex.  Once both sides pass verify_certificate, weak
    duality makes the shared total the exact optimum."""

    value: Fraction
    cover: tuple
    packing: tuple


def maximal_acyclic_sets(D: Digraph, cap: int = 16) -> AcyclicSetSystem:
    """Enumerate the inclusion-maximal acyclic vertex sets by an
    include/exclude walk over the vertices.  A branch only ever grows
    acyclically, so each leaf is acyclic and kept iff no left-out vertex
    can rejoin without closing a cycle."""
    if D.n > cap:
        raise CapExceeded(f"{D.n} vertices exceed the enumeration cap of {cap}")
    out = D.out_masks
    found = []

    def extend(v: int, mask: int) -> None:
        if v == D.n:
            for u in range(D.n):
                bit = 1 << u
                if not mask & bit and not _cycle_through(u, mask | bit, out):
                    return
            found.append(tuple(i for i in range(D.n) if (mask >> i) & 1))
            return
        bit = 1 << v
        if not _cycle_through(v, mask | bit, out):
            extend(v + 1, mask | bit)
        extend(v + 1, mask)

    extend(0, 0)
    found.sort()
    return AcyclicSetSystem(D.n, tuple(found))


def covering_lp(ground: int, sets) -> LinearProgram:
    """The fractional cover programme: one column per set, one row per
    ground element, unit demands, unit costs."""
    sets = tuple(tuple(s) for s in sets)
    if not sets:
        raise ValueError("a covering programme needs at least one set")
    one, zero = Fraction(1), Fraction(0)
    matrix = tuple(tuple(one if v in s else zero for s in sets) for v in range(ground))
    return LinearProgram("min", matrix, (one,) * ground, (one,) * len(sets))


def _simplex_max(matrix, rhs, objective) -> LpSolution:
    # maximise c.x over Ax <= b, x >= 0 with b >= 0, so the slack basis is
    # feasible from the start and no first phase is needed.  Bland's rule
    # (lowest eligible index on both picks) rules out cycling.
    m, n = len(matrix), len(objective)
    if any(b < 0 for b in rhs):
        raise ValueError("slack-basis simplex needs non-negative right-hand sides")
    rows = [
        list(matrix[i]) + [Fraction(int(i == j)) for j in range(m)] + [rhs[i]]
        for i in range(m)
    ]
    zrow = [-c for c in objective] + [Fraction(0)] * (m + 1)
    basis = list(range(n, n + m))
    while True:
        enter = next((j for j in range(n + m) if zrow[j] < 0), None)
        if enter is None:
            break
        leave, best = None, None
        for i in range(m):
            a = rows[i][enter]
            if a > 0:
                ratio = rows[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            raise LpUnbounded("the objective is unbounded above")
        pivot = rows[leave][enter]
        rows[leave] = [e / pivot for e in rows[leave]]
        for i in range(m):
            f = rows[i][enter]
            if i != leave and f:
                rows[i] = [e - f * p for e, p in zip(rows[i], rows[leave])]
        f = zrow[enter]
        zrow = [e - f * p for e, p in zip(zrow, rows[leave])]
        basis[leave] = enter
    primal = [Fraction(0)] * n
    for i, bv in enumerate(basis):
        if bv < n:
            primal[bv] = rows[i][-1]
    return LpSolution(tuple(primal), tuple(zrow[n : n + m]), zrow[-1])


def simplex_solve(lp: LinearProgram) -> LpSolution:
    """Solve either sense exactly.  A minimisation programme is routed
    through its packing dual, whose slack basis is feasible at once; the
    minimiser is then read off the final reduced costs of the dual's
    slacks.  Infeasibility and unboundedness raise LpInfeasible and
    LpUnbounded respectively."""
    if lp.sense == "max":
        return _simplex_max(lp.matrix, lp.rhs, lp.objective)
    n_rows, n_cols = len(lp.matrix), len(lp.objective)
    transpose = tuple(
        tuple(lp.matrix[i][j] for i in range(n_rows)) for j in range(n_cols)
    )
    try:
        sol = _simplex_max(transpose, lp.objective, lp.rhs)
    except LpUnbounded:
        raise LpInfeasible(
            "infeasible minimisation programme (its dual is unbounded)"
        ) from None
    return LpSolution(sol.dual, sol.primal, sol.value)


def verify_certificate(D: Digraph, cert: LpCertificate) -> None:
    """Re-check a certificate by direct arithmetic, raising ValueError at
    the first violated condition.  Nothing from the solving path is
    trusted: cover sets are re-tested for acyclicity, and the packing is
    re-tested against a fresh enumeration of the acyclic sets it loads."""
    coverage = [Fraction(0)] * D.n
    total = Fraction(0)
    for subset, weight in cert.cover:
        if weight <= 0:
            raise ValueError("cover weights must be positive")
        if not subset or list(subset) != sorted(set(subset)):
            raise ValueError(f"malformed cover set {subset!r}")
        if subset[0] < 0 or subset[-1] >= D.n:
            raise ValueError(f"cover set {subset!r} leaves the vertex range")
        if not is_acyclic(D, subset):
            raise ValueError(f"cover set {subset!r} induces a directed cycle")
        total += weight
        for v in subset:
            coverage[v] += weight
    for v in range(D.n):
        if coverage[v] < 1:
            raise ValueError(f"vertex {v} is covered with weight {coverage[v]} < 1")
    if len(cert.packing) != D.n:
        raise ValueError("one packing weight per vertex required")
    if any(y < 0 for y in cert.packing):
        raise ValueError("packing weights must be non-negative")
    support = [v for v in range(D.n) if cert.packing[v] > 0]
    if support:
        # y >= 0, so it suffices to bound the maximal acyclic sets of the
        # induced subdigraph on the support.
        sub = induced_subdigraph(D, support)
        for subset in maximal_acyclic_sets(sub, cap=sub.n).sets:
            load = sum(cert.packing[support[i]] for i in subset)
            if load > 1:
                raise ValueError(f"packing loads an acyclic set with {load} > 1")
    if total != cert.value or sum(cert.packing) != cert.value:
        raise ValueError("cover and packing totals must both equal the value")


def fractional_dichromatic(D: Digraph, cap: int = 16, decompose: bool = True) -> LpCertificate:
    """Exact optimum of the cover programme over D's acyclic vertex sets.

    Strong components are solved separately and recombined: each component
    cover is scaled to the common total and laid out as segments of
    [0, value), and every merged column takes one piece per component.
    Merged columns stay acyclic because directed cycles never cross a
    component boundary, and the packing of a heaviest component, padded
    with zeros, matches the total.  The assembled certificate is verified
    against the whole digraph before being returned, which also certifies
    its optimality."""
    if is_acyclic(D):
        cert = LpCertificate(
            Fraction(1),
            ((tuple(range(D.n)), Fraction(1)),),
            (Fraction(1),) + (Fraction(0),) * (D.n - 1),
        )
        verify_certificate(D, cert)
        return cert
    comps = strong_components(D).components
    if not decompose or len(comps) == 1:
        system = maximal_acyclic_sets(D, cap)
        sol = simplex_solve(covering_lp(system.ground, system.sets))
        cover = tuple((system.sets[j], w) for j, w in enumerate(sol.primal) if w > 0)
        cert = LpCertificate(sol.value, cover, sol.dual)
        verify_certificate(D, cert)
        return cert
    parts = []
    for comp in comps:
        vertices = sorted(comp)
        local = fractional_dichromatic(induced_subdigraph(D, vertices), cap, decompose=False)
        parts.append((vertices, local))
    value = max(local.value for _, local in parts)
    boundaries = {Fraction(0), value}
    layouts = []
    for vertices, local in parts:
        scale = value / local.value
        prefix, columns = [Fraction(0)], []
        for subset, weight in local.cover:
            prefix.append(prefix[-1] + weight * scale)
            columns.append(tuple(vertices[i] for i in subset))
        boundaries.update(prefix)
        layouts.append((prefix, columns))
    merged: dict = {}
    cuts = sorted(boundaries)
    for lo, hi in zip(cuts, cuts[1:]):
        union = []
        for prefix, columns in layouts:
            union += columns[bisect_right(prefix, lo) - 1]
        key = tuple(sorted(union))
        merged[key] = merged.get(key, Fraction(0)) + (hi - lo)
    packing = [Fraction(0)] * D.n
    vertices, heaviest = max(parts, key=lambda part: part[1].value)
    for i, y in enumerate(heaviest.packing):
        packing[vertices[i]] = y
    cert = LpCertificate(value, tuple(sorted(merged.items())), tuple(packing))
    verify_certificate(D, cert)
    return cert


def fractional_lower_bound(D: Digraph) -> Fraction:
    """n / alpha as a reduced Fraction: each cover column is an acyclic set,
    so it covers at most alpha vertices, while the demands sum to n."""
    return Fraction(D.n, alpha(D))
