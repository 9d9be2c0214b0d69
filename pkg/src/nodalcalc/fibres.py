"""Dual graphs of degenerate fibres and disjoint (-2)-curve capacities.

Kodaira fibre graphs are built from their type parameters and every
capacity is computed as a maximum independent set of the (-2)-components,
never entered by hand.  The same graph type also models ruled fibres under
blow-ups.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cache

__all__ = [
    "DualGraph",
    "KodairaFibre",
    "max_independent_set",
    "fibre_types",
    "elliptic_fibre_search",
    "blowup_configurations",
    "ruled_fibre_certificate",
]


@dataclass(frozen=True)
class DualGraph:
    """Components with self-intersections; ``None`` marks a singular component."""

    self_intersections: tuple[int | None, ...]
    edges: frozenset[tuple[int, int]]

    @classmethod
    def build(cls, self_intersections, edges) -> "DualGraph":
        return cls(
            tuple(self_intersections),
            frozenset((min(i, j), max(i, j)) for i, j in edges if i != j),
        )

    @property
    def size(self) -> int:
        return len(self.self_intersections)

    def neighbours(self, v: int) -> set[int]:
        return {j if i == v else i for i, j in self.edges if v in (i, j)}

    def nodal_vertices(self) -> list[int]:
        return [i for i, s in enumerate(self.self_intersections) if s == -2]

    def nodal_capacity(self) -> int:
        nodal = self.nodal_vertices()
        adj = {v: self.neighbours(v) & set(nodal) for v in nodal}
        return len(max_independent_set(adj))


def max_independent_set(adj: dict[int, set[int]]) -> frozenset[int]:
    """Maximum independent set by branching on a vertex of maximal degree.

    Ties are broken by the smallest vertex and the larger branch wins, with
    the exclude branch preferred on equal size.
    """

    def go(vertices: frozenset[int]) -> frozenset[int]:
        if not vertices:
            return frozenset()
        v = min(vertices, key=lambda u: (-len(adj[u] & vertices), u))
        if not adj[v] & vertices:
            return go(vertices - {v}) | {v}
        without = go(vertices - {v})
        with_v = go(vertices - {v} - adj[v]) | {v}
        return with_v if len(with_v) > len(without) else without

    return go(frozenset(adj))


_NAME_RE = re.compile(r"^\s*(I|II|III|IV)_?(\d*)(\*?)\s*$")
_SPORADIC = ("II", "III", "IV", "IV*", "III*", "II*")


@dataclass(frozen=True, order=True)
class KodairaFibre:
    """Fibre type ``I_n``, ``I_n*`` (``n >= 0``) or one of II, III, IV, IV*, III*, II*."""

    family: str
    n: int = 0

    def __post_init__(self):
        if self.family in ("I", "I*"):
            if self.n < 0:
                raise ValueError("n must be nonnegative")
        elif self.family in _SPORADIC:
            if self.n:
                raise ValueError(f"{self.family} takes no index")
        else:
            raise ValueError(f"unknown fibre type {self.family!r}")

    @classmethod
    def parse(cls, name: str) -> "KodairaFibre":
        m = _NAME_RE.match(name)
        if m is None:
            raise ValueError(f"unknown fibre type {name!r}")
        roman, digits, star = m.groups()
        if roman == "I" and not digits:
            raise ValueError(f"fibre type {name!r} needs an index")
        if roman == "I":
            return cls("I*" if star else "I", int(digits))
        if digits:
            raise ValueError(f"unknown fibre type {name!r}")
        return cls(roman + star)

    @property
    def name(self) -> str:
        if self.family == "I":
            return f"I{self.n}"
        if self.family == "I*":
            return f"I{self.n}*"
        return self.family

    def __str__(self):
        return self.name

    @property
    def euler(self) -> int:
        if self.family == "I":
            return self.n
        if self.family == "I*":
            return self.n + 6
        return {"II": 2, "III": 3, "IV": 4, "IV*": 8, "III*": 9, "II*": 10}[self.family]

    def dual_graph(self) -> DualGraph:
        return _dual_graph(self.family, self.n)

    @property
    def nodal_capacity(self) -> int:
        return _capacity(self.family, self.n)


def _tree_from_arms(arms: tuple[int, ...]) -> DualGraph:
    # a centre with arms of the given lengths, all (-2)-curves
    sis = [-2]
    edges = []
    for length in arms:
        prev = 0
        for _ in range(length):
            sis.append(-2)
            edges.append((prev, len(sis) - 1))
            prev = len(sis) - 1
    return DualGraph.build(sis, edges)


@cache
def _dual_graph(family: str, n: int) -> DualGraph:
    if family == "I":
        if n == 0:
            return DualGraph.build([], [])
        if n == 1:
            return DualGraph.build([None], [])
        # I_2: two curves meeting twice; as a simple graph still one edge
        return DualGraph.build([-2] * n, [(i, (i + 1) % n) for i in range(n)])
    if family == "I*":
        # affine D_{n+4}: a chain of n+1 centre curves, two leaves at each end
        chain = list(range(n + 1))
        leaves = [n + 1, n + 2, n + 3, n + 4]
        edges = [(i, i + 1) for i in range(n)]
        edges += [(0, leaves[0]), (0, leaves[1]), (n, leaves[2]), (n, leaves[3])]
        return DualGraph.build([-2] * (len(chain) + 4), edges)
    if family == "II":
        return DualGraph.build([None], [])
    if family == "III":
        return DualGraph.build([-2, -2], [(0, 1)])
    if family == "IV":
        return DualGraph.build([-2, -2, -2], [(0, 1), (1, 2), (0, 2)])
    arms = {"IV*": (2, 2, 2), "III*": (1, 3, 3), "II*": (1, 2, 5)}[family]
    return _tree_from_arms(arms)


@cache
def _capacity(family: str, n: int) -> int:
    return _dual_graph(family, n).nodal_capacity()


def fibre_types(max_euler: int) -> list[KodairaFibre]:
    """Singular fibre types with ``1 <= euler <= max_euler``, in canonical order."""
    out = [KodairaFibre("I", n) for n in range(1, max_euler + 1)]
    out += [KodairaFibre("I*", n) for n in range(0, max_euler - 5)]
    out += [KodairaFibre(f) for f in _SPORADIC]
    return [f for f in out if f.euler <= max_euler]


def elliptic_fibre_search(total_euler: int, nodal_demand: int) -> list[tuple[KodairaFibre, ...]]:
    """Multisets of singular fibres with Euler sum ``total_euler`` and capacity ``>= nodal_demand``.

    Smooth fibres are omitted.  Every singular fibre has Euler number at
    least 1, so the number of fibres is bounded by ``total_euler``.
    """
    if total_euler < 0 or nodal_demand < 0:
        raise ValueError("total_euler and nodal_demand must be nonnegative")
    types = fibre_types(total_euler)
    out = []

    def go(start: int, remaining: int, capacity: int, chosen: list):
        if remaining == 0:
            if capacity >= nodal_demand:
                out.append(tuple(chosen))
            return
        for i in range(start, len(types)):
            f = types[i]
            if f.euler <= remaining:
                chosen.append(f)
                go(i, remaining - f.euler, capacity + f.nodal_capacity, chosen)
                chosen.pop()

    go(0, total_euler, 0, [])
    return out


def _blow_up_point(g: DualGraph, v: int) -> DualGraph:
    sis = list(g.self_intersections)
    sis[v] -= 1
    sis.append(-1)
    return DualGraph.build(sis, set(g.edges) | {(v, len(sis) - 1)})


def _blow_up_node(g: DualGraph, u: int, v: int) -> DualGraph:
    sis = list(g.self_intersections)
    sis[u] -= 1
    sis[v] -= 1
    sis.append(-1)
    e = len(sis) - 1
    edges = (set(g.edges) - {(min(u, v), max(u, v))}) | {(u, e), (v, e)}
    return DualGraph.build(sis, edges)


def _canonical(g: DualGraph) -> tuple:
    # cheap isomorphism-invariant key for deduplicating small trees
    from itertools import permutations

    best = None
    for perm in permutations(range(g.size)):
        sis = tuple(g.self_intersections[p] for p in perm)
        pos = {p: i for i, p in enumerate(perm)}
        edges = tuple(sorted((min(pos[i], pos[j]), max(pos[i], pos[j])) for i, j in g.edges))
        key = (sis, edges)
        if best is None or key < best:
            best = key
    return best


def blowup_configurations(blowups: int) -> list[DualGraph]:
    """All fibres obtained from a smooth ruling fibre ``(0)`` by ``blowups`` blow-ups.

    A blow-up centre is either a general point of one component or the
    intersection point of two components; results are deduplicated up to
    isomorphism.
    """
    level = {_canonical(DualGraph.build([0], [])): DualGraph.build([0], [])}
    for _ in range(blowups):
        nxt = {}
        for g in level.values():
            children = [_blow_up_point(g, v) for v in range(g.size)]
            children += [_blow_up_node(g, u, v) for u, v in sorted(g.edges)]
            for c in children:
                nxt.setdefault(_canonical(c), c)
        level = nxt
    return [level[k] for k in sorted(level)]


def ruled_fibre_certificate(max_blowups: int = 4) -> dict[int, list[tuple[int, ...]]]:
    """For each number of blow-ups, the fibres whose disjoint (-2)-curves match it.

    Returns ``{m: [self-intersections of each fibre with capacity == m]}`` and
    asserts nothing; callers read off which strings balance the count.
    """
    out = {}
    for m in range(max_blowups + 1):
        hits = []
        for g in blowup_configurations(m):
            if g.nodal_capacity() >= m:
                hits.append(g.self_intersections)
        out[m] = hits
    return out
