"""Loop-free digraphs and undirected graphs: data model, text IO, structure.

Vertices are dense 0-based integers.  Both graph types are immutable
values; adjacency lists are precomputed in sorted order so that every
traversal in the package is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import CyclicGraphError, FormatError

Arc = tuple[int, int]


class Digraph:
    """Simple directed graph without loops or parallel arcs."""

    __slots__ = ("n", "arcs", "_out", "_in")

    def __init__(self, n: int, arcs: Iterable[Arc] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        arc_list = [(u, v) for (u, v) in arcs]
        arc_set = frozenset(arc_list)
        if len(arc_set) != len(arc_list):
            raise ValueError("duplicate arcs are not allowed")
        for u, v in arc_set:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
        self.n = n
        self.arcs = arc_set
        out: list[list[int]] = [[] for _ in range(n)]
        inn: list[list[int]] = [[] for _ in range(n)]
        for u, v in sorted(arc_set):
            out[u].append(v)
            inn[v].append(u)
        self._out = tuple(tuple(ns) for ns in out)
        self._in = tuple(tuple(sorted(ns)) for ns in inn)

    @property
    def m(self) -> int:
        return len(self.arcs)

    def vertices(self) -> range:
        return range(self.n)

    def out_neighbors(self, u: int) -> tuple[int, ...]:
        return self._out[u]

    def in_neighbors(self, u: int) -> tuple[int, ...]:
        return self._in[u]

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Digraph) and self.n == other.n and self.arcs == other.arcs
        )

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.sorted_arcs()})"


class UGraph:
    """Simple undirected graph without loops or parallel edges.

    Edges are stored as (min, max) pairs.
    """

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[Arc] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        norm = []
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            norm.append((u, v) if u < v else (v, u))
        edge_set = frozenset(norm)
        if len(edge_set) != len(norm):
            raise ValueError("duplicate edges are not allowed")
        for u, v in edge_set:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        self.n = n
        self.edges = edge_set
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in sorted(edge_set):
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(ns)) for ns in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self._adj[u]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def sorted_edges(self) -> list[Arc]:
        return sorted(self.edges)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, UGraph) and self.n == other.n and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"UGraph(n={self.n}, edges={self.sorted_edges()})"


@dataclass(frozen=True)
class CycleCensus:
    """Directed 2/3-cycle counts and the unique-cycle decision for a target."""

    two_cycles: int
    three_cycles: int
    max_scc_size: int
    at_most_one_cycle: bool
    unique_cycle_vertices: tuple[int, ...] | None


# ---------------------------------------------------------------------------
# text format
#
# ".dg" / ".ug": first data line "n m", then m lines "u v".  Lines whose
# first nonblank character is "#" are comments; blank lines are skipped.
# ---------------------------------------------------------------------------


def _data_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, stripped


def _parse_pair_file(text: str, source: str | None) -> tuple[int, list[tuple[int, int, int]]]:
    """Shared reader for the .dg/.ug formats.

    Returns (n, [(lineno, u, v), ...]) with the arc count already checked.
    """
    lines = list(_data_lines(text))
    if not lines:
        raise FormatError("missing header line 'n m'", source=source)
    lineno, header = lines[0]
    fields = header.split()
    if len(fields) != 2:
        raise FormatError(f"header must be two integers 'n m', got {header!r}", lineno, source)
    try:
        n, m = int(fields[0]), int(fields[1])
    except ValueError:
        raise FormatError(f"header must be two integers 'n m', got {header!r}", lineno, source)
    if n < 0 or m < 0:
        raise FormatError(f"header counts must be nonnegative, got {header!r}", lineno, source)
    body = lines[1:]
    if len(body) < m:
        raise FormatError(f"expected {m} arc lines, found {len(body)}", source=source)
    if len(body) > m:
        extra_line = body[m][0]
        raise FormatError(f"unexpected data after {m} arc lines", extra_line, source)
    pairs = []
    for lineno, line in body:
        fields = line.split()
        if len(fields) != 2:
            raise FormatError(f"arc line must be two integers 'u v', got {line!r}", lineno, source)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise FormatError(f"arc line must be two integers 'u v', got {line!r}", lineno, source)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"endpoint out of range 0..{n - 1} in ({u}, {v})", lineno, source)
        if u == v:
            raise FormatError(f"loop at vertex {u}", lineno, source)
        pairs.append((lineno, u, v))
    return n, pairs


def parse_digraph(text: str, source: str | None = None) -> Digraph:
    """Parse the .dg format; report every violation with its line number."""
    n, pairs = _parse_pair_file(text, source)
    seen: set[Arc] = set()
    for lineno, u, v in pairs:
        if (u, v) in seen:
            raise FormatError(f"duplicate arc ({u}, {v})", lineno, source)
        seen.add((u, v))
    return Digraph(n, seen)


def parse_ugraph(text: str, source: str | None = None) -> UGraph:
    """Parse the .ug format (pairs unordered)."""
    n, pairs = _parse_pair_file(text, source)
    seen: set[Arc] = set()
    for lineno, u, v in pairs:
        edge = (u, v) if u < v else (v, u)
        if edge in seen:
            raise FormatError(f"duplicate edge ({u}, {v})", lineno, source)
        seen.add(edge)
    return UGraph(n, seen)


def format_digraph(g: Digraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_arcs())
    return "\n".join(lines) + "\n"


def format_ugraph(g: UGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# structural operations
# ---------------------------------------------------------------------------


def dual(g: Digraph) -> Digraph:
    """Reverse the orientation of every arc."""
    return Digraph(g.n, ((v, u) for u, v in g.arcs))


def underlying_ugraph(g: Digraph) -> UGraph:
    """Forget orientations (a 2-cycle collapses to a single edge)."""
    return UGraph(g.n, {(min(u, v), max(u, v)) for u, v in g.arcs})


def _topological_order(g: Digraph) -> list[int] | None:
    """Kahn's algorithm; None if a directed cycle remains."""
    indeg = [len(g.in_neighbors(v)) for v in g.vertices()]
    ready = sorted(v for v in g.vertices() if indeg[v] == 0)
    order: list[int] = []
    while ready:
        v = ready.pop(0)
        order.append(v)
        for w in g.out_neighbors(v):
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
        ready.sort()
    return order if len(order) == g.n else None


def is_acyclic(g: Digraph) -> bool:
    return _topological_order(g) is not None


def transitive_closure(g: Digraph) -> Digraph:
    """Add an arc u->v whenever a directed path u~>v of length >= 1 exists.

    Raises CyclicGraphError naming a cyclic vertex if some vertex can reach
    itself (the closure arc would be a loop, which Digraph forbids).
    """
    arcs: set[Arc] = set()
    for u in g.vertices():
        reached: set[int] = set()
        stack = list(g.out_neighbors(u))
        while stack:
            x = stack.pop()
            if x in reached:
                continue
            reached.add(x)
            stack.extend(g.out_neighbors(x))
        if u in reached:
            raise CyclicGraphError(
                f"vertex {u} lies on a directed cycle; its closure arc would be a loop",
                vertex=u,
            )
        arcs.update((u, x) for x in reached)
    return Digraph(g.n, arcs)


def strong_components(g: Digraph) -> list[list[int]]:
    """Maximal strongly connected sets, in topological order of the condensation.

    Iterative Tarjan; each component's vertex list is sorted.
    """
    index = [-1] * g.n
    low = [0] * g.n
    on_stack = [False] * g.n
    stack: list[int] = []
    components: list[list[int]] = []
    counter = 0
    for root in g.vertices():
        if index[root] != -1:
            continue
        work: list[tuple[int, int]] = [(root, 0)]
        while work:
            v, child_i = work[-1]
            if child_i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            out = g.out_neighbors(v)
            advanced = False
            while child_i < len(out):
                w = out[child_i]
                child_i += 1
                if index[w] == -1:
                    work[-1] = (v, child_i)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comp.sort()
                components.append(comp)
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    components.reverse()
    return components


def is_semicomplete(g: Digraph) -> bool:
    """True iff every pair of distinct vertices carries at least one arc."""
    for u in g.vertices():
        for v in range(u + 1, g.n):
            if (u, v) not in g.arcs and (v, u) not in g.arcs:
                return False
    return True


def is_tournament(g: Digraph) -> bool:
    """Semicomplete with no 2-cycle."""
    if not is_semicomplete(g):
        return False
    return all((v, u) not in g.arcs for u, v in g.arcs)


def acyclic_tournament_order(g: Digraph) -> list[int]:
    """The unique topological order of an acyclic tournament.

    In an acyclic tournament the in-degrees are exactly 0..n-1, so sorting
    by in-degree linearizes the target; callers use this to relabel an
    arbitrary acyclic tournament onto the canonical levels 0 < 1 < ... .
    """
    if not is_tournament(g):
        raise ValueError("not a tournament")
    order = sorted(g.vertices(), key=lambda v: len(g.in_neighbors(v)))
    degrees = [len(g.in_neighbors(v)) for v in order]
    if degrees != list(range(g.n)):
        raise CyclicGraphError("tournament has a directed cycle")
    return order


def weak_components(g: Digraph) -> list[list[int]]:
    """Connected components of the underlying undirected graph, sorted."""
    seen = [False] * g.n
    comps: list[list[int]] = []
    for start in g.vertices():
        if seen[start]:
            continue
        comp = []
        stack = [start]
        seen[start] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.out_neighbors(v) + g.in_neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def cycle_census(h: Digraph) -> CycleCensus:
    """Count directed 2- and 3-cycles of a semicomplete digraph and decide
    whether it has at most one directed cycle in total.

    The decision rule: every strong component has <= 3 vertices, no strong
    component of size 3 contains a 2-cycle, and the 2-cycle and 3-cycle
    counts sum to at most 1.  For semicomplete inputs this is exact: a cycle
    lives inside one strong component, a strong semicomplete digraph on >= 4
    vertices has many cycles, and a strong one on 3 vertices is either the
    3-cycle or contains a 2-cycle plus more.
    """
    if not is_semicomplete(h):
        raise ValueError("cycle census requires a semicomplete digraph")
    two: list[tuple[int, int]] = []
    for u, v in sorted(h.arcs):
        if u < v and (v, u) in h.arcs:
            two.append((u, v))
    three: list[tuple[int, int, int]] = []
    for u in h.vertices():
        for v in h.out_neighbors(u):
            if v <= u:
                continue
            for w in h.out_neighbors(v):
                if w <= u or w == v:
                    continue
                if (w, u) in h.arcs:
                    three.append((u, v, w))
    comps = strong_components(h)
    sizes = [len(c) for c in comps]
    max_scc = max(sizes, default=0)
    comp_of = {}
    for i, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = i
    two_in_triple_scc = any(
        sizes[comp_of[u]] == 3 and comp_of[u] == comp_of[v] for u, v in two
    )
    total = len(two) + len(three)
    at_most_one = max_scc <= 3 and not two_in_triple_scc and total <= 1
    unique: tuple[int, ...] | None = None
    if at_most_one and total == 1:
        unique = two[0] if two else three[0]
    return CycleCensus(
        two_cycles=len(two),
        three_cycles=len(three),
        max_scc_size=max_scc,
        at_most_one_cycle=at_most_one,
        unique_cycle_vertices=unique,
    )
