"""The homomorphic product: an undirected, vertex-weighted carrier graph.

For digraphs D and H the product places a vertex (u, i) for every source
vertex u and color i, joins (u, i)-(v, j) whenever uv is an arc of D but
ij is not an arc of H, and joins the "palette" vertices (u, i)-(u, j) for
i != j into cliques.  Independent sets that pick one vertex per palette
clique are exactly the homomorphisms of D to H, and lifting each weight by
mu * |V(D)| (mu = largest cost entry) makes maximum-weight independent
sets correspond to maximum-cost homomorphisms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .costs import CostMatrix, Homomorphism, hom_cost
from .digraph import Digraph, UGraph


@dataclass(frozen=True)
class HomProduct:
    """Product graph with lifted weights.

    Product vertex (u, i) is encoded as u * n_target + i.
    """

    graph: UGraph
    weight: tuple[int, ...]
    mu: int
    n_source: int
    n_target: int

    def vertex_id(self, u: int, i: int) -> int:
        return u * self.n_target + i

    def decode(self, pv: int) -> tuple[int, int]:
        return divmod(pv, self.n_target)


def homomorphic_product(
    d: Digraph, h: Digraph, c: CostMatrix, h_loops: Iterable[int] = ()
) -> HomProduct:
    """Build the product of d and h with weights lifted from c.

    `h_loops` lists colors regarded as carrying a loop: a looped color i
    drops the (u, i)-(v, i) edges for arcs uv, exactly as if ii were an arc
    of h.  (Digraph itself cannot store loops, so they enter here.)
    """
    if c.n_source != d.n or (d.n > 0 and c.n_target != h.n):
        raise ValueError(
            f"cost matrix is {c.n_source}x{c.n_target}, instance needs {d.n}x{h.n}"
        )
    loops = frozenset(h_loops)
    for i in loops:
        if not (0 <= i < h.n):
            raise ValueError(f"loop color {i} outside 0..{h.n - 1}")
    p = h.n
    mu = c.max_entry(default=0)
    base = mu * d.n
    edges: set[tuple[int, int]] = set()
    for u in d.vertices():
        for i in range(p):
            for j in range(i + 1, p):
                edges.add((u * p + i, u * p + j))
    for u, v in sorted(d.arcs):
        for i in range(p):
            for j in range(p):
                if (i, j) in h.arcs:
                    continue
                if i == j and i in loops:
                    continue
                a, b = u * p + i, v * p + j
                edges.add((a, b) if a < b else (b, a))
    weight = tuple(
        c.rows[u][i] + base for u in d.vertices() for i in range(p)
    )
    return HomProduct(
        graph=UGraph(d.n * p, edges),
        weight=weight,
        mu=mu,
        n_source=d.n,
        n_target=p,
    )


def hom_to_indset(f: Homomorphism, n_target: int) -> frozenset[int]:
    """Encode a homomorphism as the product vertex set {(x, f(x))}."""
    return frozenset(u * n_target + i for u, i in enumerate(f.image))


def indset_to_hom(
    indset: Iterable[int], d: Digraph, h: Digraph, c: CostMatrix
) -> Homomorphism:
    """Decode an independent set of the product into a homomorphism.

    The set must contain exactly one vertex of every palette clique
    {(x, i) : i} and must be independent; both are checked and violations
    reported.
    """
    chosen = sorted(set(indset))
    p = h.n
    image: dict[int, int] = {}
    for pv in chosen:
        if not (0 <= pv < d.n * p):
            raise ValueError(f"product vertex {pv} out of range")
        u, i = divmod(pv, p)
        if u in image:
            raise ValueError(
                f"not independent: vertices {u * p + image[u]} and {pv} share a palette clique"
            )
        image[u] = i
    missing = [u for u in d.vertices() if u not in image]
    if missing:
        raise ValueError(f"no product vertex chosen for source vertex {missing[0]}")
    img = tuple(image[u] for u in d.vertices())
    for u, v in sorted(d.arcs):
        if (img[u], img[v]) not in h.arcs:
            raise ValueError(
                f"not independent: {u * p + img[u]} and {v * p + img[v]} are adjacent in the product"
            )
    return Homomorphism(img, hom_cost(img, c))
