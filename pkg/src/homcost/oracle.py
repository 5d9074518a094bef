"""Brute-force ground truth for homomorphism and independent-set questions.

Everything here is exhaustive search.  The enumerator walks the full
assignment tree in lexicographic order of image vectors, abandoning a
branch only once an arc constraint between two already-assigned vertices
is violated, so its output is exactly the filter of all |V(H)|^|V(D)|
mappings.  A budget guard on that count keeps test pipelines from
accidentally launching searches that cannot finish; an exceeded budget is
an error, never a silent truncation.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .costs import CostMatrix, Homomorphism, ListAssignment, hom_cost
from .digraph import Digraph, UGraph
from .errors import BudgetExceededError

DEFAULT_BUDGET = 10_000_000


def _check_budget(size: int, budget: int | None, what: str) -> None:
    limit = DEFAULT_BUDGET if budget is None else budget
    if size > limit:
        raise BudgetExceededError(
            f"{what} needs {size} candidates, over the budget of {limit}"
        )


def _iter_hom_images(
    d: Digraph, h: Digraph, domains: Sequence[frozenset[int]] | None = None
) -> Iterator[tuple[int, ...]]:
    """Yield every homomorphism image, lexicographically.

    `domains` optionally restricts each vertex's admissible colors.
    """
    n, p = d.n, h.n
    if n == 0:
        yield ()
        return
    if p == 0:
        return
    full = (1 << p) - 1
    out_mask = [0] * p
    in_mask = [0] * p
    for i, j in h.arcs:
        out_mask[i] |= 1 << j
        in_mask[j] |= 1 << i
    domain_mask = [full] * n
    if domains is not None:
        for v, dom in enumerate(domains):
            mask = 0
            for i in dom:
                mask |= 1 << i
            domain_mask[v] = mask
    # arcs between v and already-assigned u < v, checked at assignment time
    later_in = [[] for _ in range(n)]   # u < v with arc (u, v): need out_mask[img[u]]
    later_out = [[] for _ in range(n)]  # u < v with arc (v, u): need in_mask[img[u]]
    for u, v in d.arcs:
        if u < v:
            later_in[v].append(u)
        else:
            later_out[u].append(v)
    for cons in later_in:
        cons.sort()
    for cons in later_out:
        cons.sort()

    def allowed(v: int, img: list[int]) -> int:
        mask = domain_mask[v]
        for u in later_in[v]:
            mask &= out_mask[img[u]]
            if not mask:
                return 0
        for u in later_out[v]:
            mask &= in_mask[img[u]]
            if not mask:
                return 0
        return mask

    img = [0] * n
    avail = [0] * n
    avail[0] = allowed(0, img)
    v = 0
    while v >= 0:
        if not avail[v]:
            v -= 1
            continue
        low = avail[v] & -avail[v]
        avail[v] ^= low
        img[v] = low.bit_length() - 1
        if v == n - 1:
            yield tuple(img)
            continue
        v += 1
        avail[v] = allowed(v, img)


def enumerate_homs(
    d: Digraph, h: Digraph, budget: int | None = None
) -> list[tuple[int, ...]]:
    """All arc-preserving images of d in h, in lexicographic order."""
    _check_budget(h.n**d.n, budget, "homomorphism enumeration")
    return list(_iter_hom_images(d, h))


def oracle_min_cost(
    d: Digraph, h: Digraph, c: CostMatrix, budget: int | None = None
) -> Homomorphism | None:
    """Exact minimum-cost homomorphism, or None if none exists.

    Ties go to the lexicographically smallest image.
    """
    _check_budget(h.n**d.n, budget, "minimum-cost search")
    best: tuple[int, ...] | None = None
    best_cost = 0
    for img in _iter_hom_images(d, h):
        cost = hom_cost(img, c)
        if best is None or cost < best_cost:
            best, best_cost = img, cost
    if best is None:
        return None
    return Homomorphism(best, best_cost)


def oracle_max_cost(
    d: Digraph, h: Digraph, c: CostMatrix, budget: int | None = None
) -> Homomorphism | None:
    """Exact maximum-cost homomorphism, or None if none exists."""
    _check_budget(h.n**d.n, budget, "maximum-cost search")
    best: tuple[int, ...] | None = None
    best_cost = 0
    for img in _iter_hom_images(d, h):
        cost = hom_cost(img, c)
        if best is None or cost > best_cost:
            best, best_cost = img, cost
    if best is None:
        return None
    return Homomorphism(best, best_cost)


def oracle_optimal_images(
    d: Digraph,
    h: Digraph,
    c: CostMatrix,
    maximize: bool = False,
    budget: int | None = None,
) -> list[tuple[int, ...]]:
    """Every optimal homomorphism image, in lexicographic order."""
    _check_budget(h.n**d.n, budget, "optimal-set enumeration")
    best_cost: int | None = None
    best: list[tuple[int, ...]] = []
    for img in _iter_hom_images(d, h):
        cost = hom_cost(img, c)
        if best_cost is None or (cost > best_cost if maximize else cost < best_cost):
            best_cost = cost
            best = [img]
        elif cost == best_cost:
            best.append(img)
    return best


def oracle_list(
    d: Digraph, h: Digraph, lists: ListAssignment, budget: int | None = None
) -> Homomorphism | None:
    """First list-respecting homomorphism in lexicographic order, or None.

    The reported cost counts 1 per vertex, matching the list-to-cost
    encoding in which a feasible mapping costs exactly |V(D)|.
    """
    if lists.n_source != d.n or lists.n_target != h.n:
        raise ValueError("list assignment dimensions do not match the instance")
    _check_budget(h.n**d.n, budget, "list-homomorphism search")
    for img in _iter_hom_images(d, h, domains=lists.lists):
        return Homomorphism(img, d.n)
    return None


def oracle_mis(g: UGraph, budget: int | None = None) -> tuple[frozenset[int], int]:
    """A maximum independent set and its size, by enumerating all subsets."""
    _check_budget(2**g.n, budget, "independent-set enumeration")
    edge_masks = []
    for u, v in g.sorted_edges():
        edge_masks.append((1 << u) | (1 << v))
    best_mask = 0
    best_size = 0
    for mask in range(1, 1 << g.n):
        size = mask.bit_count()
        if size <= best_size:
            continue
        if all((mask & em) != em for em in edge_masks):
            best_mask, best_size = mask, size
    best = frozenset(v for v in range(g.n) if best_mask >> v & 1)
    return best, best_size
