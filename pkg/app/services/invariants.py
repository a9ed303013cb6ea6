"""
Invariants exacts: ω, α, χ, cliques maximum et ensembles indépendants maximum

Les noyaux travaillent sur (masques, candidats) pour opérer directement sur un
sous-ensemble de sommets sans renuméroter le graphe.
"""

from dataclasses import dataclass, asdict
from functools import lru_cache
from typing import Any, Dict, List, Optional, Sequence, Tuple
import logging

import numpy as np

from app.config import settings
from app.services.errors import BudgetExceededError
from app.services.graph_core import Graph, VertexSet, complement, members

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InvariantReport:
    omega: int
    alpha: int
    chi: int
    max_clique_count: int
    max_independent_set_count: int
    min_degree: int
    order: int

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


# --- noyaux sur masques ---

def greedy_colour_sort(masks: Sequence[int], cand: int) -> Tuple[List[int], List[int]]:
    """Coloration gloutonne séquentielle des candidats (borne de Tomita)"""
    order: List[int] = []
    colours: List[int] = []
    colour = 0
    uncoloured = cand
    while uncoloured:
        colour += 1
        q = uncoloured
        while q:
            low = q & -q
            v = low.bit_length() - 1
            q &= ~low & ~masks[v]
            uncoloured &= ~low
            order.append(v)
            colours.append(colour)
    return order, colours


def max_clique_size(masks: Sequence[int], cand: int) -> int:
    """Taille d'une clique maximum parmi les candidats (séparation et évaluation)"""
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        order, colours = greedy_colour_sort(masks, cand)
        for idx in range(len(order) - 1, -1, -1):
            if size + colours[idx] <= best:
                return
            v = order[idx]
            nxt = cand & masks[v]
            if nxt:
                expand(size + 1, nxt)
            elif size + 1 > best:
                best = size + 1
            cand &= ~(1 << v)

    if cand:
        expand(0, cand)
    return best


def cliques_of_size(masks: Sequence[int], cand: int, k: int) -> List[int]:
    """Toutes les cliques de taille k parmi les candidats, en masques croissants"""
    found: List[int] = []

    def extend(clique: int, size: int, cand: int) -> None:
        if size == k:
            found.append(clique)
            return
        while cand:
            if size + cand.bit_count() < k:
                return
            low = cand & -cand
            cand ^= low
            extend(clique | low, size + 1, cand & masks[low.bit_length() - 1])

    extend(0, 0, cand)
    return sorted(found)


@lru_cache(maxsize=4096)
def complement_masks(g: Graph) -> Tuple[int, ...]:
    return complement(g).masks


def independence_number_in(g: Graph, cand: int) -> int:
    """α du sous-graphe induit par les candidats"""
    return max_clique_size(complement_masks(g), cand)


def maximum_independent_sets_in(g: Graph, cand: int) -> List[int]:
    cmasks = complement_masks(g)
    alpha = max_clique_size(cmasks, cand)
    if alpha == 0:
        return []
    return cliques_of_size(cmasks, cand, alpha)


# --- opérations publiques ---

@lru_cache(maxsize=4096)
def clique_number(g: Graph) -> int:
    return max_clique_size(g.masks, g.vertex_mask)


def count_maximum_cliques(g: Graph) -> int:
    if g.order == 0:
        return 0
    return len(cliques_of_size(g.masks, g.vertex_mask, clique_number(g)))


def maximum_cliques(g: Graph) -> List[VertexSet]:
    if g.order == 0:
        return []
    return [members(c) for c in cliques_of_size(g.masks, g.vertex_mask, clique_number(g))]


@lru_cache(maxsize=4096)
def independence_number(g: Graph) -> int:
    return independence_number_in(g, g.vertex_mask)


def enumerate_maximum_independent_sets(g: Graph) -> List[VertexSet]:
    """Ensembles indépendants de taille α, chacun une fois, par masque croissant"""
    return [members(s) for s in maximum_independent_sets_in(g, g.vertex_mask)]


def min_degree(g: Graph) -> int:
    return min(g.degrees(), default=0)


def greedy_colouring_bound(g: Graph) -> int:
    """Coloration gloutonne par degrés décroissants (borne supérieure de χ, ≤ Δ+1)"""
    colours = [0] * g.order
    used = 0
    for v in sorted(range(g.order), key=lambda u: (-g.degree(u), u)):
        forbidden = {colours[u] for u in range(g.order) if g.masks[v] >> u & 1}
        c = 1
        while c in forbidden:
            c += 1
        colours[v] = c
        used = max(used, c)
    return used


def _independent_set_counts(g: Graph) -> np.ndarray:
    """i(S) = nombre d'ensembles indépendants (vide compris) de chaque S ⊆ V"""
    counts = np.ones(1 << g.order, dtype=np.int64)
    for v in range(g.order):
        size = 1 << v
        idx = np.arange(size, dtype=np.int64)
        lower_neighbours = g.masks[v] & (size - 1)
        counts[size:2 * size] = counts[:size] + counts[idx & ~lower_neighbours]
    return counts


def _popcounts(order: int) -> np.ndarray:
    pc = np.zeros(1 << order, dtype=np.int64)
    for v in range(order):
        size = 1 << v
        pc[size:2 * size] = pc[:size] + 1
    return pc


def _chromatic_by_covers(g: Graph, lower: int, upper: int) -> int:
    """Plus petit k tel que k ensembles indépendants couvrent V (inclusion-exclusion).

    Les i(S) sont regroupés par valeur distincte puis évalués en entiers Python exacts.
    """
    counts = _independent_set_counts(g)
    parity = (g.order - _popcounts(g.order)) % 2
    signs = np.where(parity == 0, 1.0, -1.0)
    values, inverse = np.unique(counts, return_inverse=True)
    coeffs = np.bincount(inverse.ravel(), weights=signs, minlength=len(values))
    terms = [(int(v), int(round(c))) for v, c in zip(values, coeffs) if round(c) != 0]
    for k in range(lower, upper):
        if sum(c * v ** k for v, c in terms) > 0:
            return k
    return upper


def _chromatic_by_search(g: Graph, lower: int, upper: int, budget: int) -> int:
    """DSATUR avec séparation et évaluation, budget de nœuds"""
    n = g.order
    colours = [0] * n
    best = upper
    nodes = 0

    def pick() -> int:
        chosen, key = -1, (-1, -1)
        for v in range(n):
            if colours[v] == 0:
                sat = len({colours[u] for u in range(n) if g.masks[v] >> u & 1 and colours[u]})
                if (sat, g.degree(v)) > key:
                    chosen, key = v, (sat, g.degree(v))
        return chosen

    def search(used: int, coloured: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceededError("chromatic_node_budget", budget, {"best_upper_bound": best})
        if used >= best or best == lower:
            return
        if coloured == n:
            best = used
            return
        v = pick()
        for c in range(1, min(used + 1, best - 1) + 1):
            if any(colours[u] == c for u in range(n) if g.masks[v] >> u & 1):
                continue
            colours[v] = c
            search(max(used, c), coloured + 1)
            colours[v] = 0

    search(0, 0)
    return best


@lru_cache(maxsize=4096)
def _chromatic(g: Graph, dp_max_order: int, budget: int) -> int:
    if g.order == 0:
        return 0
    lower = clique_number(g)
    upper = greedy_colouring_bound(g)
    if lower == upper:
        return lower
    if g.order <= dp_max_order:
        return _chromatic_by_covers(g, lower, upper)
    logger.debug(f"χ par recherche arborescente (ordre {g.order}, bornes {lower}..{upper})")
    return _chromatic_by_search(g, lower, upper, budget)


def chromatic_number(g: Graph, budget: Optional[int] = None) -> int:
    """χ exact; lève BudgetExceededError si la recherche dépasse le budget"""
    return _chromatic(
        g,
        settings.chromatic_dp_max_order,
        budget if budget is not None else settings.chromatic_node_budget,
    )


def invariant_report(g: Graph) -> InvariantReport:
    return InvariantReport(
        omega=clique_number(g),
        alpha=independence_number(g),
        chi=chromatic_number(g),
        max_clique_count=count_maximum_cliques(g),
        max_independent_set_count=len(maximum_independent_sets_in(g, g.vertex_mask)),
        min_degree=min_degree(g),
        order=g.order,
    )
