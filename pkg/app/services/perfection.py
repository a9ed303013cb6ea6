"""
Perfection: deux vérificateurs indépendants, perfection faible, et couverture
des sommets par les cliques maximum
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple
import logging

import numpy as np

from app.config import settings
from app.services.graph_core import Graph, VertexSet, complement, induced_subgraph, iter_bits, members
from app.services.invariants import (
    greedy_colour_sort,
    chromatic_number,
    clique_number,
    cliques_of_size,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PerfectionVerdict:
    perfect: Optional[bool]
    witness: Optional[VertexSet] = None
    skipped: bool = False
    reason: str = ""


@dataclass(frozen=True)
class PerfectionReport:
    weakly_perfect: bool
    perfect_bruteforce: Optional[bool]
    perfect_hole_based: bool
    witness: Optional[VertexSet]
    every_vertex_in_max_clique: bool

    @property
    def methods_agree(self) -> bool:
        return self.perfect_bruteforce is None or self.perfect_bruteforce == self.perfect_hole_based

    def to_dict(self) -> Dict[str, Any]:
        return {
            "weakly_perfect": self.weakly_perfect,
            "perfect_bruteforce": self.perfect_bruteforce if self.perfect_bruteforce is not None else "skipped",
            "perfect_hole_based": self.perfect_hole_based,
            "witness": sorted(self.witness) if self.witness is not None else None,
            "every_vertex_in_max_clique": self.every_vertex_in_max_clique,
        }


def is_weakly_perfect(g: Graph) -> bool:
    return clique_number(g) == chromatic_number(g)


def _clique_numbers_of_all_subsets(g: Graph) -> np.ndarray:
    """ω(S) pour tout S: ω(S) = max(ω(S − v), 1 + ω(S ∩ N(v))), v sommet le plus haut"""
    omega = np.zeros(1 << g.order, dtype=np.int64)
    for v in range(g.order):
        size = 1 << v
        idx = np.arange(size, dtype=np.int64)
        lower_neighbours = g.masks[v] & (size - 1)
        omega[size:2 * size] = np.maximum(omega[:size], 1 + omega[idx & lower_neighbours])
    return omega


def _greedy_in(g: Graph, cand: int) -> int:
    """Nombre de couleurs de la coloration gloutonne séquentielle des candidats"""
    _, colours = greedy_colour_sort(g.masks, cand)
    return max(colours, default=0)


def is_perfect_bruteforce(g: Graph, max_order: Optional[int] = None) -> PerfectionVerdict:
    """ω(H) = χ(H) pour tout sous-graphe induit H.

    Témoin: sous-ensemble fautif de taille minimum, puis plus petit en ordre
    lexicographique des sommets triés.
    """
    limit = max_order if max_order is not None else settings.bruteforce_perfection_max_order
    if g.order > limit:
        return PerfectionVerdict(None, skipped=True, reason=f"ordre {g.order} > {limit}")
    omega = _clique_numbers_of_all_subsets(g)
    suspects: List[Tuple[int, Tuple[int, ...], int]] = []
    for s in range(1, 1 << g.order):
        if _greedy_in(g, s) > omega[s]:
            suspects.append((s.bit_count(), tuple(iter_bits(s)), s))
    suspects.sort()
    logger.debug(f"perfection brute: {len(suspects)} sous-graphes à trancher exactement")
    for _, vertices, s in suspects:
        if chromatic_number(induced_subgraph(g, vertices)) > omega[s]:
            return PerfectionVerdict(False, members(s))
    return PerfectionVerdict(True)


def _find_odd_hole(g: Graph) -> Optional[VertexSet]:
    """Cycle induit impair de longueur ≥ 5, par extension de chemins induits.

    Le sommet de départ est le plus petit du cycle. `forbidden` contient le chemin et
    les voisins de ses sommets intérieurs; un prolongement adjacent au départ ferme un
    cycle et n'est jamais étendu.
    """
    masks = g.masks
    for s in range(g.order):
        above = g.vertex_mask & ~((2 << s) - 1)

        def extend(path: List[int], forbidden: int) -> Optional[VertexSet]:
            last = path[-1]
            for w in iter_bits(masks[last] & above & ~forbidden):
                if masks[w] >> s & 1:
                    length = len(path) + 1
                    if length >= 5 and length % 2 == 1:
                        return frozenset(path + [w])
                    continue
                found = extend(path + [w], forbidden | (1 << w) | masks[last])
                if found is not None:
                    return found
            return None

        for first in iter_bits(masks[s] & above):
            found = extend([s, first], (1 << s) | (1 << first))
            if found is not None:
                return found
    return None


def is_perfect_hole_based(g: Graph) -> PerfectionVerdict:
    """Ni trou impair ni anti-trou impair (caractérisation des graphes parfaits)"""
    hole = _find_odd_hole(g)
    if hole is None:
        hole = _find_odd_hole(complement(g))
    if hole is not None:
        return PerfectionVerdict(False, hole)
    return PerfectionVerdict(True)


def every_vertex_in_maximum_clique(g: Graph) -> Tuple[bool, Optional[int]]:
    """Vrai si l'union des cliques maximum est V; sinon le plus petit sommet non couvert"""
    covered = 0
    for clique in cliques_of_size(g.masks, g.vertex_mask, clique_number(g)):
        covered |= clique
    uncovered = g.vertex_mask & ~covered
    if uncovered:
        return False, (uncovered & -uncovered).bit_length() - 1
    return True, None


def perfection_report(g: Graph) -> PerfectionReport:
    brute = is_perfect_bruteforce(g)
    holes = is_perfect_hole_based(g)
    covered, _ = every_vertex_in_maximum_clique(g)
    if brute.perfect is not None and brute.perfect != holes.perfect:
        logger.error(f"désaccord des oracles de perfection: brute={brute.perfect} trous={holes.perfect}")
    witness = brute.witness if brute.witness is not None else holes.witness
    return PerfectionReport(
        weakly_perfect=is_weakly_perfect(g),
        perfect_bruteforce=brute.perfect,
        perfect_hole_based=bool(holes.perfect),
        witness=witness,
        every_vertex_in_max_clique=covered,
    )
