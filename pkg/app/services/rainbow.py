"""
Voisinages arc-en-ciel: r_χ, r⁻_χ, r⁺_χ et r^{i-max}_χ
"""

from dataclasses import dataclass
from typing import Any, Dict, Iterable, Optional
import logging

from app.services.colourings import (
    ChromaticPartitions,
    Colouring,
    imax_colouring,
    is_proper,
    sample_chromatic_partitions,
)
from app.services.errors import GraphError, ImproperColouringError
from app.services.graph_core import Graph, VertexSet, members

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RainbowReport:
    colouring_used: Colouring
    rainbow_vertices: VertexSet
    r: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "colouring": self.colouring_used.to_dict(),
            "rainbow_vertices": sorted(self.rainbow_vertices),
            "r": self.r,
        }


@dataclass(frozen=True)
class RainbowBounds:
    r_minus: int
    r_plus: int
    exact: bool
    witness_min: Optional[Colouring]
    witness_max: Optional[Colouring]
    partitions_scanned: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "r_minus": self.r_minus,
            "r_plus": self.r_plus,
            "exact": self.exact,
            "partitions_scanned": self.partitions_scanned,
            "witness_min": self.witness_min.to_dict() if self.witness_min else None,
            "witness_max": self.witness_max.to_dict() if self.witness_max else None,
        }


def _require_proper(g: Graph, c: Colouring) -> None:
    if not is_proper(g, c):
        raise ImproperColouringError("coloration non propre: au moins une arête monochrome")


def _rainbow_mask(g: Graph, c: Colouring) -> int:
    class_masks = c.class_masks
    mask = 0
    for v in range(g.order):
        closed = g.closed_mask(v)
        if all(closed & cm for cm in class_masks):
            mask |= 1 << v
    return mask


def yields_rainbow(g: Graph, c: Colouring, v: int) -> bool:
    """N[v] contient au moins un sommet de chaque couleur"""
    _require_proper(g, c)
    if not 0 <= v < g.order:
        raise GraphError(f"sommet {v} hors de [0, {g.order})")
    closed = g.closed_mask(v)
    return all(closed & cm for cm in c.class_masks)


def rainbow_number(g: Graph, c: Colouring) -> RainbowReport:
    _require_proper(g, c)
    mask = _rainbow_mask(g, c)
    return RainbowReport(c, members(mask), mask.bit_count())


def _bounds_over(g: Graph, colourings: Iterable[Colouring]) -> RainbowBounds:
    lo = hi = None
    w_min = w_max = None
    scanned = 0
    for c in colourings:
        scanned += 1
        r = _rainbow_mask(g, c).bit_count()
        if lo is None or r < lo:
            lo, w_min = r, c
        if hi is None or r > hi:
            hi, w_max = r, c
    if lo is None:
        return RainbowBounds(0, 0, False, None, None, 0)
    return RainbowBounds(lo, hi, True, w_min, w_max, scanned)


def rainbow_bounds(g: Graph, budget: Optional[int] = None) -> RainbowBounds:
    """r⁻ et r⁺ sur toutes les partitions chromatiques (exact sauf troncature)"""
    stream = ChromaticPartitions(g, budget=budget)
    bounds = _bounds_over(g, stream)
    if stream.truncated:
        logger.warning(f"bornes arc-en-ciel partielles après {bounds.partitions_scanned} partitions")
        return RainbowBounds(
            bounds.r_minus, bounds.r_plus, False,
            bounds.witness_min, bounds.witness_max, bounds.partitions_scanned,
        )
    return bounds


def rainbow_sample_bounds(g: Graph, count: int, seed: int) -> RainbowBounds:
    """Bornes sur un échantillon graine fixée de partitions chromatiques (jamais exactes)"""
    bounds = _bounds_over(g, sample_chromatic_partitions(g, count, seed))
    return RainbowBounds(
        bounds.r_minus, bounds.r_plus, False,
        bounds.witness_min, bounds.witness_max, bounds.partitions_scanned,
    )


def r_imax(g: Graph) -> RainbowReport:
    """Arc-en-ciel sous la coloration maximax-indépendance déterministe"""
    return rainbow_number(g, imax_colouring(g).colouring)
