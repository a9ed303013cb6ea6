"""
Corpus de graphes: énumération exhaustive étiquetée, forme canonique,
familles paramétrées, fichiers graph6 et tirages aléatoires graine fixée
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from pathlib import Path
from typing import Iterator, List, Optional, Sequence, Tuple
import logging
import random

from app.services.errors import Graph6Error, GraphError
from app.services.generators import family
from app.services.graph_core import (
    Graph,
    adjacency_code,
    g6_decode,
    graph_from_code,
    is_connected,
    iter_bits,
    pair_count,
    upper_triangle_pairs,
)

logger = logging.getLogger(__name__)

CANONICAL_MAX_ORDER = 8
EDGE_PROBABILITIES = (0.2, 0.35, 0.5, 0.65, 0.8)

SOURCES = ("exhaustive", "family", "graph6", "random")
DEDUP_MODES = ("none", "canonical")


@dataclass(frozen=True)
class Corpus:
    """Description d'un corpus (source, filtres, dédoublonnage)"""

    source: str = "exhaustive"
    min_order: int = 1
    max_order: int = 5
    connected: bool = True
    dedup: str = "none"
    family: Optional[str] = None
    thorns: Tuple[int, ...] = ()
    path: Optional[str] = None
    count: int = 0
    seed: Optional[int] = None

    def __post_init__(self):
        if self.source not in SOURCES:
            raise GraphError(f"source de corpus inconnue: {self.source}")
        if self.dedup not in DEDUP_MODES:
            raise GraphError(f"dédoublonnage inconnu: {self.dedup}")
        if self.dedup == "canonical" and self.max_order > CANONICAL_MAX_ORDER:
            raise GraphError(f"forme canonique limitée à l'ordre {CANONICAL_MAX_ORDER}")
        if self.source == "random" and self.seed is None:
            raise GraphError("le mode aléatoire exige une graine explicite")

    def describe(self) -> str:
        if self.source == "family":
            return f"family:{self.family} n={self.min_order}..{self.max_order}"
        if self.source == "graph6":
            return f"graph6:{self.path}"
        if self.source == "random":
            return f"random:order={self.max_order} count={self.count} seed={self.seed}"
        flags = ["connected" if self.connected else "all", f"dedup={self.dedup}"]
        return f"exhaustive:order={self.min_order}..{self.max_order} " + " ".join(flags)


@dataclass
class CorpusErrors:
    lines: List[Tuple[int, str]] = field(default_factory=list)


# --- forme canonique ---

def _refined_cells(g: Graph) -> List[List[int]]:
    """Partition ordonnée invariante: raffinement des couleurs à partir des degrés"""
    colour = g.degrees()
    while True:
        keys = [(colour[v], tuple(sorted(colour[u] for u in iter_bits(g.masks[v])))) for v in range(g.order)]
        ranking = {key: rank for rank, key in enumerate(sorted(set(keys)))}
        refined = [ranking[k] for k in keys]
        if len(set(refined)) == len(set(colour)):
            colour = refined
            break
        colour = refined
    cells: List[List[int]] = [[] for _ in range(len(set(colour)))]
    for v in range(g.order):
        cells[colour[v]].append(v)
    return cells


def _code_under(g: Graph, inverse: Sequence[int]) -> int:
    """Code d'adjacence après renumérotation (inverse[position] = ancien sommet)"""
    code = 0
    for i, j in upper_triangle_pairs(g.order):
        code = (code << 1) | (g.masks[inverse[i]] >> inverse[j] & 1)
    return code


def canonical_code(g: Graph) -> int:
    """Plus petite chaîne de bits d'adjacence parmi les permutations compatibles avec le raffinement"""
    cells = _refined_cells(g)
    best = None
    for choice in product(*(permutations(cell) for cell in cells)):
        inverse = [v for block in choice for v in block]
        code = _code_under(g, inverse)
        if best is None or code < best:
            best = code
    return best if best is not None else 0


def canonical_form(g: Graph) -> Graph:
    return graph_from_code(g.order, canonical_code(g))


@lru_cache(maxsize=None)
def _canonical_codes(order: int) -> Tuple[int, ...]:
    """Classes d'isomorphie d'ordre donné, par ajout d'un sommet aux classes d'ordre − 1"""
    if order <= 1:
        return (0,)
    codes = set()
    for smaller in _canonical_codes(order - 1):
        base = graph_from_code(order - 1, smaller)
        for neighbours in range(1 << (order - 1)):
            masks = list(base.masks) + [neighbours]
            for u in iter_bits(neighbours):
                masks[u] |= 1 << (order - 1)
            codes.add(canonical_code(Graph(order, tuple(masks))))
    logger.info(f"ordre {order}: {len(codes)} classes d'isomorphie")
    return tuple(sorted(codes))


# --- itération ---

def _exhaustive(spec: Corpus) -> Iterator[Graph]:
    for order in range(spec.min_order, spec.max_order + 1):
        if spec.dedup == "canonical":
            codes = iter(_canonical_codes(order))
        else:
            codes = iter(range(1 << pair_count(order)))
        for code in codes:
            g = graph_from_code(order, code)
            if spec.connected and not is_connected(g):
                continue
            yield g


def _from_file(spec: Corpus, errors: Optional[CorpusErrors]) -> Iterator[Graph]:
    with open(Path(spec.path), "r", encoding="ascii") as handle:
        for line_no, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                g = g6_decode(line)
            except Graph6Error as e:
                logger.error(f"ligne {line_no} ignorée: {str(e)}")
                if errors is not None:
                    errors.lines.append((line_no, str(e)))
                continue
            if spec.connected and not is_connected(g):
                continue
            yield g


def _random(spec: Corpus) -> Iterator[Graph]:
    rng = random.Random(spec.seed)
    pairs = list(upper_triangle_pairs(spec.max_order))
    emitted = 0
    attempt = 0
    while emitted < spec.count:
        p = EDGE_PROBABILITIES[attempt % len(EDGE_PROBABILITIES)]
        attempt += 1
        masks = [0] * spec.max_order
        for i, j in pairs:
            if rng.random() < p:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
        g = Graph(spec.max_order, tuple(masks))
        if spec.connected and not is_connected(g):
            continue
        emitted += 1
        yield g


def iterate_corpus(spec: Corpus, errors: Optional[CorpusErrors] = None) -> Iterator[Graph]:
    """Flux déterministe de graphes selon la description du corpus"""
    if spec.source == "exhaustive":
        yield from _exhaustive(spec)
    elif spec.source == "family":
        for n in range(spec.min_order, spec.max_order + 1):
            yield family(spec.family, n, spec.thorns or None)
    elif spec.source == "graph6":
        yield from _from_file(spec, errors)
    else:
        yield from _random(spec)


def sort_key(g: Graph) -> Tuple[int, int]:
    return g.order, adjacency_code(g)
