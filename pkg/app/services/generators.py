"""
Familles de graphes: graphes d'ensembles, chemins, cycles, complets, nuls,
soleils (sunlet), soleils vides (empty-sun), graphes complets épineux
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Dict, List, Optional, Sequence, Tuple
import logging

from app.services.errors import GraphError, UnknownFamilyError
from app.services.graph_core import Graph, build_graph, join_k1

logger = logging.getLogger(__name__)

SET_GRAPH_MAX_N = 5


@dataclass(frozen=True)
class SetGraphLabel:
    """Étiquette v_{s,i}: i-ème sous-ensemble à s éléments (i à partir de 1)"""

    s: int
    i: int
    subset: Tuple[int, ...]

    def __str__(self) -> str:
        return f"v{self.s},{self.i}"


@dataclass(frozen=True)
class SetGraph:
    graph: Graph
    labels: Tuple[SetGraphLabel, ...]

    def vertex_of(self, s: int, i: int) -> int:
        for v, label in enumerate(self.labels):
            if label.s == s and label.i == i:
                return v
        raise GraphError(f"étiquette v{s},{i} absente")

    def label_map(self) -> Dict[str, int]:
        return {str(label): v for v, label in enumerate(self.labels)}


@dataclass(frozen=True)
class ThornSpec:
    """Nombre d'épines t_i ≥ 1 par sommet de base"""

    t: Tuple[int, ...]

    def __post_init__(self):
        if any(ti < 1 for ti in self.t):
            raise GraphError(f"chaque sommet doit porter au moins une épine: {list(self.t)}")

    @classmethod
    def ones(cls, n: int) -> "ThornSpec":
        return cls(tuple([1] * n))

    @property
    def total(self) -> int:
        return sum(self.t)


def set_graph(n: int) -> SetGraph:
    """Graphe d'ensembles G_{A^(n)}: sous-ensembles non vides, arête si intersection non vide.

    Ordre d'énumération: cardinal croissant, puis colexicographique (masque croissant).
    """
    if not 1 <= n <= SET_GRAPH_MAX_N:
        raise GraphError(f"n={n} hors de [1, {SET_GRAPH_MAX_N}] pour un graphe d'ensembles")
    subsets: List[int] = []
    labels: List[SetGraphLabel] = []
    for s in range(1, n + 1):
        block = sorted(sum(1 << e for e in combo) for combo in combinations(range(n), s))
        for i, mask in enumerate(block, start=1):
            subsets.append(mask)
            elements = tuple(e + 1 for e in range(n) if mask >> e & 1)
            labels.append(SetGraphLabel(s, i, elements))
    edges = [
        (u, v)
        for u, v in combinations(range(len(subsets)), 2)
        if subsets[u] & subsets[v]
    ]
    return SetGraph(build_graph(len(subsets), edges), tuple(labels))


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"chemin: n={n} < 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle: n={n} < 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"graphe complet: n={n} < 1")
    return build_graph(n, combinations(range(n), 2))


def null(n: int) -> Graph:
    if n < 0:
        raise GraphError(f"graphe nul: n={n} < 0")
    return build_graph(n, [])


def sunlet(n: int) -> Graph:
    """C_n plus un sommet pendant n+i sur chaque sommet i du cycle"""
    if n < 3:
        raise GraphError(f"sunlet: n={n} < 3")
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, n + i) for i in range(n)]
    return build_graph(2 * n, edges)


def empty_sun(n: int) -> Graph:
    """C_n plus un sommet extérieur n+i adjacent à i et (i+1) mod n"""
    if n < 3:
        raise GraphError(f"empty-sun: n={n} < 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    for i in range(n):
        edges += [(n + i, i), (n + i, (i + 1) % n)]
    return build_graph(2 * n, edges)


def complete_thorn(g: Graph, spec: ThornSpec) -> Graph:
    """Attache t_i sommets pendants au sommet i, indices attribués dans l'ordre des sommets"""
    if len(spec.t) != g.order:
        raise GraphError(f"{len(spec.t)} nombres d'épines pour un graphe d'ordre {g.order}")
    edges = g.edges()
    nxt = g.order
    for v, ti in enumerate(spec.t):
        for _ in range(ti):
            edges.append((v, nxt))
            nxt += 1
    return build_graph(nxt, edges)


def thorn_complete(n: int, spec: ThornSpec) -> Graph:
    if n < 3:
        raise GraphError(f"thorn-complete: n={n} < 3")
    return complete_thorn(complete(n), spec)


def star(n: int) -> Graph:
    return join_k1(null(n))


def wheel(n: int) -> Graph:
    return join_k1(cycle(n))


def _thorns(n: int, thorns: Optional[Sequence[int]]) -> ThornSpec:
    return ThornSpec(tuple(thorns)) if thorns else ThornSpec.ones(n)


FAMILIES: Dict[str, Callable[[int, Optional[Sequence[int]]], Graph]] = {
    "set-graph": lambda n, t: set_graph(n).graph,
    "path": lambda n, t: path(n),
    "cycle": lambda n, t: cycle(n),
    "complete": lambda n, t: complete(n),
    "null": lambda n, t: null(n),
    "sunlet": lambda n, t: sunlet(n),
    "empty-sun": lambda n, t: empty_sun(n),
    "thorn-complete": lambda n, t: thorn_complete(n, _thorns(n, t)),
    "star": lambda n, t: star(n),
    "wheel": lambda n, t: wheel(n),
}


def family(name: str, n: int, thorns: Optional[Sequence[int]] = None) -> Graph:
    """Construit un membre de famille par son nom (CLI et API)"""
    try:
        builder = FAMILIES[name]
    except KeyError:
        raise UnknownFamilyError(f"famille inconnue: {name} (connues: {', '.join(sorted(FAMILIES))})")
    return builder(n, thorns)
