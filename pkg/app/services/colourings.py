"""
Colorations par effeuillage d'ensembles indépendants maximum

- imax_colouring: à chaque tour, l'ensemble indépendant maximum qui MINIMISE α du
  graphe résiduel (coloration maximax-indépendance, nombre χ^{i-max})
- convention_colouring: même structure, règle MAXIMISANT α résiduel
  (convention du voisinage arc-en-ciel)

Mode déterministe: égalités départagées par masque croissant. Mode exhaustif:
exploration de tous les choix à égalité, bornes min/max du nombre de couleurs.
"""

from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple
import logging
import random

from app.config import settings
from app.services.errors import BudgetExceededError, GraphError, ImproperColouringError
from app.services.generators import ThornSpec
from app.services.graph_core import Graph, VertexSet, iter_bits, members
from app.services.invariants import (
    chromatic_number,
    independence_number_in,
    maximum_independent_sets_in,
)

logger = logging.getLogger(__name__)

DETERMINISTIC = "deterministic"
EXHAUSTIVE = "exhaustive"
MODES = (DETERMINISTIC, EXHAUSTIVE)


@dataclass(frozen=True)
class Colouring:
    """Affectation sommet → couleur (c1..cℓ, indices à partir de 1)"""

    assignment: Tuple[int, ...]
    num_colours: int

    def __post_init__(self):
        seen = set(self.assignment)
        if any(c < 1 or c > self.num_colours for c in seen):
            raise ImproperColouringError(f"couleur hors de [1, {self.num_colours}]")
        if len(seen) != self.num_colours:
            raise ImproperColouringError("chaque classe de couleur doit être non vide")

    @classmethod
    def from_assignment(cls, assignment: Sequence[int]) -> "Colouring":
        return cls(tuple(assignment), max(assignment, default=0))

    @classmethod
    def from_classes(cls, order: int, class_masks: Sequence[int]) -> "Colouring":
        assignment = [0] * order
        for colour, mask in enumerate(class_masks, start=1):
            for v in iter_bits(mask):
                assignment[v] = colour
        if 0 in assignment:
            raise ImproperColouringError("les classes ne couvrent pas tous les sommets")
        return cls(tuple(assignment), len(class_masks))

    @property
    def order(self) -> int:
        return len(self.assignment)

    @property
    def class_masks(self) -> Tuple[int, ...]:
        masks = [0] * self.num_colours
        for v, c in enumerate(self.assignment):
            masks[c - 1] |= 1 << v
        return tuple(masks)

    @property
    def classes(self) -> Tuple[VertexSet, ...]:
        return tuple(members(m) for m in self.class_masks)

    @property
    def weights(self) -> Tuple[int, ...]:
        """θ(c_i) = |C_i|"""
        return tuple(m.bit_count() for m in self.class_masks)

    def relabel(self, perm: Sequence[int]) -> "Colouring":
        """Permute les étiquettes: la couleur c devient perm[c-1]"""
        return Colouring(tuple(perm[c - 1] for c in self.assignment), self.num_colours)

    def to_dict(self) -> Dict[str, list]:
        return {
            "colours": list(self.assignment),
            "classes": [sorted(c) for c in self.classes],
            "weights": list(self.weights),
        }


@dataclass(frozen=True)
class TraceRound:
    iteration: int
    chosen: VertexSet
    residual_alpha: int
    ties: int


@dataclass(frozen=True)
class ColouringTrace:
    rounds: Tuple[TraceRound, ...]

    def to_list(self) -> List[dict]:
        return [
            {
                "iteration": r.iteration,
                "chosen": sorted(r.chosen),
                "residual_alpha": r.residual_alpha,
                "ties": r.ties,
            }
            for r in self.rounds
        ]


@dataclass(frozen=True)
class PeelingResult:
    colouring: Colouring
    trace: ColouringTrace
    mode: str
    min_colours: Optional[int] = None
    max_colours: Optional[int] = None

    @property
    def num_colours(self) -> int:
        return self.colouring.num_colours


def is_proper(g: Graph, c: Colouring) -> bool:
    if c.order != g.order:
        raise ImproperColouringError(f"coloration de {c.order} sommets pour un graphe d'ordre {g.order}")
    return all(c.assignment[u] != c.assignment[v] for u, v in g.edges())


def _candidates(g: Graph, residual: int, maximise: bool) -> Tuple[List[int], int]:
    """Ensembles indépendants maximum du résiduel retenus par la règle, et α résiduel visé"""
    scored = [
        (independence_number_in(g, residual & ~x), x)
        for x in maximum_independent_sets_in(g, residual)
    ]
    target = max(s for s, _ in scored) if maximise else min(s for s, _ in scored)
    return [x for s, x in scored if s == target], target


def _peel(g: Graph, maximise: bool, mode: str, budget: Optional[int]) -> PeelingResult:
    if mode not in MODES:
        raise GraphError(f"mode inconnu: {mode}")
    if g.order < 1:
        raise GraphError("l'effeuillage demande au moins un sommet")
    rounds: List[TraceRound] = []
    classes: List[int] = []
    residual = g.vertex_mask
    while residual:
        ties, target = _candidates(g, residual, maximise)
        chosen = ties[0]
        classes.append(chosen)
        residual &= ~chosen
        rounds.append(TraceRound(len(rounds) + 1, members(chosen), target, len(ties)))
    colouring = Colouring.from_classes(g.order, classes)
    trace = ColouringTrace(tuple(rounds))
    if mode == DETERMINISTIC:
        return PeelingResult(colouring, trace, mode)

    limit = budget if budget is not None else settings.imax_branch_budget
    memo: Dict[int, Tuple[int, int]] = {}
    nodes = 0

    def explore(residual: int) -> Tuple[int, int]:
        nonlocal nodes
        if residual == 0:
            return 0, 0
        if residual in memo:
            return memo[residual]
        nodes += 1
        if nodes > limit:
            raise BudgetExceededError("imax_branch_budget", limit, {"states_explored": len(memo)})
        lo, hi = g.order + 1, 0
        for x in _candidates(g, residual, maximise)[0]:
            a, b = explore(residual & ~x)
            lo, hi = min(lo, a + 1), max(hi, b + 1)
        memo[residual] = (lo, hi)
        return lo, hi

    lo, hi = explore(g.vertex_mask)
    logger.debug(f"effeuillage exhaustif: {len(memo)} résiduels, couleurs {lo}..{hi}")
    return PeelingResult(colouring, trace, mode, lo, hi)


def imax_colouring(g: Graph, mode: str = DETERMINISTIC, budget: Optional[int] = None) -> PeelingResult:
    """Coloration maximax-indépendance (règle du minimum de α résiduel)"""
    return _peel(g, False, mode, budget)


def convention_colouring(g: Graph, mode: str = DETERMINISTIC, budget: Optional[int] = None) -> PeelingResult:
    """Coloration selon la convention arc-en-ciel (règle du maximum de α résiduel)"""
    return _peel(g, True, mode, budget)


def chi_imax(g: Graph) -> int:
    return imax_colouring(g).num_colours


def imax_number(g: Graph) -> int:
    """α^{i-max} = χ^{i-max} − χ"""
    return chi_imax(g) - chromatic_number(g)


class ChromaticPartitions:
    """Flux des partitions de V en exactement χ ensembles indépendants non vides.

    Chaque partition est produite une fois, classes ordonnées par plus petit sommet.
    Si le budget est atteint, l'itération s'arrête et `truncated` passe à True.
    """

    def __init__(self, g: Graph, chi: Optional[int] = None, budget: Optional[int] = None):
        self.graph = g
        self.chi = chi if chi is not None else chromatic_number(g)
        self.budget = budget if budget is not None else settings.partition_budget
        self.truncated = False
        self.emitted = 0

    def _grow(self, v: int, classes: List[int]) -> Iterator[Tuple[int, ...]]:
        g, chi = self.graph, self.chi
        if v == g.order:
            yield tuple(classes)
            return
        missing = chi - len(classes)
        if missing <= g.order - v - 1:
            for idx, cm in enumerate(classes):
                if not cm & g.masks[v]:
                    classes[idx] = cm | (1 << v)
                    yield from self._grow(v + 1, classes)
                    classes[idx] = cm
        if missing > 0:
            classes.append(1 << v)
            yield from self._grow(v + 1, classes)
            classes.pop()

    def __iter__(self) -> Iterator[Colouring]:
        for class_masks in self._grow(0, []):
            if self.emitted >= self.budget:
                self.truncated = True
                logger.warning(f"énumération des partitions tronquée à {self.budget}")
                return
            self.emitted += 1
            yield Colouring.from_classes(self.graph.order, class_masks)


def enumerate_chromatic_partitions(g: Graph, budget: Optional[int] = None) -> ChromaticPartitions:
    return ChromaticPartitions(g, budget=budget)


def sample_chromatic_partitions(g: Graph, count: int, seed: int) -> Iterator[Colouring]:
    """Partitions chromatiques tirées par recherche aléatoire graine fixée (non uniforme)"""
    rng = random.Random(seed)
    chi = chromatic_number(g)
    n = g.order

    def descend(v: int, classes: List[int]) -> Optional[List[int]]:
        if v == n:
            return list(classes)
        missing = chi - len(classes)
        options = []
        if missing <= n - v - 1:
            options += [idx for idx, cm in enumerate(classes) if not cm & g.masks[v]]
        if missing > 0:
            options.append(-1)
        rng.shuffle(options)
        for idx in options:
            if idx < 0:
                classes.append(1 << v)
                found = descend(v + 1, classes)
                classes.pop()
            else:
                classes[idx] |= 1 << v
                found = descend(v + 1, classes)
                classes[idx] &= ~(1 << v)
            if found is not None:
                return found
        return None

    for _ in range(count):
        found = descend(0, [])
        if found is None:
            return
        # classes ordonnées par plus petit sommet
        yield Colouring.from_classes(n, sorted(found, key=lambda m: m & -m))


def example_thorn_colouring(n: int, spec: ThornSpec) -> Colouring:
    """Coloration de l'exemple des graphes complets épineux.

    v1 et les épines des v_i (i ≥ 2) reçoivent c1, les épines de v1 reçoivent c2,
    v_i reçoit c_i pour i ≥ 2.
    """
    if len(spec.t) != n:
        raise GraphError(f"{len(spec.t)} nombres d'épines pour n={n}")
    assignment = [1] + list(range(2, n + 1))
    for i, ti in enumerate(spec.t):
        assignment += [2 if i == 0 else 1] * ti
    return Colouring.from_assignment(assignment)
