"""
Représentation immuable des graphes simples

Les adjacences sont stockées en masques de bits (un entier par sommet), ce qui
permet aux solveurs exacts de travailler par algèbre d'ensembles.
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, Sequence, Tuple
import logging

from app.services.errors import Graph6Error, GraphError

logger = logging.getLogger(__name__)

MAX_ORDER = 62

VertexSet = FrozenSet[int]


def iter_bits(mask: int) -> Iterator[int]:
    """Itère les indices des bits à 1, du plus petit au plus grand"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> VertexSet:
    return frozenset(iter_bits(mask))


def pair_count(order: int) -> int:
    return order * (order - 1) // 2


def upper_triangle_pairs(order: int) -> Iterator[Tuple[int, int]]:
    """Paires (i, j), i < j, dans l'ordre graph6: x(0,1), x(0,2), x(1,2), x(0,3)..."""
    for j in range(1, order):
        for i in range(j):
            yield i, j


@dataclass(frozen=True)
class Graph:
    """Graphe simple non orienté: ordre et masque d'adjacence par sommet"""

    order: int
    masks: Tuple[int, ...]

    @property
    def vertex_mask(self) -> int:
        return (1 << self.order) - 1

    def adjacency(self, v: int) -> VertexSet:
        return members(self.masks[v])

    def degree(self, v: int) -> int:
        return self.masks[v].bit_count()

    def degrees(self) -> List[int]:
        return [m.bit_count() for m in self.masks]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def edges(self) -> List[Tuple[int, int]]:
        return [(i, j) for i, j in upper_triangle_pairs(self.order) if self.masks[i] >> j & 1]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def closed_mask(self, v: int) -> int:
        return self.masks[v] | (1 << v)

    def is_bipartite(self) -> bool:
        side = [-1] * self.order
        for start in range(self.order):
            if side[start] >= 0:
                continue
            side[start] = 0
            stack = [start]
            while stack:
                u = stack.pop()
                for w in iter_bits(self.masks[u]):
                    if side[w] < 0:
                        side[w] = 1 - side[u]
                        stack.append(w)
                    elif side[w] == side[u]:
                        return False
        return True

    def permute(self, perm: Sequence[int]) -> "Graph":
        """Renumérote: l'ancien sommet v devient perm[v]"""
        masks = [0] * self.order
        for v in range(self.order):
            masks[perm[v]] = mask_of(perm[w] for w in iter_bits(self.masks[v]))
        return Graph(self.order, tuple(masks))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edges()})"


def _check_order(order: int) -> None:
    if order < 0 or order > MAX_ORDER:
        raise GraphError(f"ordre {order} hors de [0, {MAX_ORDER}]")


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.order:
        raise GraphError(f"sommet {v} hors de [0, {g.order})")


def build_graph(order: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    """Construit un graphe à partir d'une liste d'arêtes (dédupliquées, symétrisées)"""
    _check_order(order)
    masks = [0] * order
    for u, v in edges:
        if u == v:
            raise GraphError(f"boucle interdite sur le sommet {u}")
        if not (0 <= u < order and 0 <= v < order):
            raise GraphError(f"arête ({u}, {v}) hors de [0, {order})")
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph(order, tuple(masks))


def vertex_set(g: Graph, vertices: Iterable[int]) -> VertexSet:
    vs = frozenset(vertices)
    for v in vs:
        _check_vertex(g, v)
    return vs


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Sous-graphe induit; la renumérotation conserve l'ordre croissant d'origine"""
    chosen = sorted(vertex_set(g, s))
    index = {v: i for i, v in enumerate(chosen)}
    keep = mask_of(chosen)
    masks = tuple(mask_of(index[w] for w in iter_bits(g.masks[v] & keep)) for v in chosen)
    return Graph(len(chosen), masks)


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.order, tuple(full & ~m & ~(1 << v) for v, m in enumerate(g.masks)))


def join_k1(g: Graph) -> Graph:
    """K1 + G: le nouveau sommet (indice n) est adjacent à tous les autres"""
    _check_order(g.order + 1)
    n = g.order
    masks = tuple(m | (1 << n) for m in g.masks) + (g.vertex_mask,)
    return Graph(n + 1, masks)


def closed_neighbourhood(g: Graph, v: int) -> VertexSet:
    _check_vertex(g, v)
    return members(g.closed_mask(v))


def is_connected(g: Graph) -> bool:
    if g.order <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        reach = 0
        for v in iter_bits(frontier):
            reach |= g.masks[v]
        frontier = reach & ~seen
        seen |= frontier
    return seen == g.vertex_mask


# --- codes d'adjacence (ordre des corpus) ---

def adjacency_code(g: Graph) -> int:
    """Chaîne de bits graph6 lue comme entier, x(0,1) en bit de poids fort"""
    code = 0
    for i, j in upper_triangle_pairs(g.order):
        code = (code << 1) | (g.masks[i] >> j & 1)
    return code


def graph_from_code(order: int, code: int) -> Graph:
    m = pair_count(order)
    masks = [0] * order
    k = m - 1
    for i, j in upper_triangle_pairs(order):
        if code >> k & 1:
            masks[i] |= 1 << j
            masks[j] |= 1 << i
        k -= 1
    return Graph(order, tuple(masks))


# --- graph6 ---

def g6_encode(g: Graph) -> str:
    n = g.order
    bits = [g.masks[i] >> j & 1 for i, j in upper_triangle_pairs(n)]
    bits.extend([0] * (-len(bits) % 6))
    chars = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = (value << 1) | b
        chars.append(chr(value + 63))
    return "".join(chars)


def g6_decode(text: str) -> Graph:
    """Décode une ligne graph6 (ordre ≤ 62, en-tête >>graph6<< toléré)"""
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    if not data:
        raise Graph6Error("texte graph6 vide")
    values = []
    for ch in data:
        value = ord(ch) - 63
        if not 0 <= value <= 63:
            raise Graph6Error(f"caractère graph6 illégal: {ch!r}")
        values.append(value)
    n = values[0]
    if n > MAX_ORDER:
        raise Graph6Error(f"ordre {n} non supporté (format court uniquement)")
    m = pair_count(n)
    expected = (m + 5) // 6
    if len(values) - 1 != expected:
        raise Graph6Error(f"longueur graph6 invalide: {len(values) - 1} octets, {expected} attendus")
    bits = []
    for value in values[1:]:
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[m:]):
        raise Graph6Error("bits de remplissage non nuls")
    masks = [0] * n
    for bit, (i, j) in zip(bits, upper_triangle_pairs(n)):
        if bit:
            masks[i] |= 1 << j
            masks[j] |= 1 << i
    return Graph(n, tuple(masks))
