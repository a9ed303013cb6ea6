"""
Service de rapports: agrège invariants, colorations, arc-en-ciel et perfection
pour un graphe. Un champ dont le budget est épuisé est marqué « skipped ».
"""

from typing import Any, Callable, Dict, List, Optional
import logging

import numpy as np

from app.config import settings
from app.services.colourings import (
    DETERMINISTIC,
    EXHAUSTIVE,
    convention_colouring,
    imax_colouring,
)
from app.services.errors import BudgetExceededError, GraphError
from app.services.generators import family
from app.services.graph_core import Graph, g6_decode, g6_encode
from app.services.invariants import invariant_report
from app.services.perfection import perfection_report
from app.services.rainbow import r_imax, rainbow_bounds, rainbow_number, rainbow_sample_bounds

logger = logging.getLogger(__name__)

COMPLETE = "complete"
PARTIAL = "partial"

# Ordre fixe des colonnes CSV du rapport d'invariants
INVARIANT_COLUMNS = [
    "graph6", "order", "omega", "alpha", "chi", "max_clique_count",
    "max_independent_set_count", "min_degree", "chi_imax", "alpha_imax",
    "r_convention", "r_imax", "r_minus", "r_plus", "rainbow_exact",
    "weakly_perfect", "perfect_bruteforce", "perfect_hole_based",
    "every_vertex_in_max_clique", "status", "skipped",
]


def convert_to_serializable(obj):
    """Convertit les objets numpy et ensembles en types Python natifs sérialisables"""
    if isinstance(obj, np.integer):
        return int(obj)
    elif isinstance(obj, np.bool_):
        return bool(obj)
    elif isinstance(obj, np.ndarray):
        return obj.tolist()
    elif isinstance(obj, (set, frozenset)):
        return sorted(convert_to_serializable(x) for x in obj)
    elif isinstance(obj, dict):
        return {key: convert_to_serializable(value) for key, value in obj.items()}
    elif isinstance(obj, (list, tuple)):
        return [convert_to_serializable(item) for item in obj]
    return obj


def resolve_graph(graph6: Optional[str] = None, family_name: Optional[str] = None,
                  n: Optional[int] = None, thorns: Optional[List[int]] = None) -> Graph:
    """Exactement une source: texte graph6 ou famille + paramètre"""
    if (graph6 is None) == (family_name is None):
        raise GraphError("fournir exactement une source: graph6 ou famille")
    if graph6 is not None:
        return g6_decode(graph6)
    if n is None:
        raise GraphError(f"famille {family_name}: paramètre n requis")
    return family(family_name, n, thorns)


class GraphReportService:
    """Rapports par graphe pour la CLI et l'API"""

    def __init__(self, seed: int = 0, sample_size: Optional[int] = None):
        self.seed = seed
        self.sample_size = sample_size

    def _field(self, name: str, compute: Callable[[], Any], skipped: List[str]) -> Any:
        try:
            return compute()
        except BudgetExceededError as e:
            logger.error(f"Champ {name} ignoré: {str(e)}")
            skipped.append(name)
            return None

    def invariants(self, g: Graph) -> Dict[str, Any]:
        """Rapport complet: invariants, χ^{i-max}, α^{i-max}, r sous convention, r⁻, r⁺, perfection"""
        skipped: List[str] = []
        row: Dict[str, Any] = {"graph6": g6_encode(g), "order": g.order}

        base = self._field("invariants", lambda: invariant_report(g).to_dict(), skipped)
        if base is not None:
            row.update(base)
        else:
            for key in ("omega", "alpha", "chi", "max_clique_count", "max_independent_set_count", "min_degree"):
                row[key] = None

        if g.order == 0:
            row.update({"chi_imax": 0, "alpha_imax": 0, "r_convention": 0, "r_imax": 0})
        else:
            row["chi_imax"] = self._field("chi_imax", lambda: imax_colouring(g).num_colours, skipped)
            row["alpha_imax"] = (
                row["chi_imax"] - row["chi"]
                if row["chi_imax"] is not None and row["chi"] is not None else None
            )
            row["r_convention"] = self._field(
                "r_convention", lambda: rainbow_number(g, convention_colouring(g).colouring).r, skipped
            )
            row["r_imax"] = self._field("r_imax", lambda: r_imax(g).r, skipped)

        bounds = self._field("rainbow_bounds", lambda: rainbow_bounds(g), skipped)
        if bounds is not None and not bounds.exact:
            skipped.append("rainbow_bounds")
        row["r_minus"] = bounds.r_minus if bounds is not None else None
        row["r_plus"] = bounds.r_plus if bounds is not None else None
        row["rainbow_exact"] = bool(bounds is not None and bounds.exact)

        perfection = self._field("perfection", lambda: perfection_report(g), skipped)
        if perfection is not None:
            row.update({k: v for k, v in perfection.to_dict().items() if k != "witness"})
            row["perfection_witness"] = perfection.to_dict()["witness"]
        else:
            for key in ("weakly_perfect", "perfect_bruteforce", "perfect_hole_based", "every_vertex_in_max_clique"):
                row[key] = None
            row["perfection_witness"] = None

        row["skipped"] = sorted(set(skipped))
        row["status"] = PARTIAL if skipped else COMPLETE
        return convert_to_serializable(row)

    def colouring(self, g: Graph, rule: str = "imax", mode: str = DETERMINISTIC,
                  budget: Optional[int] = None) -> Dict[str, Any]:
        """Coloration par effeuillage avec sa trace (règle imax ou convention)"""
        if rule not in ("imax", "convention"):
            raise GraphError(f"règle inconnue: {rule}")
        peel = imax_colouring if rule == "imax" else convention_colouring
        result = peel(g, mode, budget)
        payload = {
            "graph6": g6_encode(g),
            "rule": rule,
            "mode": mode,
            "colouring": result.colouring.to_dict(),
            "num_colours": result.num_colours,
            "trace": result.trace.to_list(),
        }
        if mode == EXHAUSTIVE:
            payload["min_colours"] = result.min_colours
            payload["max_colours"] = result.max_colours
        return payload

    def rainbow(self, g: Graph, sample: bool = False, budget: Optional[int] = None) -> Dict[str, Any]:
        """r⁻ et r⁺: énumération exacte ou échantillon graine fixée"""
        if sample:
            count = self.sample_size or settings.rainbow_sample_size
            bounds = rainbow_sample_bounds(g, count, self.seed)
        else:
            bounds = rainbow_bounds(g, budget)
        payload = {"graph6": g6_encode(g), "order": g.order, **bounds.to_dict()}
        if g.order:
            payload["r_imax"] = r_imax(g).to_dict()
        return payload

    def perfection(self, g: Graph) -> Dict[str, Any]:
        report = perfection_report(g)
        payload = {"graph6": g6_encode(g), **report.to_dict()}
        payload["methods_agree"] = report.methods_agree
        return payload
