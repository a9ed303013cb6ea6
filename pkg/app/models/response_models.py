"""
Modèles de requête (pydantic) et constructeurs de réponses
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, model_validator


class GraphRequest(BaseModel):
    """Un graphe: texte graph6, ou famille + n (+ épines)"""

    graph6: Optional[str] = None
    family: Optional[str] = None
    n: Optional[int] = Field(default=None, ge=0)
    thorns: Optional[List[int]] = None

    @model_validator(mode="after")
    def exactly_one_source(self):
        if (self.graph6 is None) == (self.family is None):
            raise ValueError("fournir exactement une source: graph6 ou family")
        if self.family is not None and self.n is None:
            raise ValueError("le paramètre n est requis avec family")
        return self


class ColouringRequest(GraphRequest):
    rule: str = Field(default="imax", pattern="^(imax|convention)$")
    mode: str = Field(default="deterministic", pattern="^(deterministic|exhaustive)$")
    budget: Optional[int] = Field(default=None, gt=0)


class RainbowRequest(GraphRequest):
    sample: bool = False
    seed: int = 0
    budget: Optional[int] = Field(default=None, gt=0)


class ClaimRequest(BaseModel):
    lo: Optional[int] = Field(default=None, ge=0)
    hi: Optional[int] = Field(default=None, ge=0)
    max_order: Optional[int] = Field(default=None, ge=1, le=8)
    dedup: Optional[str] = Field(default=None, pattern="^(none|canonical)$")
    seed: Optional[int] = None


class ConjectureRequest(BaseModel):
    max_order: int = Field(default=6, ge=1, le=9)
    connected_only: bool = True
    dedup: bool = True
    seed: Optional[int] = None
    samples: int = Field(default=0, ge=0)


class InvariantRow(BaseModel):
    """Ligne du rapport d'invariants (docs/report_schema.json)"""

    graph6: str
    order: int
    omega: Optional[int]
    alpha: Optional[int]
    chi: Optional[int]
    max_clique_count: Optional[int]
    max_independent_set_count: Optional[int]
    min_degree: Optional[int]
    chi_imax: Optional[int]
    alpha_imax: Optional[int]
    r_convention: Optional[int]
    r_imax: Optional[int]
    r_minus: Optional[int]
    r_plus: Optional[int]
    rainbow_exact: bool
    weakly_perfect: Optional[bool]
    perfect_bruteforce: Optional[Any]
    perfect_hole_based: Optional[bool]
    every_vertex_in_max_clique: Optional[bool]
    perfection_witness: Optional[List[int]]
    status: str
    skipped: List[str]


def create_report_response(kind: str, payload: Any) -> Dict[str, Any]:
    """Enveloppe de réponse réussie"""
    return {"kind": kind, "result": payload, "status": "success"}


def create_claims_response(results: List[Dict[str, Any]]) -> Dict[str, Any]:
    verdicts: Dict[str, int] = {}
    for r in results:
        verdicts[r["verdict"]] = verdicts.get(r["verdict"], 0) + 1
    return {
        "kind": "claims",
        "results": results,
        "verdicts": dict(sorted(verdicts.items())),
        "status": "success",
    }


def create_error_response(error_message: str, error_type: str = "GraphError") -> Dict[str, Any]:
    """Crée une réponse d'erreur"""
    return {"error": error_message, "error_type": error_type, "status": "error"}
