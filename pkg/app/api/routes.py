"""
Routes API: invariants, colorations, arc-en-ciel, perfection et registre d'énoncés
"""

from fastapi import APIRouter, HTTPException
from fastapi.responses import JSONResponse
from typing import Callable, Dict, Any
import logging

from app.api.metrics import record_claim, record_graph
from app.models.response_models import (
    ClaimRequest,
    ColouringRequest,
    ConjectureRequest,
    GraphRequest,
    InvariantRow,
    RainbowRequest,
    create_claims_response,
    create_error_response,
    create_report_response,
)
from app.services.claims import REGISTRY, GROUPS, ScopeOptions, conjecture_search, expand_claim_ids, run_check
from app.services.corpus import CANONICAL_MAX_ORDER
from app.services.errors import BudgetExceededError, GraphError, UnknownClaimError
from app.services.generators import FAMILIES, SET_GRAPH_MAX_N
from app.services.graph_core import MAX_ORDER
from app.services.report_service import GraphReportService, resolve_graph

logger = logging.getLogger(__name__)

router = APIRouter()
report_service = GraphReportService()


def _graph_of(request: GraphRequest):
    return resolve_graph(request.graph6, request.family, request.n, request.thorns)


def _guarded(label: str, compute: Callable[[], Dict[str, Any]]) -> JSONResponse:
    """GraphError → 400, budget épuisé → 422, le reste → 500"""
    try:
        return JSONResponse(content=compute(), status_code=200)
    except HTTPException:
        raise
    except GraphError as e:
        logger.error(f"Erreur {label}: {str(e)}")
        raise HTTPException(status_code=400, detail=str(e))
    except BudgetExceededError as e:
        logger.error(f"Budget épuisé ({label}): {str(e)}")
        return JSONResponse(content=create_error_response(str(e), "BudgetExceededError"), status_code=422)
    except Exception as e:
        logger.error(f"Erreur {label}: {str(e)}")
        return JSONResponse(
            content={"error": "Erreur interne du serveur", "details": str(e), "status": "error"},
            status_code=500,
        )


@router.get("/health")
async def health_check():
    """Vérification de santé"""
    return {"status": "healthy", "service": "chromatic-harness"}


@router.get("/capabilities")
async def get_capabilities():
    """Capacités et limites du service"""
    return {
        "families": sorted(FAMILIES),
        "max_order": MAX_ORDER,
        "set_graph_max_n": SET_GRAPH_MAX_N,
        "canonical_max_order": CANONICAL_MAX_ORDER,
        "colouring_rules": ["imax", "convention"],
        "modes": ["deterministic", "exhaustive"],
        "claims": len(REGISTRY),
    }


@router.get("/families")
async def get_families():
    return {"families": sorted(FAMILIES)}


# Handlers de calcul en def: FastAPI les exécute dans son pool de threads
@router.post("/invariants")
def invariants(request: GraphRequest):
    def compute():
        g = _graph_of(request)
        record_graph()
        row = InvariantRow.model_validate(report_service.invariants(g)).model_dump()
        return create_report_response("invariants", row)
    return _guarded("invariants", compute)


@router.post("/colourings")
def colourings(request: ColouringRequest):
    def compute():
        g = _graph_of(request)
        record_graph()
        return create_report_response("colouring", report_service.colouring(g, request.rule, request.mode, request.budget))
    return _guarded("coloration", compute)


@router.post("/rainbow")
def rainbow(request: RainbowRequest):
    def compute():
        g = _graph_of(request)
        record_graph()
        service = GraphReportService(seed=request.seed)
        return create_report_response("rainbow", service.rainbow(g, request.sample, request.budget))
    return _guarded("arc-en-ciel", compute)


@router.post("/perfection")
def perfection(request: GraphRequest):
    def compute():
        g = _graph_of(request)
        record_graph()
        return create_report_response("perfection", report_service.perfection(g))
    return _guarded("perfection", compute)


@router.get("/claims")
async def list_claims():
    return {
        "claims": [
            {"claim_id": spec.claim_id, "title": spec.title, "kind": spec.kind}
            for spec in REGISTRY.values()
        ],
        "groups": {name: list(ids) for name, ids in GROUPS.items()},
    }


@router.post("/claims/{claim_id}")
def check_claim(claim_id: str, request: ClaimRequest):
    def compute():
        try:
            ids = expand_claim_ids([claim_id])
        except UnknownClaimError:
            raise HTTPException(status_code=404, detail=f"énoncé inconnu: {claim_id}")
        span = (request.lo, request.hi) if request.lo is not None and request.hi is not None else None
        options = ScopeOptions(range=span, max_order=request.max_order, dedup=request.dedup, seed=request.seed)
        results = []
        for cid in ids:
            result = run_check(cid, options, jobs=1)
            record_claim(result.verdict)
            results.append(result.to_dict())
        return create_claims_response(results)
    return _guarded("énoncé", compute)


@router.post("/conjecture")
def conjecture(request: ConjectureRequest):
    def compute():
        result = conjecture_search(
            request.max_order, request.connected_only, request.dedup,
            seed=request.seed, samples=request.samples, jobs=1,
        )
        record_claim(result.verdict)
        return create_claims_response([result.to_dict()])
    return _guarded("conjecture", compute)
