from fastapi import APIRouter
from fastapi.responses import JSONResponse
import platform
import psutil

from app import __version__
from app.services.claims import REGISTRY

version_router = APIRouter()


@version_router.get('/version')
async def get_version():
    """Informations de version"""
    return JSONResponse({
        "service": "chromatic-harness",
        "version": __version__,
        "pythonVersion": platform.python_version(),
        "platform": platform.system().lower(),
        "claims": len(REGISTRY),
        "memory": {
            "total": psutil.virtual_memory().total,
            "available": psutil.virtual_memory().available,
        },
    })
