from collections import Counter
from fastapi import APIRouter
from fastapi.responses import Response
import psutil
import time
import os

metrics_router = APIRouter()

_STARTED = time.time()
_GRAPHS = Counter()
_VERDICTS = Counter()


def record_graph() -> None:
    _GRAPHS["analysed"] += 1


def record_claim(verdict: str) -> None:
    _VERDICTS[verdict] += 1


@metrics_router.get('/metrics')
async def get_metrics():
    """Endpoint Prometheus: processus et compteurs du banc"""

    process = psutil.Process(os.getpid())
    process_memory = process.memory_info()

    verdict_lines = "\n".join(
        f'chromatic_harness_claims_total{{verdict="{verdict}"}} {count}'
        for verdict, count in sorted(_VERDICTS.items())
    )

    metrics = f"""# HELP chromatic_harness_cpu_percent Process CPU usage percentage
# TYPE chromatic_harness_cpu_percent gauge
chromatic_harness_cpu_percent {process.cpu_percent(interval=None)}

# HELP chromatic_harness_process_memory_rss Process RSS memory in bytes
# TYPE chromatic_harness_process_memory_rss gauge
chromatic_harness_process_memory_rss {process_memory.rss}

# HELP chromatic_harness_uptime_seconds Service uptime in seconds
# TYPE chromatic_harness_uptime_seconds gauge
chromatic_harness_uptime_seconds {time.time() - _STARTED}

# HELP chromatic_harness_graphs_total Graphs analysed through the API
# TYPE chromatic_harness_graphs_total counter
chromatic_harness_graphs_total {_GRAPHS["analysed"]}

# HELP chromatic_harness_claims_total Claim checks by verdict
# TYPE chromatic_harness_claims_total counter
{verdict_lines}
"""

    return Response(content=metrics, media_type='text/plain')
