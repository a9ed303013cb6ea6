"""Ligne de commande du moteur de coloration exacte.

Exemples:
    python -m app.cli gen set-graph -n 2
    python -m app.cli invariants --family set-graph -n 3
    python -m app.cli claims prop-3.1 --range 3..10
    python -m app.cli conjecture --max-order 6

Codes de sortie: 0 tout vérifié, 1 énoncé prouvé réfuté ou désaccord des oracles,
2 énoncé suspect réfuté, 3 rapport d'invariants partiel, 64 erreur d'usage.
"""

from __future__ import annotations

import argparse
import io
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import pandas as pd

from app.config import settings
from app.services.claims import (
    REGISTRY,
    CheckResult,
    ScopeOptions,
    all_claim_ids,
    conjecture_search,
    expand_claim_ids,
    run_check,
)
from app.services.colourings import MODES
from app.services.corpus import Corpus, CorpusErrors, iterate_corpus
from app.services.errors import BudgetExceededError, GraphError, UnknownClaimError
from app.services.generators import FAMILIES, family
from app.services.graph_core import Graph, g6_decode, g6_encode
from app.services.report_service import INVARIANT_COLUMNS, PARTIAL, GraphReportService

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_HARNESS_BUG = 1
EXIT_SUSPECT_REFUTED = 2
EXIT_PARTIAL = 3
EXIT_USAGE = 64

SCHEMA_PATH = Path(__file__).resolve().parent.parent / "docs" / "report_schema.json"

CLAIM_COLUMNS = [
    "claim_id", "kind", "verdict", "scope", "graphs_scanned",
    "budget_exhausted", "counterexample_count", "first_counterexample",
]


class UsageError(Exception):
    pass


class HarnessParser(argparse.ArgumentParser):
    """argparse avec le code 64 pour les erreurs d'usage"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: erreur: {message}\n")


def _parse_range(text: str) -> Tuple[int, int]:
    try:
        lo, hi = text.split("..")
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"plage attendue sous la forme a..b: {text}")


def _parse_thorns(text: str) -> List[int]:
    try:
        return [int(t) for t in text.split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"épines attendues sous la forme 1,2,3: {text}")


def _add_input(sub: argparse.ArgumentParser) -> None:
    source = sub.add_mutually_exclusive_group(required=True)
    source.add_argument("--family", choices=sorted(FAMILIES), help="Famille de graphes.")
    source.add_argument("--g6", help="Graphe au format graph6.")
    source.add_argument("--file", type=Path, help="Fichier graph6, un graphe par ligne.")
    sub.add_argument("-n", type=int, help="Paramètre de la famille.")
    sub.add_argument("-t", "--thorns", type=_parse_thorns, help="Épines t_i (thorn-complete).")


def _add_output(sub: argparse.ArgumentParser, formats: Sequence[str] = ("json", "csv")) -> None:
    sub.add_argument("--format", choices=formats, default=formats[0], help="Format de sortie.")
    sub.add_argument("--output", type=Path, help="Fichier de sortie (défaut: sortie standard).")


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    parser = HarnessParser(prog="chromatic-harness", description="Coloration exacte et vérification d'énoncés.")
    parser.add_argument("--log-level", default=settings.log_level, help="Niveau de journalisation (stderr).")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="Générer des graphes au format graph6.")
    gen.add_argument("family", choices=sorted(FAMILIES) + ["exhaustive"])
    gen.add_argument("-n", type=int, help="Paramètre de la famille.")
    gen.add_argument("-t", "--thorns", type=_parse_thorns)
    gen.add_argument("--range", type=_parse_range, help="Plage de paramètres a..b.")
    gen.add_argument("--max-order", type=int, help="Ordre maximum (exhaustive).")
    gen.add_argument("--min-order", type=int, default=1)
    gen.add_argument("--all-graphs", action="store_true", help="Inclure les graphes non connexes.")
    gen.add_argument("--dedup", choices=("none", "canonical"), default="none")
    _add_output(gen, ("g6",))

    invariants = commands.add_parser("invariants", help="Rapport d'invariants par graphe.")
    _add_input(invariants)
    _add_output(invariants)

    colour = commands.add_parser("colour", help="Coloration par effeuillage avec trace.")
    _add_input(colour)
    colour.add_argument("--rule", choices=("imax", "convention"), default="imax")
    colour.add_argument("--mode", choices=MODES, default=MODES[0])
    colour.add_argument("--budget", type=int)
    _add_output(colour, ("json",))

    rainbow = commands.add_parser("rainbow", help="r⁻ et r⁺ sur les partitions chromatiques.")
    _add_input(rainbow)
    rainbow.add_argument("--sample", type=int, help="Échantillonner N partitions (exige --seed).")
    rainbow.add_argument("--seed", type=int)
    rainbow.add_argument("--budget", type=int)
    _add_output(rainbow, ("json",))

    perfect = commands.add_parser("perfect", help="Perfection par deux oracles indépendants.")
    _add_input(perfect)
    _add_output(perfect, ("json",))

    claims = commands.add_parser("claims", help="Vérifier des énoncés du registre.")
    claims.add_argument("ids", nargs="*", help="Identifiants ou groupes (ex. prop-3.1).")
    claims.add_argument("--all", action="store_true", help="Tous les énoncés du registre.")
    claims.add_argument("--range", type=_parse_range, help="Plage de paramètres a..b (familles).")
    claims.add_argument("--max-order", type=int, help="Ordre maximum du corpus.")
    claims.add_argument("--dedup", choices=("none", "canonical"))
    claims.add_argument("--seed", type=int)
    claims.add_argument("--samples", type=int)
    _add_run_flags(claims)
    _add_output(claims)

    conjecture = commands.add_parser("conjecture", help="Recherche de contre-exemples à la conjecture.")
    conjecture.add_argument("--max-order", type=int, default=6)
    conjecture.add_argument("--all-graphs", action="store_true", help="Inclure les graphes non connexes.")
    conjecture.add_argument("--no-dedup", action="store_true")
    conjecture.add_argument("--seed", type=int, help="Graine (obligatoire au-delà de l'ordre 7).")
    conjecture.add_argument("--samples", type=int, default=0)
    _add_run_flags(conjecture)
    _add_output(conjecture)

    list_claims = commands.add_parser("list-claims", help="Lister le registre.")
    _add_output(list_claims)

    commands.add_parser("schema", help="Afficher le schéma JSON des rapports.")

    return parser.parse_args(argv)


def _add_run_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--jobs", type=int, default=settings.harness_jobs, help="Processus de travail.")
    sub.add_argument("--progress", action="store_true", help="Barre de progression sur stderr.")
    sub.add_argument("--timings", action="store_true", help="Inclure les durées (sortie non déterministe).")


# --- entrées ---

def _graphs(args: argparse.Namespace) -> List[Graph]:
    if args.family is not None:
        if args.n is None:
            raise UsageError(f"--family {args.family} exige -n")
        return [family(args.family, args.n, args.thorns)]
    if args.g6 is not None:
        return [g6_decode(args.g6)]
    errors = CorpusErrors()
    graphs = list(iterate_corpus(Corpus("graph6", path=str(args.file), connected=False), errors))
    for line_no, message in errors.lines:
        print(f"{args.file}:{line_no}: {message}", file=sys.stderr)
    return graphs


def _single(args: argparse.Namespace) -> Graph:
    graphs = _graphs(args)
    if len(graphs) != 1:
        raise UsageError(f"un seul graphe attendu, {len(graphs)} lus")
    return graphs[0]


# --- sorties ---

def _dump(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False)


def _csv(rows: List[Dict[str, Any]], columns: List[str]) -> str:
    flat = [
        {k: (";".join(map(str, v)) if isinstance(v, list) else v) for k, v in row.items()}
        for row in rows
    ]
    buffer = io.StringIO()
    pd.DataFrame(flat, columns=columns).to_csv(buffer, index=False, lineterminator="\n")
    return buffer.getvalue()


def _emit(args: argparse.Namespace, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "output", None) is not None:
        args.output.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _claim_row(result: CheckResult) -> Dict[str, Any]:
    first = result.counterexamples[0].graph6 if result.counterexamples else ""
    return {
        "claim_id": result.claim_id,
        "kind": result.kind,
        "verdict": result.verdict,
        "scope": result.scope,
        "graphs_scanned": result.graphs_scanned,
        "budget_exhausted": result.budget_exhausted,
        "counterexample_count": result.counterexample_count,
        "first_counterexample": first,
    }


def _triage(results: List[CheckResult]) -> int:
    if any(r.harness_bug for r in results):
        return EXIT_HARNESS_BUG
    if any(r.verdict == "refuted" for r in results):
        return EXIT_SUSPECT_REFUTED
    return EXIT_OK


def _emit_results(args: argparse.Namespace, results: List[CheckResult]) -> int:
    if args.format == "csv":
        _emit(args, _csv([_claim_row(r) for r in results], CLAIM_COLUMNS))
    else:
        _emit(args, "\n".join(r.to_json(args.timings) for r in results))
    return _triage(results)


# --- commandes ---

def cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "exhaustive":
        if args.max_order is None:
            raise UsageError("gen exhaustive exige --max-order")
        corpus = Corpus("exhaustive", args.min_order, args.max_order,
                        connected=not args.all_graphs, dedup=args.dedup)
        graphs = list(iterate_corpus(corpus))
    elif args.range is not None:
        lo, hi = args.range
        graphs = [family(args.family, n, args.thorns) for n in range(lo, hi + 1)]
    elif args.n is not None:
        graphs = [family(args.family, args.n, args.thorns)]
    else:
        raise UsageError(f"gen {args.family} exige -n ou --range")
    _emit(args, "\n".join(g6_encode(g) for g in graphs))
    return EXIT_OK


def cmd_invariants(args: argparse.Namespace) -> int:
    service = GraphReportService()
    rows = [service.invariants(g) for g in _graphs(args)]
    if args.format == "csv":
        _emit(args, _csv(rows, INVARIANT_COLUMNS))
    else:
        _emit(args, "\n".join(_dump(row) for row in rows))
    return EXIT_PARTIAL if any(row["status"] == PARTIAL for row in rows) else EXIT_OK


def cmd_colour(args: argparse.Namespace) -> int:
    payload = GraphReportService().colouring(_single(args), args.rule, args.mode, args.budget)
    _emit(args, _dump(payload))
    return EXIT_OK


def cmd_rainbow(args: argparse.Namespace) -> int:
    if args.sample is not None and args.seed is None:
        raise UsageError("--sample exige --seed")
    service = GraphReportService(seed=args.seed or 0, sample_size=args.sample)
    payload = service.rainbow(_single(args), sample=args.sample is not None, budget=args.budget)
    _emit(args, _dump(payload))
    return EXIT_OK


def cmd_perfect(args: argparse.Namespace) -> int:
    service = GraphReportService()
    payloads = [service.perfection(g) for g in _graphs(args)]
    _emit(args, "\n".join(_dump(p) for p in payloads))
    return EXIT_HARNESS_BUG if any(not p["methods_agree"] for p in payloads) else EXIT_OK


def cmd_claims(args: argparse.Namespace) -> int:
    if args.all == bool(args.ids):
        raise UsageError("donner des identifiants ou --all, pas les deux")
    ids = all_claim_ids() if args.all else expand_claim_ids(args.ids)
    options = ScopeOptions(range=args.range, max_order=args.max_order, dedup=args.dedup,
                           seed=args.seed, samples=args.samples)
    results = [run_check(cid, options, jobs=args.jobs, progress=args.progress) for cid in ids]
    return _emit_results(args, results)


def cmd_conjecture(args: argparse.Namespace) -> int:
    if args.max_order > 9:
        raise UsageError("recherche limitée à l'ordre 9")
    if args.max_order > 7 and args.seed is None:
        raise UsageError("au-delà de l'ordre 7 la recherche est aléatoire: --seed obligatoire")
    result = conjecture_search(
        args.max_order,
        connected_only=not args.all_graphs,
        dedup=not args.no_dedup,
        seed=args.seed,
        samples=args.samples,
        jobs=args.jobs,
        progress=args.progress,
    )
    return _emit_results(args, [result])


def cmd_list_claims(args: argparse.Namespace) -> int:
    rows = [{"claim_id": s.claim_id, "kind": s.kind, "title": s.title} for s in REGISTRY.values()]
    if args.format == "csv":
        _emit(args, _csv(rows, ["claim_id", "kind", "title"]))
    else:
        _emit(args, "\n".join(_dump(row) for row in rows))
    return EXIT_OK


def cmd_schema(args: argparse.Namespace) -> int:
    sys.stdout.write(SCHEMA_PATH.read_text(encoding="utf-8"))
    return EXIT_OK


COMMANDS = {
    "gen": cmd_gen,
    "invariants": cmd_invariants,
    "colour": cmd_colour,
    "rainbow": cmd_rainbow,
    "perfect": cmd_perfect,
    "claims": cmd_claims,
    "conjecture": cmd_conjecture,
    "list-claims": cmd_list_claims,
    "schema": cmd_schema,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = parse_args(argv)
    logging.basicConfig(level=args.log_level.upper(), stream=sys.stderr)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, GraphError, UnknownClaimError) as exc:
        print(f"erreur: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"budget épuisé: {exc}", file=sys.stderr)
        return EXIT_PARTIAL
    except FileNotFoundError as exc:
        print(f"Fichier introuvable: {exc.filename}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
