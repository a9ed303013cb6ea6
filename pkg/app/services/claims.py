"""
Registre des énoncés vérifiables et recherche de contre-exemples

Chaque énoncé est un prédicat évalué sur une portée (familles paramétrées ou
corpus). Le prédicat renvoie (données fautives ou None, observation). Rien n'est
affirmé: tout est consigné dans un CheckResult.
"""

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence, Tuple
import json
import logging
import time

from tqdm import tqdm

from app.config import settings
from app.services.colourings import (
    EXHAUSTIVE,
    ChromaticPartitions,
    convention_colouring,
    example_thorn_colouring,
    imax_colouring,
    is_proper,
)
from app.services.corpus import Corpus, iterate_corpus
from app.services.errors import BudgetExceededError, UnknownClaimError
from app.services.generators import ThornSpec, complete_thorn, family
from app.services.graph_core import Graph, g6_decode, g6_encode, join_k1
from app.services.invariants import (
    chromatic_number,
    clique_number,
    count_maximum_cliques,
    independence_number,
    maximum_independent_sets_in,
    min_degree,
)
from app.services.perfection import (
    every_vertex_in_maximum_clique,
    is_perfect_bruteforce,
    is_perfect_hole_based,
    is_weakly_perfect,
)
from app.services.rainbow import rainbow_bounds, rainbow_number, rainbow_sample_bounds

logger = logging.getLogger(__name__)

PROVEN = "proven"
SUSPECT = "suspect"
NOT_CHECKABLE = "not-checkable"

VERIFIED = "verified-on-scope"
REFUTED = "refuted"
SKIPPED = "skipped"

Outcome = Tuple[Optional[Dict[str, Any]], Dict[str, Any]]
Predicate = Callable[[Graph, Dict[str, Any]], Outcome]


@dataclass(frozen=True)
class FamilyRange:
    name: str
    lo: int
    hi: int
    parity: Optional[str] = None
    thorns: str = "ones"
    cap: Optional[int] = None

    def values(self) -> List[int]:
        out = []
        for n in range(self.lo, self.hi + 1):
            if self.parity == "even" and n % 2:
                continue
            if self.parity == "odd" and not n % 2:
                continue
            out.append(n)
        return out


@dataclass(frozen=True)
class Scope:
    """Portée d'une vérification: plages de familles ou corpus, et paramètres d'évaluation"""

    families: Tuple[FamilyRange, ...] = ()
    corpus: Optional[Corpus] = None
    partitions_max_order: int = 6
    exhaustive_max_order: int = 7
    samples: int = 10_000
    seed: int = 0

    def describe(self) -> str:
        if self.corpus is not None:
            return self.corpus.describe()
        parts = []
        for fr in self.families:
            label = f"{fr.name} n={fr.lo}..{fr.hi}"
            if fr.parity:
                label += f" ({fr.parity})"
            if fr.name == "thorn-complete":
                label += f" thorns={fr.thorns}"
            parts.append(label)
        return "; ".join(parts)


@dataclass(frozen=True)
class ScopeOptions:
    """Surcharges de portée venant de la CLI ou de l'API"""

    range: Optional[Tuple[int, int]] = None
    max_order: Optional[int] = None
    dedup: Optional[str] = None
    connected: Optional[bool] = None
    seed: Optional[int] = None
    samples: Optional[int] = None


@dataclass
class Counterexample:
    graph6: str
    context: Dict[str, Any]
    data: Dict[str, Any]

    def to_dict(self) -> Dict[str, Any]:
        return {"graph6": self.graph6, "context": self.context, "data": self.data}


@dataclass
class CheckResult:
    claim_id: str
    title: str
    kind: str
    scope: str
    verdict: str
    counterexamples: List[Counterexample] = field(default_factory=list)
    counterexample_count: int = 0
    graphs_scanned: int = 0
    budget_exhausted: int = 0
    runtime_seconds: float = 0.0
    observations: List[Dict[str, Any]] = field(default_factory=list)
    tallies: Dict[str, int] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    @property
    def harness_bug(self) -> bool:
        """Un énoncé prouvé réfuté, ou un désaccord entre oracles, signale un défaut du banc"""
        if self.kind == PROVEN and self.verdict == REFUTED:
            return True
        return any(c.data.get("oracle_disagreement") for c in self.counterexamples)

    def to_dict(self, timings: bool = False) -> Dict[str, Any]:
        payload = {
            "claim_id": self.claim_id,
            "title": self.title,
            "kind": self.kind,
            "scope": self.scope,
            "verdict": self.verdict,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
            "counterexample_count": self.counterexample_count,
            "stats": {"graphs_scanned": self.graphs_scanned, "budget_exhausted": self.budget_exhausted},
            "observations": self.observations,
            "tallies": self.tallies,
            "notes": self.notes,
        }
        if timings:
            payload["stats"]["runtime_seconds"] = round(self.runtime_seconds, 3)
        return payload

    def to_json(self, timings: bool = False) -> str:
        return json.dumps(self.to_dict(timings), sort_keys=True, ensure_ascii=False)


@dataclass(frozen=True)
class ClaimSpec:
    claim_id: str
    title: str
    kind: str
    predicate: Optional[Predicate]
    scope: Scope
    note: str = ""


# --- utilitaires ---

def _imax_profile(g: Graph) -> Dict[str, Any]:
    """χ, χ^{i-max} déterministe et bornes du mode exhaustif (None si budget épuisé)"""
    chi = chromatic_number(g)
    value = imax_colouring(g).num_colours
    try:
        exhaustive = imax_colouring(g, EXHAUSTIVE)
        lo, hi = exhaustive.min_colours, exhaustive.max_colours
    except BudgetExceededError:
        lo = hi = None
    return {"chi": chi, "chi_imax": value, "exhaustive_min": lo, "exhaustive_max": hi}


def _exact_bounds(g: Graph):
    bounds = rainbow_bounds(g)
    if not bounds.exact:
        raise BudgetExceededError("partition_budget", settings.partition_budget, {"order": g.order})
    return bounds


def _with_n(ctx: Dict[str, Any], obs: Dict[str, Any]) -> Dict[str, Any]:
    head = {"family": ctx.get("family"), "n": ctx.get("n")}
    if "thorns" in ctx:
        head["thorns"] = list(ctx["thorns"])
    return {**head, **obs}


# --- prédicats: graphes d'ensembles ---

def _prop_2_1(g: Graph, ctx: Dict[str, Any]) -> Outcome:
    expected = 2 ** (ctx["n"] - 1)
    obs = _with_n(ctx, {"omega": clique_number(g), "max_clique_count": count_maximum_cliques(g)})
    if obs["omega"] != expected or obs["max_clique_count"] != expected:
        return {"expected": expected, **obs}, obs
    return None, obs


def _thm_2_2(g: Graph, ctx: Dict[str, Any]) -> Outcome:
    expected = 2 ** (ctx["n"] - 1)
    obs = _with_n(ctx, {"chi": chromatic_number(g)})
    return ({"expected": expected, **obs} if obs["chi"] != expected else None), obs


def _thm_2_3(g: Graph, ctx: Dict[str, Any]) -> Outcome:
    brute = is_perfect_bruteforce(g)
    holes = is_perfect_hole_based(g)
    covered, _ = every_vertex_in_maximum_clique(g)
    obs = _with_n(ctx, {
        "weakly_perfect": is_weakly_perfect(g),
        "every_vertex_in_max_clique": covered,
        "perfect_bruteforce": brute.perfect if not brute.skipped else "skipped",
        "perfect_hole_based": holes.perfect,
    })
    if brute.perfect is not None and brute.perfect != holes.perfect:
        return {"oracle_disagreement": True, **obs}, obs
    if not holes.perfect:
        return {"witness": sorted(holes.witness or brute.witness or ()), **obs}, obs
    return None, obs


def _thm_2_3_alpha(g: Graph, ctx: Dict[str, Any]) -> Outcome:
    expected = 2 ** (ctx["n"] - 1) - 1
    obs = _with_n(ctx, {
        "alpha": independence_number(g),
        "max_independent_set_count": len(maximum_independent_sets_in(g, g.vertex_mask)),
    })
    if obs["alpha"] != expected or obs["max_independent_set_count"] != 1:
        return {"expected_alpha": expected, "expected_count": 1, **obs}, obs
    return None, obs


def _sec3_alpha(g: Graph, ctx: Dict[str, Any]) -> Outcome:
    obs = _with_n(ctx, {"alpha": independence_number(g)})
    return ({"expected": ctx["n"], **obs} if obs["alpha"] != ctx["n"] else None), obs


def _rainbow_full(g: Graph, ctx: Dict[str, Any]) -> Outcome:
    """r⁻ = r⁺ = ν: exhaustif jusqu'à exhaustive_max_order, échantillonné au-delà"""
    if g.order <= ctx["exhaustive_max_order"]:
        bounds = _exact_bounds(g)
    else:
        bounds = rainbow_sample_bounds(g, ctx["samples"], ctx["seed"])
    obs = _with_n(ctx, {
        "order": g.order,
        "r_minus": bounds.r_minus,
        "r_plus": bounds.r_plus,
        "exact": bounds.exact,
        "partitions_scanned": bounds.partitions_scanned,
    })
    if bounds.r_minus != g.order or bounds.r_plus != g.order:
        data = {"expected": g.order, **obs}
        if bounds.witness_min is not None:
            data["witness_colouring"] = bounds.witness_min.to_dict()
        return data, obs
    return None, obs


# --- prédicats: paramètres χ^{i-max} ---

def _imax_equals(offset: int, fixed: Optional[int] = None) -> Predicate:
    def check(g: Graph, ctx: Dict[str, Any]) -> Outcome:
        obs = _with_n(ctx, _imax_profile(g))
        expected = obs["chi"] + offset
        if obs["chi_imax"] != expected or (fixed is not None and obs["chi_imax"] != fixed):
            return {"expected": fixed if fixed is not None else expected, **obs}, obs
        return None, obs
    return check


def _prop_3_1a(g, ctx):
    return _imax_equals(1)(g, ctx)


def _prop_3_1b(g, ctx):
    return _imax_equals(1, 3)(g, ctx)


def _prop_3_1c(g, ctx):
    return _imax_equals(0, 2)(g, ctx)


def _prop_3_1d(g, ctx):
    return _imax_equals(0)(g, ctx)


def _prop_3_1e(g, ctx):
    return _imax_equals(1)(g, ctx)


def _prop_3_1f(g, ctx):
    return _imax_equals(1, 4)(g, ctx)


def _prop_3_1g(g, ctx):
    return _imax_equals(0, 3)(g, ctx)


def _prop_3_1h(g: Graph, ctx: Dict[str, Any]) -> Outcome:
    obs = _with_n(ctx, _imax_profile(g))
    if obs["chi_imax"] != ctx["n"] + 1:
        return {"expected": ctx["n"] + 1, **obs}, obs
    return None, obs


def _sec4_kbound(g: Graph, ctx: Dict[str, Any]) -> Outcome:
    profile = _imax_profile(g)
    gap = profile["chi_imax"] - profile["chi"]
    obs = _with_n(ctx, {"imax_number": gap, **profile})
    return ({"allowed": [0, 1], **obs} if gap not in (0, 1) else None), obs


def _example_thorn(g: Graph, ctx: Dict[str, Any]) -> Outcome:
    n, spec = ctx["n"], ThornSpec(tuple(ctx["thorns"]))
    c = example_thorn_colouring(n, spec)
    obs = _with_n(ctx, {
        "chi": chromatic_number(g),
        "colours_used": c.num_colours,
        "proper": is_proper(g, c),
        "theta_c1": c.weights[0],
        "total_thorns": spec.total,
    })
    if not obs["proper"] or obs["colours_used"] != obs["chi"] or obs["chi"] != n or c.weights[0] == spec.total:
        return {"colouring": c.to_dict(), **obs}, obs
    return None, obs


def _example_thorn_unique(g: Graph, ctx: Dict[str, Any]) -> Outcome:
    stream = ChromaticPartitions(g, budget=2)
    found = [c.to_dict() for c in stream]
    obs = _with_n(ctx, {"chromatic_partitions": "≥ 3" if stream.truncated else len(found)})
    if len(found) != 1:
        return {"first_partitions": found, **obs}, obs
    return None, obs


# --- prédicats: corpus ---

def _sec1_complete(g: Graph, ctx: Dict[str, Any]) -> Outcome:
    bounds = _exact_bounds(g)
    obs = _with_n(ctx, {"r_minus": bounds.r_minus, "r_plus": bounds.r_plus})
    if bounds.r_minus != g.order or bounds.r_plus != g.order:
        return {"expected": g.order, **obs}, obs
    return None, obs


def _sec1_bipartite(g: Graph, ctx: Dict[str, Any]) -> Outcome:
    if not g.is_bipartite():
        return None, {"outside_hypothesis": 1}
    bounds = _exact_bounds(g)
    if bounds.r_minus != g.order or bounds.r_plus != g.order:
        return {"r_minus": bounds.r_minus, "r_plus": bounds.r_plus, "expected": g.order}, {"bipartite": 1}
    return None, {"bipartite": 1}


def _lemma_1_1(g: Graph, ctx: Dict[str, Any]) -> Outcome:
    joined = join_k1(g)
    base, top = _exact_bounds(g), _exact_bounds(joined)
    failures: Dict[str, Any] = {}
    if top.r_minus != 1 + base.r_minus:
        failures["r_minus"] = [base.r_minus, top.r_minus]
    if top.r_plus != 1 + base.r_plus:
        failures["r_plus"] = [base.r_plus, top.r_plus]
    obs = {"convention_compared": 0}
    c_base, c_top = convention_colouring(g).colouring, convention_colouring(joined).colouring
    if c_base.num_colours == chromatic_number(g) and c_top.num_colours == chromatic_number(joined):
        obs["convention_compared"] = 1
        r_base, r_top = rainbow_number(g, c_base).r, rainbow_number(joined, c_top).r
        if r_top != 1 + r_base:
            failures["r_convention"] = [r_base, r_top]
    return (failures or None), obs


def _lemma_2_1(g: Graph, ctx: Dict[str, Any]) -> Outcome:
    colourings = []
    if g.order <= ctx["partitions_max_order"]:
        stream = ChromaticPartitions(g)
        colourings.extend(stream)
        if stream.truncated:
            raise BudgetExceededError("partition_budget", stream.budget, {"order": g.order})
    colourings.append(imax_colouring(g).colouring)
    colourings.append(convention_colouring(g).colouring)
    for c in colourings:
        for v in sorted(rainbow_number(g, c).rainbow_vertices):
            if g.degree(v) < c.num_colours - 1:
                return {"vertex": v, "degree": g.degree(v), "colours": c.num_colours,
                        "colouring": c.to_dict()}, {"colourings_checked": len(colourings)}
    return None, {"colourings_checked": len(colourings)}


def _sec2_observation(g: Graph, ctx: Dict[str, Any]) -> Outcome:
    chi, delta = chromatic_number(g), min_degree(g)
    bounds = _exact_bounds(g)
    left, right = chi <= delta + 1, bounds.r_minus == g.order
    obs = {"bound_holds": int(left), "r_minus_full": int(right)}
    if left != right:
        return {"chi": chi, "delta_plus_one": delta + 1, "r_minus": bounds.r_minus, "order": g.order}, obs
    return None, obs


def _cycle_tuples(g: Graph, ctx: Dict[str, Any]) -> Outcome:
    bounds = _exact_bounds(g)
    obs = _with_n(ctx, {
        "chi": chromatic_number(g),
        "delta_plus_one": min_degree(g) + 1,
        "r_minus": bounds.r_minus,
        "order": g.order,
    })
    return None, obs


def _cor_3_2(g: Graph, ctx: Dict[str, Any]) -> Outcome:
    thorned = complete_thorn(g, ThornSpec.ones(g.order))
    base, top = imax_colouring(g).num_colours, imax_colouring(thorned).num_colours
    if top != base + 1:
        return {"chi_imax": base, "chi_imax_thorned": top}, {}
    return None, {}


def _thm_3_3(g: Graph, ctx: Dict[str, Any]) -> Outcome:
    chi, used = chromatic_number(g), convention_colouring(g).num_colours
    if used != chi:
        return {"chi": chi, "convention_colours": used}, {}
    return None, {}


def _thm_3_3_any(g: Graph, ctx: Dict[str, Any]) -> Outcome:
    chi = chromatic_number(g)
    result = convention_colouring(g, EXHAUSTIVE)
    if result.min_colours != chi:
        return {"chi": chi, "convention_min": result.min_colours, "convention_max": result.max_colours}, {}
    return None, {"tie_sensitive": int(result.min_colours != result.max_colours)}


def _cor_3_4(g: Graph, ctx: Dict[str, Any]) -> Outcome:
    chi, value = chromatic_number(g), imax_colouring(g).num_colours
    return ({"chi": chi, "chi_imax": value} if chi > value else None), {}


def _thm_3_5(g: Graph, ctx: Dict[str, Any]) -> Outcome:
    if g.order < 2 or independence_number(g) != chromatic_number(g):
        return None, {"outside_hypothesis": 1}
    profile = _imax_profile(g)
    if profile["chi_imax"] != profile["chi"] + 1:
        return {"alpha": independence_number(g), **profile}, {"hypothesis_matched": 1}
    return None, {"hypothesis_matched": 1}


def _conj_2_4(g: Graph, ctx: Dict[str, Any]) -> Outcome:
    if g.order == 0 or not is_weakly_perfect(g) or not every_vertex_in_maximum_clique(g)[0]:
        return None, {"outside_hypothesis": 1}
    brute = is_perfect_bruteforce(g)
    holes = is_perfect_hole_based(g)
    if brute.perfect is not None and brute.perfect != holes.perfect:
        return {"oracle_disagreement": True, "perfect_bruteforce": brute.perfect,
                "perfect_hole_based": holes.perfect}, {"hypothesis_matched": 1}
    if not holes.perfect:
        witness = brute.witness if brute.witness is not None else holes.witness
        return {"witness": sorted(witness), "perfect_bruteforce": brute.perfect,
                "perfect_hole_based": holes.perfect}, {"hypothesis_matched": 1}
    return None, {"hypothesis_matched": 1}


# --- registre ---

def _set_graphs(lo: int, hi: int) -> Tuple[FamilyRange, ...]:
    return (FamilyRange("set-graph", lo, hi, cap=5),)


def _corpus(max_order: int, min_order: int = 1) -> Scope:
    return Scope(corpus=Corpus("exhaustive", min_order, max_order, connected=True, dedup="canonical"))


PROP_3_1_FAMILIES = {
    "prop-3.1a": FamilyRange("set-graph", 3, 4, cap=5),
    "prop-3.1b": FamilyRange("path", 4, 12, parity="even"),
    "prop-3.1c": FamilyRange("path", 5, 11, parity="odd"),
    "prop-3.1d": FamilyRange("cycle", 3, 12),
    "prop-3.1e": FamilyRange("sunlet", 3, 10),
    "prop-3.1f": FamilyRange("empty-sun", 3, 9, parity="odd"),
    "prop-3.1g": FamilyRange("empty-sun", 4, 10, parity="even"),
    "prop-3.1h": FamilyRange("thorn-complete", 3, 6, thorns="increasing"),
}

REGISTRY: Dict[str, ClaimSpec] = {}


def _register(*specs: ClaimSpec) -> None:
    for spec in specs:
        REGISTRY[spec.claim_id] = spec


_register(
    ClaimSpec("sec1-complete", "r⁻(K_n) = r⁺(K_n) = n", PROVEN, _sec1_complete,
              Scope(families=(FamilyRange("complete", 1, 7),))),
    ClaimSpec("sec1-null", "r⁻(N_n) = r⁺(N_n) = n (connexité relâchée)", PROVEN, _sec1_complete,
              Scope(families=(FamilyRange("null", 1, 7),))),
    ClaimSpec("sec1-bipartite", "graphes bipartis connexes: r⁻ = r⁺ = n", PROVEN, _sec1_bipartite,
              _corpus(6)),
    ClaimSpec("lemma-1.1", "r_χ(K_1 + G) = 1 + r_χ(G)", SUSPECT, _lemma_1_1, _corpus(6)),
    ClaimSpec("lemma-2.1", "sommet arc-en-ciel ⇒ d(v) ≥ ℓ − 1", PROVEN, _lemma_2_1, _corpus(7)),
    ClaimSpec("cor-2.2", "« possiblement » arc-en-ciel ⟺ d(v) ≥ χ − 1", NOT_CHECKABLE, None, Scope(),
              note="énoncé probabiliste sans contenu opérationnel: non vérifiable"),
    ClaimSpec("prop-2.1", "G_A(n) a exactement 2^(n−1) cliques maximum K_{2^(n−1)}", SUSPECT, _prop_2_1,
              Scope(families=_set_graphs(1, 4)),
              note="ω = 2^(n−1) tient, mais G_A(4) a 12 cliques maximum: le dénombrement ne vaut que pour n ≤ 3"),
    ClaimSpec("thm-2.2", "χ(G_A(n)) = 2^(n−1)", PROVEN, _thm_2_2, Scope(families=_set_graphs(1, 4))),
    ClaimSpec("thm-2.3", "G_A(n) est parfait", SUSPECT, _thm_2_3, Scope(families=_set_graphs(1, 5)),
              note="G_A(5) contient le trou impair {1,2},{2,3},{3,4},{4,5},{5,1}"),
    ClaimSpec("thm-2.3-alpha", "G_A(n) a un unique ensemble indépendant maximum de 2^(n−1) − 1 sommets",
              SUSPECT, _thm_2_3_alpha, Scope(families=_set_graphs(1, 4))),
    ClaimSpec("sec3-alpha", "α(G_A(n)) = n", PROVEN, _sec3_alpha, Scope(families=_set_graphs(1, 4))),
    ClaimSpec("conj-2.4", "faiblement parfait et tout sommet dans une clique maximum ⇒ parfait",
              SUSPECT, _conj_2_4, _corpus(6)),
    ClaimSpec("thm-2.5", "r⁻_χ(G_A(n)) = r⁺_χ(G_A(n)) = 2^n − 1", PROVEN, _rainbow_full,
              Scope(families=_set_graphs(1, 4))),
    ClaimSpec("sec2-obs", "χ ≤ δ + 1 ⟺ r⁻_χ = n", SUSPECT, _sec2_observation, _corpus(6)),
    ClaimSpec("sec2-cycles", "cycles: valeurs (χ, δ + 1, r⁻, ν)", NOT_CHECKABLE, _cycle_tuples,
              Scope(families=(FamilyRange("cycle", 3, 10),)),
              note="énoncé ambigu: valeurs consignées sans verdict d'interprétation"),
    ClaimSpec("ex-1", "K⋆_n: la coloration décrite est propre, utilise χ = n couleurs et θ(c1) ≠ Σt_i",
              SUSPECT, _example_thorn,
              Scope(families=(
                  FamilyRange("thorn-complete", 3, 6, thorns="increasing"),
                  FamilyRange("thorn-complete", 3, 6, thorns="shifted"),
              )),
              note="θ(c1) = 1 + Σ_{i≥2} t_i: égal à Σt_i dès que t_1 = 1, distinct pour t_1 ≥ 2"),
    ClaimSpec("ex-1-unique", "t_1 < … < t_n ⇒ n-coloration propre minimum unique", SUSPECT,
              _example_thorn_unique,
              Scope(families=(FamilyRange("thorn-complete", 3, 6, thorns="increasing"),))),
    ClaimSpec("prop-3.1a", "G_A(n), n ≥ 3: χ^{i-max} = χ + 1", SUSPECT, _prop_3_1a,
              Scope(families=(PROP_3_1_FAMILIES["prop-3.1a"],))),
    ClaimSpec("prop-3.1b", "P_n, n ≥ 4 pair: χ^{i-max} = χ + 1 = 3", SUSPECT, _prop_3_1b,
              Scope(families=(PROP_3_1_FAMILIES["prop-3.1b"],))),
    ClaimSpec("prop-3.1c", "P_n, n ≥ 4 impair: χ^{i-max} = χ = 2", SUSPECT, _prop_3_1c,
              Scope(families=(PROP_3_1_FAMILIES["prop-3.1c"],))),
    ClaimSpec("prop-3.1d", "C_n: χ^{i-max} = χ", SUSPECT, _prop_3_1d,
              Scope(families=(PROP_3_1_FAMILIES["prop-3.1d"],))),
    ClaimSpec("prop-3.1e", "sunlet S_n: χ^{i-max} = χ + 1", SUSPECT, _prop_3_1e,
              Scope(families=(PROP_3_1_FAMILIES["prop-3.1e"],)),
              note="appariement 3/4 ↔ pair/impair consigné dans les observations"),
    ClaimSpec("prop-3.1f", "empty-sun, n impair: χ^{i-max} = χ + 1 = 4", SUSPECT, _prop_3_1f,
              Scope(families=(PROP_3_1_FAMILIES["prop-3.1f"],))),
    ClaimSpec("prop-3.1g", "empty-sun, n ≥ 4 pair: χ^{i-max} = χ = 3", SUSPECT, _prop_3_1g,
              Scope(families=(PROP_3_1_FAMILIES["prop-3.1g"],))),
    ClaimSpec("prop-3.1h", "K⋆_n: χ^{i-max} = n + 1", SUSPECT, _prop_3_1h,
              Scope(families=(PROP_3_1_FAMILIES["prop-3.1h"],))),
    ClaimSpec("cor-3.2", "χ^{i-max}(G⋆_c) = χ^{i-max}(G) + 1", SUSPECT, _cor_3_2, _corpus(6)),
    ClaimSpec("thm-3.3", "la coloration par convention (déterministe) utilise χ couleurs", SUSPECT,
              _thm_3_3, _corpus(6)),
    ClaimSpec("thm-3.3-any", "un choix d'égalités de la coloration par convention atteint χ", SUSPECT,
              _thm_3_3_any, _corpus(6)),
    ClaimSpec("cor-3.4", "χ ≤ χ^{i-max}", PROVEN, _cor_3_4, _corpus(7)),
    ClaimSpec("thm-3.5", "ν ≥ 2 et α = χ ⇒ χ^{i-max} = χ + 1", SUSPECT, _thm_3_5, _corpus(6)),
    ClaimSpec("sec4-kbound", "familles du tableau χ^{i-max}: α^{i-max} ∈ {0, 1}", SUSPECT, _sec4_kbound,
              Scope(families=tuple(PROP_3_1_FAMILIES.values()))),
)

GROUPS: Dict[str, Tuple[str, ...]] = {
    "prop-3.1": tuple(PROP_3_1_FAMILIES),
}


def expand_claim_ids(ids: Sequence[str]) -> List[str]:
    """Développe les groupes et valide les identifiants"""
    out: List[str] = []
    for claim_id in ids:
        if claim_id in GROUPS:
            out.extend(GROUPS[claim_id])
        elif claim_id in REGISTRY:
            out.append(claim_id)
        else:
            raise UnknownClaimError(claim_id)
    return out


def all_claim_ids() -> List[str]:
    return list(REGISTRY)


# --- portée et évaluation ---

def resolve_scope(spec: ClaimSpec, options: Optional[ScopeOptions] = None) -> Scope:
    options = options or ScopeOptions()
    scope = spec.scope
    if options.range is not None and scope.families:
        lo, hi = options.range
        families = []
        for fr in scope.families:
            new_hi = min(hi, fr.cap) if fr.cap is not None else hi
            families.append(replace(fr, lo=max(lo, fr.lo), hi=new_hi))
        scope = replace(scope, families=tuple(families))
    if scope.corpus is not None:
        corpus = scope.corpus
        if options.max_order is not None:
            corpus = replace(corpus, max_order=options.max_order)
        if options.dedup is not None:
            corpus = replace(corpus, dedup=options.dedup)
        if options.connected is not None:
            corpus = replace(corpus, connected=options.connected)
        scope = replace(scope, corpus=corpus)
    if options.seed is not None:
        scope = replace(scope, seed=options.seed)
    if options.samples is not None:
        scope = replace(scope, samples=options.samples)
    return scope


def _thorns_for(fr: FamilyRange, n: int) -> List[int]:
    if fr.thorns == "increasing":
        return list(range(1, n + 1))
    if fr.thorns == "shifted":
        return list(range(2, n + 2))
    return [1] * n


def scope_items(scope: Scope) -> Iterator[Tuple[Graph, Dict[str, Any]]]:
    """Paires (graphe, contexte) de la portée, dans un ordre déterministe"""
    base = {
        "partitions_max_order": scope.partitions_max_order,
        "exhaustive_max_order": scope.exhaustive_max_order,
        "samples": scope.samples,
        "seed": scope.seed,
    }
    if scope.corpus is not None:
        for g in iterate_corpus(scope.corpus):
            yield g, dict(base)
        return
    for fr in scope.families:
        for n in fr.values():
            ctx = dict(base, family=fr.name, n=n)
            thorns = None
            if fr.name == "thorn-complete":
                thorns = _thorns_for(fr, n)
                ctx["thorns"] = thorns
            yield family(fr.name, n, thorns), ctx


def _evaluate_batch(claim_id: str, batch: List[Tuple[str, Dict[str, Any]]]) -> List[tuple]:
    """Évalue un lot (graph6, contexte); exécutable dans un processus de travail"""
    predicate = REGISTRY[claim_id].predicate
    out = []
    for g6, ctx in batch:
        g = g6_decode(g6)
        try:
            offending, obs = predicate(g, ctx)
            out.append((g6, ctx, offending, obs, None))
        except BudgetExceededError as e:
            out.append((g6, ctx, None, {}, str(e)))
    return out


def _chunks(items: List[Any], parts: int) -> List[List[Any]]:
    size = max(1, -(-len(items) // parts))
    return [items[k:k + size] for k in range(0, len(items), size)]


def run_check(
    claim_id: str,
    options: Optional[ScopeOptions] = None,
    jobs: Optional[int] = None,
    progress: bool = False,
    scope: Optional[Scope] = None,
) -> CheckResult:
    """Évalue un énoncé sur sa portée; ne lève jamais sur une réfutation"""
    if claim_id not in REGISTRY:
        raise UnknownClaimError(claim_id)
    spec = REGISTRY[claim_id]
    scope = scope or resolve_scope(spec, options)
    result = CheckResult(spec.claim_id, spec.title, spec.kind, scope.describe(), SKIPPED)
    if spec.note:
        result.notes.append(spec.note)
    if spec.predicate is None:
        logger.info(f"{claim_id}: non vérifiable")
        return result

    start = time.time()
    logger.info(f"▶ {claim_id} sur {result.scope}")
    items = [(g6_encode(g), ctx) for g, ctx in scope_items(scope)]
    workers = jobs if jobs is not None else settings.harness_jobs
    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_evaluate_batch, claim_id, chunk) for chunk in _chunks(items, workers * 4)]
            rows = [row for f in futures for row in f.result()]
    else:
        rows = []
        for item in tqdm(items, desc=claim_id, disable=not progress):
            rows.extend(_evaluate_batch(claim_id, [item]))

    tallies: Counter = Counter()
    found: List[Counterexample] = []
    for g6, ctx, offending, obs, budget_error in rows:
        result.graphs_scanned += 1
        if budget_error is not None:
            result.budget_exhausted += 1
            continue
        if offending is not None:
            found.append(Counterexample(g6, _public_context(ctx), offending))
        if scope.corpus is None:
            result.observations.append(obs)
        else:
            tallies.update({k: v for k, v in obs.items() if isinstance(v, int)})

    found.sort(key=lambda c: (c.graph6, json.dumps(c.context, sort_keys=True)))
    result.counterexample_count = len(found)
    result.counterexamples = found[:settings.max_counterexamples]
    result.tallies = dict(sorted(tallies.items()))
    if spec.kind == NOT_CHECKABLE:
        result.verdict = SKIPPED
        result.notes.append("valeurs consignées sans verdict")
    elif found:
        result.verdict = REFUTED
    elif result.graphs_scanned == 0:
        result.verdict = SKIPPED
        result.notes.append("portée vide")
    elif result.budget_exhausted:
        result.verdict = SKIPPED
        result.notes.append(f"{result.budget_exhausted} graphe(s) au-delà des budgets")
    else:
        result.verdict = VERIFIED
    result.runtime_seconds = time.time() - start
    logger.info(f"■ {claim_id}: {result.verdict} ({result.graphs_scanned} graphes, {len(found)} contre-exemples)")
    return result


def _public_context(ctx: Dict[str, Any]) -> Dict[str, Any]:
    return {k: v for k, v in ctx.items() if k in ("family", "n", "thorns")}


def recheck(claim_id: str, graph6: str, context: Optional[Dict[str, Any]] = None,
            scope: Optional[Scope] = None) -> Optional[Dict[str, Any]]:
    """Réévalue le prédicat sur un contre-exemple enregistré"""
    spec = REGISTRY[claim_id]
    scope = scope or spec.scope
    ctx = {
        "partitions_max_order": scope.partitions_max_order,
        "exhaustive_max_order": scope.exhaustive_max_order,
        "samples": scope.samples,
        "seed": scope.seed,
        **(context or {}),
    }
    offending, _ = spec.predicate(g6_decode(graph6), ctx)
    return offending


def conjecture_search(
    max_order: int,
    connected_only: bool = True,
    dedup: bool = True,
    seed: Optional[int] = None,
    samples: int = 0,
    jobs: Optional[int] = None,
    progress: bool = False,
) -> CheckResult:
    """Recherche de contre-exemples à la conjecture (faible perfection + couverture ⇒ perfection).

    Exhaustif jusqu'à l'ordre 7; ordres 8-9 par tirage aléatoire graine fixée.
    """
    if max_order <= 7:
        corpus = Corpus("exhaustive", 1, max_order, connected=connected_only,
                        dedup="canonical" if dedup else "none")
    elif max_order <= 9:
        corpus = Corpus("random", max_order, max_order, connected=connected_only,
                        count=samples or settings.conjecture_random_count, seed=seed)
    else:
        raise BudgetExceededError("conjecture_max_order", 9, {"requested": max_order})
    scope = Scope(corpus=corpus)
    return run_check("conj-2.4", jobs=jobs, progress=progress, scope=scope)
