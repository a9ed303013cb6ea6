"""
Exceptions du moteur de coloration
"""

from typing import Any, Dict, Optional


class GraphError(ValueError):
    """Construction ou paramètre de graphe invalide"""


class Graph6Error(GraphError):
    """Texte graph6 mal formé"""


class UnknownFamilyError(GraphError):
    """Famille de graphes inconnue"""


class ImproperColouringError(GraphError):
    """Coloration non propre ou mal formée"""


class UnknownClaimError(KeyError):
    """Identifiant d'énoncé absent du registre"""


class BudgetExceededError(RuntimeError):
    """Un budget de recherche est épuisé.

    Ne signale jamais une mauvaise réponse: seulement qu'il faut augmenter le budget.
    """

    def __init__(self, budget_name: str, budget: int, progress: Optional[Dict[str, Any]] = None):
        self.budget_name = budget_name
        self.budget = budget
        self.progress = progress or {}
        super().__init__(f"budget '{budget_name}' épuisé ({budget})")
