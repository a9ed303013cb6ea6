# Modèles de requête et de réponse
