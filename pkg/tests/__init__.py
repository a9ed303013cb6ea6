# Tests du moteur de coloration et du banc de vérification
