# Services: graphes, invariants, colorations, arc-en-ciel, perfection, énoncés
