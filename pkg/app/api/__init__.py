# API HTTP: routes, métriques, version
