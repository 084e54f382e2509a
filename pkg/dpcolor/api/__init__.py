# dpcolor HTTP API (monolith)
