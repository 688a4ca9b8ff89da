"""FastAPI service wrapping the workbench; the CLI is a thin client of it."""
