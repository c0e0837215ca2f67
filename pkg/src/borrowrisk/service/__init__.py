"""FastAPI service wrapping the borrowrisk core package."""

from .app import app, create_app

__all__ = ["app", "create_app"]
