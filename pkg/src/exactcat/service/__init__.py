"""HTTP service exposing the toolkit; run with ``uvicorn exactcat.service:app``."""

from .app import app, create_app

__all__ = ["app", "create_app"]
