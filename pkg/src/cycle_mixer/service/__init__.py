"""FastAPI service exposing the exact engine; run with
``uvicorn cycle_mixer.service:app``."""

from fastapi import FastAPI

from .routes import router


def create_app() -> FastAPI:
    app = FastAPI(title="cycle-mixer", version="0.1.0")
    app.include_router(router)
    return app


app = create_app()
