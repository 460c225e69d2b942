import logging

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from infrastructure.config.settings import settings

#Route registration imports
from api.routes import analysis

logging.basicConfig(level=settings.LOG_LEVEL, format=settings.LOG_FORMAT)

app = FastAPI(
    title=settings.API_TITLE,
    version=settings.API_VERSION,
    description="Embeddability, decompositions and copy posets of scattered linear orders",
    debug=settings.is_development
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=settings.cors_origins_list,
    allow_credentials=False,
    allow_methods=["GET", "POST", "OPTIONS"],
    allow_headers=["Accept", "Content-Type"],
)


@app.get("/")
async def root() -> dict[str, str]:
    return {"message": f"Welcome to the {settings.API_TITLE} API"}


# Health check endpoint
@app.get("/health")
async def health_check() -> dict[str, str]:
    return {
        "status": "healthy",
        "environment": settings.ENVIRONMENT,
        "version": settings.API_VERSION,
    }


# Include routers
app.include_router(analysis.router, prefix="/api/v1")
