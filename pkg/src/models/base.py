"""
Base models with common functionality for all domain models.
"""

from pydantic import BaseModel, ConfigDict


class DomainModel(BaseModel):
    """Immutable base model shared by every domain type."""

    model_config = ConfigDict(
        frozen=True,  # Immutable objects
        arbitrary_types_allowed=True,  # ComplexRational entries
        extra="forbid",
    )
