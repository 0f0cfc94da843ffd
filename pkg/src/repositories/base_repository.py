"""
Base repository interface for JSON artifacts.
"""

from abc import ABC, abstractmethod
from typing import Any, Iterable, List

from src.utils.logging_utils import setup_logger

logger = setup_logger(__name__)


class ArtifactRepository(ABC):
    """
    Abstract store for JSON documents and JSON-lines streams.

    Payloads are plain JSON values produced by the models' to_json().
    """

    def __init__(self) -> None:
        self._logger = logger

    @abstractmethod
    async def write_document(self, payload: Any) -> None:
        """
        Write a single JSON document.

        Args:
            payload: JSON-serializable value

        Raises:
            StorageError: If operation fails
        """
        pass

    @abstractmethod
    async def write_lines(self, payloads: Iterable[Any]) -> int:
        """
        Write one JSON value per line.

        Args:
            payloads: JSON-serializable values

        Returns:
            int: Number of lines written

        Raises:
            StorageError: If operation fails
        """
        pass

    @abstractmethod
    async def read_document(self) -> Any:
        """
        Read a single JSON document.

        Raises:
            StorageError: If the source cannot be read
            ParseError: If the content is not JSON
        """
        pass

    @abstractmethod
    async def read_lines(self) -> List[Any]:
        """
        Read a JSON-lines stream; blank lines are skipped.

        Raises:
            StorageError: If the source cannot be read
            ParseError: If a line is not JSON
        """
        pass
