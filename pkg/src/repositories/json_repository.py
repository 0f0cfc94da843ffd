"""
JSON / JSON-lines repository on a file or the standard streams.
"""

import asyncio
import json
import sys
from pathlib import Path
from typing import Any, Iterable, List, Optional, TextIO

from src.repositories.base_repository import ArtifactRepository
from src.utils.exceptions import ParseError, StorageError

STREAM = "-"


class JsonArtifactRepository(ArtifactRepository):
    """
    Reads and writes UTF-8 JSON on `path`, or on stdin/stdout when the path
    is None or "-". Output formatting is fixed so equal payloads give
    byte-identical files.
    """

    def __init__(
        self,
        path: Optional[Path] = None,
        stdin: Optional[TextIO] = None,
        stdout: Optional[TextIO] = None,
    ) -> None:
        super().__init__()
        self.path = None if path is None or str(path) == STREAM else Path(path)
        self._stdin = stdin
        self._stdout = stdout
        self._lock = asyncio.Lock()

    @staticmethod
    def dumps(payload: Any) -> str:
        return json.dumps(payload, ensure_ascii=False, separators=(", ", ": "))

    def _write_text(self, text: str) -> None:
        if self.path is None:
            stream = self._stdout or sys.stdout
            stream.write(text)
            stream.flush()
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self.path.write_text(text, encoding="utf-8")

    def _read_text(self) -> str:
        if self.path is None:
            return (self._stdin or sys.stdin).read()
        return self.path.read_text(encoding="utf-8")

    async def write_document(self, payload: Any) -> None:
        try:
            async with self._lock:
                self._write_text(self.dumps(payload) + "\n")
        except (OSError, TypeError, ValueError) as e:
            raise StorageError(f"Failed to write JSON: {str(e)}", e) from e
        self._logger.debug(f"Wrote JSON document to {self.path or 'stdout'}")

    async def write_lines(self, payloads: Iterable[Any]) -> int:
        try:
            lines = [self.dumps(payload) for payload in payloads]
            async with self._lock:
                self._write_text("".join(line + "\n" for line in lines))
        except (OSError, TypeError, ValueError) as e:
            raise StorageError(f"Failed to write JSON lines: {str(e)}", e) from e
        self._logger.debug(f"Wrote {len(lines)} JSON lines to {self.path or 'stdout'}")
        return len(lines)

    async def _text(self) -> str:
        try:
            async with self._lock:
                return self._read_text()
        except (OSError, UnicodeDecodeError) as e:
            raise StorageError(f"Failed to read {self.path or 'stdin'}: {str(e)}", e) from e

    async def read_document(self) -> Any:
        text = await self._text()
        try:
            return json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"Invalid JSON in {self.path or 'stdin'}: {e.msg}", e) from e

    async def read_lines(self) -> List[Any]:
        text = await self._text()
        payloads = []
        for number, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                payloads.append(json.loads(line))
            except json.JSONDecodeError as e:
                raise ParseError(f"Invalid JSON on line {number}: {e.msg}", e) from e
        return payloads
