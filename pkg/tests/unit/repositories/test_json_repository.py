import io

import pytest

from src.repositories.json_repository import JsonArtifactRepository
from src.utils.exceptions import ParseError, StorageError


@pytest.fixture
def temp_repository(tmp_path):
    """Create temporary repository for testing."""
    return JsonArtifactRepository(tmp_path / "out" / "artifact.json")


@pytest.mark.asyncio
async def test_document_operations(temp_repository):
    """Test writing and reading back a document."""
    payload = {"n": 2, "edges": [[1, 2]], "irreducible": False, "note": "Λ"}
    await temp_repository.write_document(payload)

    assert await temp_repository.read_document() == payload
    text = temp_repository.path.read_text(encoding="utf-8")
    assert text.endswith("\n")
    assert "Λ" in text


@pytest.mark.asyncio
async def test_lines_operations(temp_repository):
    """Test JSON-lines write and read."""
    payloads = [{"subset": [1]}, {"subset": [2]}, [1, 2, 3]]
    assert await temp_repository.write_lines(payloads) == 3
    assert await temp_repository.read_lines() == payloads
    assert len(temp_repository.path.read_text(encoding="utf-8").splitlines()) == 3


@pytest.mark.asyncio
async def test_blank_lines_are_skipped(tmp_path):
    path = tmp_path / "lines.jsonl"
    path.write_text('{"a": 1}\n\n   \n{"a": 2}\n', encoding="utf-8")
    assert await JsonArtifactRepository(path).read_lines() == [{"a": 1}, {"a": 2}]


@pytest.mark.asyncio
async def test_output_is_byte_identical(tmp_path):
    payload = {"b": [1, 2], "a": {"nested": True}}
    first, second = tmp_path / "first.json", tmp_path / "second.json"
    await JsonArtifactRepository(first).write_document(payload)
    await JsonArtifactRepository(second).write_document(dict(payload))
    assert first.read_bytes() == second.read_bytes()


@pytest.mark.asyncio
async def test_standard_streams():
    """Test "-" reads stdin and writes stdout."""
    stdout = io.StringIO()
    writer = JsonArtifactRepository("-", stdout=stdout)
    assert writer.path is None
    await writer.write_lines([{"x": 1}, {"x": 2}])
    assert stdout.getvalue() == '{"x": 1}\n{"x": 2}\n'

    reader = JsonArtifactRepository(None, stdin=io.StringIO('{"rows": [0, 1]}'))
    assert await reader.read_document() == {"rows": [0, 1]}


@pytest.mark.asyncio
async def test_invalid_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(ParseError):
        await JsonArtifactRepository(path).read_document()

    path.write_text('{"a": 1}\n{broken\n', encoding="utf-8")
    with pytest.raises(ParseError):
        await JsonArtifactRepository(path).read_lines()


@pytest.mark.asyncio
async def test_storage_errors(tmp_path):
    with pytest.raises(StorageError):
        await JsonArtifactRepository(tmp_path).write_document({"a": 1})
    with pytest.raises(StorageError):
        await JsonArtifactRepository(tmp_path / "missing.json").read_document()
    with pytest.raises(StorageError):
        await JsonArtifactRepository(tmp_path / "x.json").write_document({"bad": {1, 2}})
