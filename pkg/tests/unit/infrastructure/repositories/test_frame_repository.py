import pytest

from src.entities.exceptions import FormatError
from src.infrastructure.repositories.frame_repository.directory_repository import (
    DirectoryFrameRepository,
)
from src.infrastructure.repositories.frame_repository.in_memory_repository import (
    InMemoryFrameRepository,
)
from src.infrastructure.repositories.frame_repository.resizing_repository import (
    ResizingFrameRepository,
)
from tests.utils.entity_factories import create_frame, write_frames


class TestDirectoryFrameRepository:
    def test_lists_and_reads_written_frames(self, tmp_path):
        frames = [create_frame(4, 6, value=v) for v in (-1.0, 1.0)]
        write_frames(tmp_path, frames)
        repository = DirectoryFrameRepository(tmp_path)

        assert repository.list_names() == ["000000", "000001"]
        assert repository.get("000001") == frames[1]

    def test_add_picks_the_suffix_from_the_channel_count(self, tmp_path):
        repository = DirectoryFrameRepository(tmp_path)

        repository.add("000003", create_frame(2, 2, channels=3))
        repository.add("000004", create_frame(2, 2, channels=1))

        assert (tmp_path / "000003.ppm").is_file()
        assert (tmp_path / "000004.pgm").is_file()
        assert repository.list_names() == ["000003", "000004"]

    def test_describe_gives_the_file_path(self, tmp_path):
        write_frames(tmp_path, [create_frame()])
        repository = DirectoryFrameRepository(tmp_path)

        assert repository.describe("000000") == str(tmp_path / "000000.pgm")
        assert repository.describe("000099") == "000099"

    def test_unreadable_file_raises_a_format_error(self, tmp_path):
        (tmp_path / "000000.pgm").write_bytes(b"P2 1 1 255\n0")
        repository = DirectoryFrameRepository(tmp_path)

        with pytest.raises(FormatError):
            repository.get("000000")

    def test_missing_directory(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            DirectoryFrameRepository(tmp_path / "absent").list_names()


def test_in_memory_repository_orders_names_numerically():
    repository = InMemoryFrameRepository()
    repository.add("10", create_frame())
    repository.add("2", create_frame(value=0.5))

    assert repository.list_names() == ["2", "10"]
    assert repository.get("2") == create_frame(value=0.5)

    repository.clear()
    assert repository.list_names() == []


def test_resizing_repository_fits_frames_on_read():
    inner = InMemoryFrameRepository({"0": create_frame(300, 480, channels=1, value=0.5)})
    repository = ResizingFrameRepository(inner)

    frame = repository.get("0")

    assert frame.shape == (600, 960, 3)
    assert repository.list_names() == ["0"]
    assert inner.get("0").shape == (300, 480, 1)
