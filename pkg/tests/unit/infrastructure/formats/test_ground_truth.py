import pytest

from src.entities.exceptions import DataError, InputParseError
from src.infrastructure.formats.ground_truth import read_ground_truth, write_ground_truth
from tests.utils.entity_factories import C, N


def write(tmp_path, text: str):
    path = tmp_path / "gt.csv"
    path.write_text(text, encoding="utf-8")
    return path


def test_per_frame_layout(tmp_path):
    path = write(tmp_path, "frame_index,label\n1,not_changed\n0,changed\n2,changed\n")

    assert read_ground_truth(path) == [C, N, C]


def test_segment_layout(tmp_path):
    path = write(tmp_path, "start_frame,end_frame_exclusive,label\n0,2,not_changed\n2,5,changed\n")

    assert read_ground_truth(path) == [N, N, C, C, C]


def test_segments_round_trip(tmp_path):
    labels = [N] * 3 + [C] * 4 + [N]
    path = tmp_path / "nested" / "gt.csv"

    write_ground_truth(path, labels)

    assert read_ground_truth(path, n_frames=8) == labels


def test_frame_count_must_match(tmp_path):
    path = write(tmp_path, "frame_index,label\n0,changed\n")

    with pytest.raises(DataError, match="covers 1 frames, expected 2"):
        read_ground_truth(path, n_frames=2)


@pytest.mark.parametrize(
    "text",
    [
        "index,label\n0,changed\n",
        "frame_index,label\n0,moving\n",
        "frame_index,label\nzero,changed\n",
        "frame_index,label\n0,changed,extra\n",
    ],
)
def test_unparseable_input(tmp_path, text):
    with pytest.raises(InputParseError):
        read_ground_truth(write(tmp_path, text))


@pytest.mark.parametrize(
    "text",
    [
        "frame_index,label\n0,changed\n0,changed\n",
        "frame_index,label\n0,changed\n2,changed\n",
        "start_frame,end_frame_exclusive,label\n0,2,changed\n3,4,changed\n",
        "start_frame,end_frame_exclusive,label\n0,0,changed\n",
        "frame_index,label\n",
    ],
)
def test_inconsistent_annotations(tmp_path, text):
    with pytest.raises(DataError):
        read_ground_truth(write(tmp_path, text))
