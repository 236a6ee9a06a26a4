from src.infrastructure.formats.plot_csv import write_plot_csv
from tests.utils.entity_factories import C, N, create_window_label


def test_rows_are_sorted_by_window_start(tmp_path):
    windows = [
        create_window_label(120, 120, C, mean=0.25, std=0.125),
        create_window_label(0, 120, N, mean=1.0, std=0.0),
    ]
    path = tmp_path / "plot.csv"

    write_plot_csv(path, windows)

    assert path.read_text(encoding="utf-8").splitlines() == [
        "window_start,mean,std,label",
        "0,1.0,0.0,not_changed",
        "120,0.25,0.125,changed",
    ]
