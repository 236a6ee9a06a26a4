from dataclasses import dataclass

from src.entities.value_objects.scene_label import SceneLabel


@dataclass(frozen=True, order=True)
class WindowSpan:
    """
    A half-open range of frame indices [start, end).

    :ivar start: First frame index of the window.
    :type start: int
    :ivar end: One past the last frame index.
    :type end: int
    """

    start: int
    end: int

    def __len__(self) -> int:
        return self.end - self.start

    def __contains__(self, frame_index: object) -> bool:
        return isinstance(frame_index, int) and self.start <= frame_index < self.end


@dataclass(frozen=True)
class WindowScore:
    """
    Aggregated pair similarity of one window.

    :ivar span: The scored window.
    :type span: WindowSpan
    :ivar mean: Arithmetic mean of the pair scores, in [0, 1].
    :type mean: float
    :ivar std: Population standard deviation of the pair scores, in [0, 0.5].
    :type std: float
    :ivar pair_scores: The individual pair scores in pairing order.
    :type pair_scores: tuple[float, ...]
    """

    span: WindowSpan
    mean: float
    std: float
    pair_scores: tuple[float, ...] = ()

    @property
    def window_start(self) -> int:
        return self.span.start

    @property
    def window_end(self) -> int:
        return self.span.end


@dataclass(frozen=True)
class WindowLabel:
    """
    The detector's verdict for one window.

    :ivar score: The window score that was clustered.
    :type score: WindowScore
    :ivar label: Changed or not changed.
    :type label: SceneLabel
    :ivar cluster_id: Index of the k-means cluster the window belongs to.
    :type cluster_id: int
    :ivar distance_to_centroid: Euclidean distance to that cluster's centroid.
    :type distance_to_centroid: float
    """

    score: WindowScore
    label: SceneLabel
    cluster_id: int
    distance_to_centroid: float

    @property
    def span(self) -> WindowSpan:
        return self.score.span
