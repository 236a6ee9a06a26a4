from enum import StrEnum


class SceneLabel(StrEnum):
    """
    Represents the two scene classes a window or frame can belong to.

    A changed scene varies significantly and continuously over the window;
    a not-changed scene stays static (or is blocked) for the whole window.
    """

    changed = "changed"
    not_changed = "not_changed"

    @property
    def display_name(self) -> str:
        """Human readable name used in report tables."""
        return self.value.replace("_", " ")
