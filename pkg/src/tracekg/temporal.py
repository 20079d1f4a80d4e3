"""Time spans with certain and uncertain bounds, and interval overlap."""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime
from typing import Optional

MODE_RELIABLE = "reliable"
MODE_POSSIBLE = "possible"


class MissingBoundError(ValueError):
    """An overlap test needed a bound the span does not carry."""

    def __init__(self, which: str, mode: str) -> None:
        super().__init__(f"span has no usable {which} bound in {mode} mode")
        self.which = which
        self.mode = mode


@dataclass(frozen=True)
class TimeSpan:
    """Begin/end instants plus optional uncertain bounds and explicit duration.

    ``reliable_*`` bounds narrow the interval, ``possible_*`` bounds widen
    it; ``duration_minutes`` overrides the end-begin difference when set.
    """

    begin: Optional[datetime] = None
    end: Optional[datetime] = None
    reliable_begin: Optional[datetime] = None
    possible_begin: Optional[datetime] = None
    reliable_end: Optional[datetime] = None
    possible_end: Optional[datetime] = None
    duration_minutes: Optional[float] = None
    part_of_day: Optional[str] = None

    def check(self) -> list[str]:
        """Ordering problems, as human-readable strings (empty when consistent)."""
        problems = []
        b, e = self.bound(MODE_RELIABLE)
        if b and e and b > e:
            problems.append("begin after end")
        if self.possible_begin and self.reliable_begin and self.possible_begin > self.reliable_begin:
            problems.append("possible begin after reliable begin")
        if self.reliable_end and self.possible_end and self.reliable_end > self.possible_end:
            problems.append("reliable end after possible end")
        return problems

    def bound(self, mode: str) -> tuple[Optional[datetime], Optional[datetime]]:
        """(begin, end) under the given mode; either side may be None."""
        begin = self.reliable_begin if self.reliable_begin is not None else self.begin
        end = self.reliable_end if self.reliable_end is not None else self.end
        if mode == MODE_POSSIBLE:
            begin = self.possible_begin if self.possible_begin is not None else begin
            end = self.possible_end if self.possible_end is not None else end
        return begin, end

    def has_bounds(self, mode: str = MODE_RELIABLE) -> bool:
        b, e = self.bound(mode)
        return b is not None and e is not None

    def effective_duration(self) -> Optional[float]:
        """Minutes; explicit duration wins over the end-begin difference."""
        if self.duration_minutes is not None:
            return self.duration_minutes
        b, e = self.bound(MODE_RELIABLE)
        if b is not None and e is not None:
            return (e - b).total_seconds() / 60.0
        return None

    def is_empty(self) -> bool:
        return (
            self.begin is None
            and self.end is None
            and self.reliable_begin is None
            and self.possible_begin is None
            and self.reliable_end is None
            and self.possible_end is None
            and self.duration_minutes is None
            and self.part_of_day is None
        )


def intervals_overlap(a: TimeSpan, b: TimeSpan, mode: str = MODE_RELIABLE) -> bool:
    """Strict overlap: end(a) > begin(b) and begin(a) < end(b).

    Touching intervals do not overlap. Raises MissingBoundError when a
    span lacks a usable bound under ``mode``.
    """
    a_begin, a_end = a.bound(mode)
    b_begin, b_end = b.bound(mode)
    for name, value in (
        ("first span's begin", a_begin),
        ("first span's end", a_end),
        ("second span's begin", b_begin),
        ("second span's end", b_end),
    ):
        if value is None:
            raise MissingBoundError(name, mode)
    return a_end > b_begin and a_begin < b_end
