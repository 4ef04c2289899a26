# Standard Library
import datetime
from typing import Optional


class Timer:
    """Wall-clock stopwatch, usable as a context manager around one command."""

    def __init__(self):
        self._start: Optional[datetime.datetime] = None
        self.elapsed = datetime.timedelta()

    def start(self) -> "Timer":
        self.elapsed = datetime.timedelta()
        self._start = datetime.datetime.now()
        return self

    def stop(self) -> datetime.timedelta:
        if self._start is not None:
            self.elapsed += datetime.datetime.now() - self._start
            self._start = None
        return self.elapsed

    def __enter__(self) -> "Timer":
        return self.start()

    def __exit__(self, *exc) -> None:
        self.stop()
