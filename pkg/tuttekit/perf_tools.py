"""Performance tools and helpers."""
import logging
import time

log = logging.getLogger(__name__)


class TimerException(Exception):
    pass


class Timer:
    """Timer context manager; logs the elapsed time on exit."""
    def __init__(self, name=None, quiet=False):
        self.name = name
        self.tstart = None
        self.quiet = quiet

    def __enter__(self):
        self.start()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        if not self.quiet:
            log.info('[%s] elapsed %.3fs', self.name or 'timer',
                     self.elapsed())

    def start(self):
        self.tstart = time.perf_counter()

    def elapsed(self):
        if self.tstart is None:
            raise TimerException('Timer has not been started')

        return time.perf_counter() - self.tstart
