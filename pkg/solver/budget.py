"""
Time budgets on the monotonic clock, and the watcher that ends them early.

A ``Deadline`` is polled by the solvers at state-expansion and batch
boundaries. ``TerminationWatcher`` runs one daemon thread that flags the
deadline when the wall budget is spent, and installs handlers so that a
termination signal flags it too. Neither ever touches solver state.
"""
import logging
import signal
import threading
import time

logger = logging.getLogger(__name__)


class Deadline:
    def __init__(self, seconds=None, margin=0.0, parent=None):
        self.started = time.monotonic()
        self.limit = None if seconds is None else max(0.0, seconds * (1.0 - margin))
        self.parent = parent
        self._cancelled = threading.Event()

    @classmethod
    def unlimited(cls):
        return cls(None)

    def elapsed(self):
        return time.monotonic() - self.started

    def remaining(self):
        """Seconds left, or None when unlimited."""
        mine = None if self.limit is None else max(0.0, self.limit - self.elapsed())
        theirs = None if self.parent is None else self.parent.remaining()
        if mine is None:
            return theirs
        if theirs is None:
            return mine
        return min(mine, theirs)

    def cancel(self):
        self._cancelled.set()

    @property
    def cancelled(self):
        return self._cancelled.is_set() or (self.parent is not None and self.parent.cancelled)

    def expired(self):
        if self.cancelled:
            return True
        remaining = self.remaining()
        return remaining is not None and remaining <= 0.0

    def slice(self, fraction):
        """A child deadline covering ``fraction`` of what is left; it also ends with its parent."""
        remaining = self.remaining()
        seconds = None if remaining is None else remaining * fraction
        return Deadline(seconds, parent=self)


class TerminationWatcher:
    """
    Flag ``deadline`` on budget expiry or on a termination signal.

    Use as a context manager around the solving loop. Signal handlers are only
    installed from the main thread and are restored on exit.
    """

    def __init__(self, deadline, signals=(signal.SIGTERM, signal.SIGINT)):
        self.deadline = deadline
        self.signals = signals
        self._previous = {}
        self._thread = None
        self._done = threading.Event()

    def _on_signal(self, signum, frame):
        logger.info('received signal %d, finishing with the best answer so far', signum)
        self.deadline.cancel()

    def _watch(self):
        while not self._done.is_set():
            remaining = self.deadline.remaining()
            if remaining is not None and remaining <= 0.0:
                self.deadline.cancel()
                return
            timeout = 0.5 if remaining is None else min(remaining, 0.5)
            if self._done.wait(timeout):
                return

    def __enter__(self):
        if threading.current_thread() is threading.main_thread():
            for signum in self.signals:
                self._previous[signum] = signal.signal(signum, self._on_signal)
        self._thread = threading.Thread(target=self._watch, name='tww-watcher', daemon=True)
        self._thread.start()
        return self.deadline

    def __exit__(self, exc_type, exc, tb):
        self._done.set()
        self._thread.join()
        for signum, handler in self._previous.items():
            signal.signal(signum, handler)
        self._previous.clear()
        return False
