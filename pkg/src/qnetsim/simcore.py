"""Deterministic discrete-event scheduler with an integer-nanosecond clock.

All simulated actions, quantum and classical, are closures enqueued on one
global priority queue keyed by (fire_at, insertion seq). Ties execute in
scheduling order, which makes whole runs reproducible event-for-event.
"""

from __future__ import annotations

import heapq
from typing import Callable

from .errors import SchedulingError, SimulationAbort

# Simulated time is an unsigned 64-bit count of nanoseconds.
TIME_MAX = 2**64 - 1

NS_PER_US = 1_000
NS_PER_MS = 1_000_000
NS_PER_S = 1_000_000_000


def ms(value: int) -> int:
    """Milliseconds to nanoseconds."""
    return value * NS_PER_MS


class Scheduler:
    """Single-threaded event loop over a (fire_at, seq) priority queue.

    The scheduler owns no domain knowledge: actions are zero-argument
    callables that capture their own context.
    """

    def __init__(self) -> None:
        self._clock: int = 0
        self._queue: list[tuple[int, int, Callable[[], None]]] = []
        self._next_seq: int = 0
        self._halted: bool = False
        self._cancelled: set[int] = set()

    def now(self) -> int:
        """Current simulated time in nanoseconds."""
        return self._clock

    def schedule(self, delay: int, action: Callable[[], None]) -> int:
        """Enqueue ``action`` to fire ``delay`` ns from now; returns its seq id.

        Never runs the action inline, even for delay 0.
        """
        if self._halted:
            raise SchedulingError("scheduler is halted")
        if delay < 0:
            raise SchedulingError(f"negative delay {delay}")
        fire_at = self._clock + delay
        if fire_at > TIME_MAX:
            raise SchedulingError(
                f"fire time {self._clock} + {delay} overflows the 64-bit clock"
            )
        seq = self._next_seq
        self._next_seq += 1
        heapq.heappush(self._queue, (fire_at, seq, action))
        return seq

    def halt(self) -> None:
        """Stop draining after the currently executing event."""
        self._halted = True

    @property
    def halted(self) -> bool:
        return self._halted

    def cancel(self, event_id: int) -> None:
        """Tombstone a scheduled event; it is skipped without advancing the
        clock (used for timeouts that were beaten by the thing they guard)."""
        self._cancelled.add(event_id)

    def pending(self) -> int:
        """Number of queued live (non-cancelled) events."""
        return sum(1 for _, seq, _ in self._queue if seq not in self._cancelled)

    def run(self) -> int:
        """Drain the queue in (fire_at, seq) order; returns the final clock.

        Actions may schedule further events. An exception from an action
        aborts the run, naming the offending event.
        """
        while self._queue and not self._halted:
            fire_at, seq, action = heapq.heappop(self._queue)
            if seq in self._cancelled:
                self._cancelled.discard(seq)
                continue
            assert fire_at >= self._clock, "event queue went back in time"
            self._clock = fire_at
            try:
                action()
            except Exception as exc:
                raise SimulationAbort(fire_at, seq, exc) from exc
        return self._clock
