"""Scheduler behavior: ordering, ties, overflow, cancellation, determinism."""

import pytest
from hypothesis import given, strategies as st

from qnetsim.errors import SchedulingError, SimulationAbort
from qnetsim.simcore import NS_PER_MS, TIME_MAX, Scheduler, ms


def test_empty_run_returns_zero():
    assert Scheduler().run() == 0


def test_now_starts_at_zero():
    assert Scheduler().now() == 0


def test_action_observes_its_fire_time():
    sched = Scheduler()
    seen = []
    sched.schedule(10, lambda: seen.append(sched.now()))
    assert sched.run() == 10
    assert seen == [10]


def test_fifo_among_equal_timestamps():
    sched = Scheduler()
    order = []
    sched.schedule(0, lambda: order.append("A"))
    sched.schedule(0, lambda: order.append("B"))
    sched.run()
    assert order == ["A", "B"]


def test_fig2_style_chain_executes_in_schedule_order():
    # Bell pair at 0 ms, send at 1 ms, payload prep at 1 ms, corrections at 5 ms.
    sched = Scheduler()
    log = []
    sched.schedule(ms(0), lambda: log.append(("prepare_bell", sched.now())))
    sched.schedule(ms(1), lambda: log.append(("send_half", sched.now())))
    sched.schedule(ms(1), lambda: log.append(("prepare_plus", sched.now())))
    sched.schedule(ms(5), lambda: log.append(("apply_corrections", sched.now())))
    assert sched.run() == 5 * NS_PER_MS
    assert log == [
        ("prepare_bell", 0),
        ("send_half", 1_000_000),
        ("prepare_plus", 1_000_000),
        ("apply_corrections", 5_000_000),
    ]


def test_schedule_overflow_is_an_error():
    sched = Scheduler()
    with pytest.raises(SchedulingError):
        sched.schedule(TIME_MAX - sched.now() + 1, lambda: None)
    sched.schedule(TIME_MAX, lambda: None)  # boundary itself is fine


def test_negative_delay_rejected():
    with pytest.raises(SchedulingError):
        Scheduler().schedule(-1, lambda: None)


def test_nested_scheduling_advances_clock():
    sched = Scheduler()
    seen = []

    def outer():
        sched.schedule(5, lambda: seen.append(sched.now()))

    sched.schedule(3, outer)
    assert sched.run() == 8
    assert seen == [8]


def test_action_failure_names_event():
    sched = Scheduler()

    def boom():
        raise RuntimeError("bad")

    sched.schedule(7, boom)
    with pytest.raises(SimulationAbort) as err:
        sched.run()
    assert "fire_at=7" in str(err.value)
    assert "seq=0" in str(err.value)


def test_halt_stops_draining():
    sched = Scheduler()
    seen = []
    sched.schedule(1, lambda: (seen.append(1), sched.halt()))
    sched.schedule(2, lambda: seen.append(2))
    sched.run()
    assert seen == [1]
    assert sched.pending() == 1
    with pytest.raises(SchedulingError):
        sched.schedule(1, lambda: None)


def test_cancelled_event_neither_runs_nor_advances_clock():
    sched = Scheduler()
    seen = []
    sched.schedule(5, lambda: seen.append("kept"))
    cancel_me = sched.schedule(50, lambda: seen.append("cancelled"))
    sched.cancel(cancel_me)
    assert sched.run() == 5
    assert seen == ["kept"]


@given(
    st.lists(
        st.tuples(st.integers(min_value=0, max_value=100), st.integers()),
        min_size=1,
        max_size=40,
    )
)
def test_no_time_travel_and_stable_ties(entries):
    sched = Scheduler()
    executed = []
    for delay, label in entries:
        sched.schedule(
            delay, lambda d=delay, l=label: executed.append((sched.now(), d, l))
        )
    sched.run()
    times = [t for t, _, _ in executed]
    assert times == sorted(times)
    # Among equal fire times, execution order equals scheduling order.
    expected = sorted(
        [(d, i, l) for i, (d, l) in enumerate(entries)], key=lambda e: (e[0], e[1])
    )
    assert [(d, l) for d, _, l in expected] == [(d, l) for _, d, l in executed]


def test_two_identical_runs_execute_identically():
    def build():
        sched = Scheduler()
        log = []

        def emit(tag):
            log.append((sched.now(), tag))
            if tag == "a":
                sched.schedule(4, lambda: emit("a-child"))

        sched.schedule(2, lambda: emit("a"))
        sched.schedule(2, lambda: emit("b"))
        sched.schedule(9, lambda: emit("c"))
        sched.run()
        return log

    assert build() == build()
