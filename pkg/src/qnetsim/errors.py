"""Exception hierarchy shared across the simulator."""


class QNetSimError(Exception):
    """Base class for all simulator errors."""


class SchedulingError(QNetSimError):
    """Raised when an event cannot be scheduled (overflow, halted scheduler)."""


class SimulationAbort(QNetSimError):
    """An event action failed; carries the (fire_at, seq) of the event."""

    def __init__(self, fire_at: int, seq: int, cause: BaseException):
        super().__init__(
            f"event (fire_at={fire_at}, seq={seq}) raised {type(cause).__name__}: {cause}"
        )
        self.fire_at = fire_at
        self.seq = seq


class CapacityError(QNetSimError):
    """A backend cannot hold the requested number of qubits."""


class ConfigurationError(QNetSimError):
    """Invalid or ill-timed configuration (backend switch, topology edits mid-run)."""


class LifecycleError(QNetSimError):
    """An operation was attempted on a qubit handle in the wrong phase."""


class OwnershipError(QNetSimError):
    """A node tried to use a qubit it does not currently hold."""


class ContractViolation(QNetSimError):
    """An internal precondition was broken (e.g. discarding an undetermined qubit)."""


class UnsupportedOperation(QNetSimError):
    """The active backend cannot perform the requested operation."""
