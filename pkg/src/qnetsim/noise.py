"""Channel noise maps: loss, depolarizing, dephasing.

Maps attach to quantum channels in order and run automatically when a qubit
arrives. Loss short-circuits the rest of the chain. Parameterizations are the
textbook forms recorded in the trace meta: depolarizing replaces the qubit by
the maximally mixed state with probability p, dephasing applies Z with
probability p.
"""

from __future__ import annotations

from dataclasses import dataclass

KINDS = ("loss", "depolarizing", "dephasing")


@dataclass(frozen=True)
class NoiseMap:
    kind: str
    p: float

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown noise map kind {self.kind!r} (valid: {KINDS})")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"noise probability {self.p} outside [0, 1]")

    def pauli_probs(self) -> tuple[float, float, float, float]:
        """(p_I, p_X, p_Y, p_Z) for the Pauli-channel kinds."""
        if self.kind == "depolarizing":
            return (1.0 - 3.0 * self.p / 4.0, self.p / 4.0, self.p / 4.0, self.p / 4.0)
        if self.kind == "dephasing":
            return (1.0 - self.p, 0.0, 0.0, self.p)
        raise ValueError(f"{self.kind} is not a Pauli channel")

    @classmethod
    def parse(cls, text: str) -> "NoiseMap":
        """Parse 'kind:p' as used by the CLI, e.g. 'depolarizing:0.05'."""
        kind, sep, prob = text.partition(":")
        if not sep:
            raise ValueError(f"expected kind:p, got {text!r}")
        try:
            p = float(prob)
        except ValueError:
            raise ValueError(f"invalid probability in {text!r}") from None
        return cls(kind.strip().lower(), p)
