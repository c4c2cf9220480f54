"""Topology entities and the central network controller.

The controller owns everything with global scope: the scheduler, the qubit
registry, the seeded random stream, topology, and the trace under
construction. Nodes hold only their callbacks; channels and links carry delay
(and, for quantum channels, an ordered noise-map chain). The classical layer
is a reliable FIFO point-to-point datagram service with configurable delay.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from . import trace as trace_mod
from .errors import ConfigurationError, LifecycleError, OwnershipError
from .noise import NoiseMap
from .qstate import BackendKind
from .registry import Phase, QubitRegistry
from .simcore import NS_PER_MS, Scheduler

MAX_DATAGRAM_BYTES = 65_507
DEFAULT_CLASSICAL_DELAY_NS = 1 * NS_PER_MS


@dataclass
class Datagram:
    src: int
    dst: int
    payload: bytes
    tag: str = ""


@dataclass
class QNode:
    id: int
    label: str
    recv_callback: Optional[Callable[[int, int], None]] = None
    datagram_callback: Optional[Callable[[Datagram], None]] = None


@dataclass
class ClassicalLink:
    a: int
    b: int
    delay_ns: int = DEFAULT_CLASSICAL_DELAY_NS


class QuantumChannel:
    """Undirected quantum link; delay and noise maps are set before run()."""

    def __init__(self, net: "Network", a: int, b: int):
        self._net = net
        self.a = a
        self.b = b
        self.delay_ns = 0
        self.noise_maps: list[NoiseMap] = []

    def set_delay(self, delay_ns: int) -> None:
        if delay_ns < 0:
            raise ValueError("delay must be >= 0")
        self._net._require_not_started("set quantum link delay")
        self.delay_ns = delay_ns

    def attach(self, noise_map: NoiseMap) -> None:
        """Append a map; maps run in attachment order on every arrival,
        in both directions of the channel."""
        self._net._require_not_started("attach a noise map")
        self.noise_maps.append(noise_map)


class ForcedRandom:
    """Yields a fixed prefix of variates, then falls back to the seeded
    stream. Lets tests drive protocols down a chosen measurement branch."""

    def __init__(self, forced: Sequence[float], fallback: random.Random):
        self._forced = list(forced)
        self._fallback = fallback

    def random(self) -> float:
        if self._forced:
            return self._forced.pop(0)
        return self._fallback.random()


class Network:
    """Single-threaded simulation controller.

    Construct topology, register callbacks, schedule initial events, then
    ``run()``. All randomness flows through one deterministic stream consumed
    in event-execution order, so equal seeds give byte-identical traces.
    """

    def __init__(
        self,
        backend: BackendKind | str = BackendKind.KET,
        seed: int = 0,
        scenario: str = "adhoc",
        config: Optional[dict] = None,
        rng=None,
        qubit_cap: Optional[int] = None,
    ):
        self.scheduler = Scheduler()
        self.seed = seed
        self.rng = rng if rng is not None else random.Random(seed)
        self._backend = BackendKind.parse(backend) if isinstance(backend, str) else backend
        self._qubit_cap = qubit_cap
        self._registry: Optional[QubitRegistry] = None
        self.nodes: list[QNode] = []
        self.qchannels: list[QuantumChannel] = []
        self.clinks: list[ClassicalLink] = []
        self._qlink_index: dict[frozenset[int], QuantumChannel] = {}
        self._clink_index: dict[frozenset[int], ClassicalLink] = {}
        self._started = False
        self.trace = trace_mod.TraceDoc.new(
            backend=self._backend.value, seed=seed, scenario=scenario, config=config
        )

    # -- plumbing ----------------------------------------------------------

    def now(self) -> int:
        return self.scheduler.now()

    def schedule(self, delay_ns: int, action: Callable[[], None]) -> int:
        return self.scheduler.schedule(delay_ns, action)

    def emit(self, event_type: str, /, **payload) -> None:
        self.trace.emit(event_type, self.now(), **payload)

    def _require_not_started(self, what: str) -> None:
        if self._started:
            raise ConfigurationError(f"cannot {what} once the simulation has started")

    @property
    def backend(self) -> BackendKind:
        return self._backend

    @property
    def registry(self) -> QubitRegistry:
        if self._registry is None:
            self._registry = QubitRegistry(
                self._backend, self.rng, emit=self.emit, cap=self._qubit_cap
            )
        return self._registry

    def set_qstate_backend(self, kind: BackendKind | str) -> None:
        if self._registry is not None:
            raise ConfigurationError(
                "backend cannot change after qubits have been allocated"
            )
        self._backend = BackendKind.parse(kind) if isinstance(kind, str) else kind
        self.trace.meta["backend"] = self._backend.value

    # -- topology ----------------------------------------------------------

    def create_node(self, label: Optional[str] = None) -> int:
        self._require_not_started("create a node")
        node_id = len(self.nodes)
        self.nodes.append(QNode(node_id, label if label is not None else f"node{node_id}"))
        return node_id

    def node(self, node_id: int) -> QNode:
        try:
            return self.nodes[node_id]
        except IndexError:
            raise ConfigurationError(f"unknown node {node_id}") from None

    def install_quantum_link(self, a: int, b: int) -> QuantumChannel:
        self._require_not_started("install a quantum link")
        if a == b:
            raise ConfigurationError("quantum link endpoints must differ")
        self.node(a)
        self.node(b)
        key = frozenset((a, b))
        if key in self._qlink_index:
            raise ConfigurationError(f"quantum link ({a}, {b}) already exists")
        channel = QuantumChannel(self, a, b)
        self.qchannels.append(channel)
        self._qlink_index[key] = channel
        return channel

    def install_classical_link(
        self, a: int, b: int, delay_ns: int = DEFAULT_CLASSICAL_DELAY_NS
    ) -> ClassicalLink:
        self._require_not_started("install a classical link")
        if a == b:
            raise ConfigurationError("classical link endpoints must differ")
        self.node(a)
        self.node(b)
        if delay_ns < 0:
            raise ValueError("delay must be >= 0")
        key = frozenset((a, b))
        if key in self._clink_index:
            raise ConfigurationError(f"classical link ({a}, {b}) already exists")
        link = ClassicalLink(a, b, delay_ns)
        self.clinks.append(link)
        self._clink_index[key] = link
        return link

    def set_recv_callback(self, node_id: int, cb: Optional[Callable[[int, int], None]]) -> None:
        self.node(node_id).recv_callback = cb

    def set_datagram_callback(self, node_id: int, cb: Optional[Callable[[Datagram], None]]) -> None:
        self.node(node_id).datagram_callback = cb

    # -- quantum operations --------------------------------------------------

    def alloc_qubit(self, node_id: int) -> int:
        self.node(node_id)
        return self.registry.alloc_qubit(node_id)

    def create_bell_pair(self, node_id: int) -> tuple[int, int]:
        """Two fresh qubits at the node, entangled by H then CNOT."""
        h0 = self.alloc_qubit(node_id)
        h1 = self.alloc_qubit(node_id)
        self.registry.apply("H", [h0])
        self.registry.apply("CNOT", [h0, h1])
        return h0, h1

    def apply(self, gate: str, handles: Sequence[int]) -> None:
        self.registry.apply(gate, handles)

    def measure(self, handle: int, basis: str = "Z") -> int:
        return self.registry.measure(handle, basis)

    def measure_bell(self, h0: int, h1: int) -> tuple[int, int]:
        return self.registry.measure_bell(h0, h1)

    # -- transport -----------------------------------------------------------

    def send_qubit(self, src: int, handle: int, dst: int) -> None:
        """Non-blocking: the qubit leaves now; noise maps run on arrival, then
        ownership transfers and the receiver's callback fires."""
        channel = self._qlink_index.get(frozenset((src, dst)))
        if channel is None:
            raise ConfigurationError(f"no quantum link between {src} and {dst}")
        entry = self.registry.entry(handle)
        if entry.phase is not Phase.LIVE:
            raise LifecycleError(f"qubit {handle} is {entry.phase.value}, not live")
        if entry.in_flight or entry.owner != src:
            raise OwnershipError(f"node {src} does not hold qubit {handle}")
        entry.in_flight = True
        entry.owner = None
        self.emit("qsend", qubit=handle, src=src, dst=dst)
        self.schedule(channel.delay_ns, lambda: self._arrive(channel, handle, src, dst))

    def _arrive(self, channel: QuantumChannel, handle: int, src: int, dst: int) -> None:
        for noise_map in channel.noise_maps:
            if noise_map.kind == "loss":
                if self.rng.random() < noise_map.p:
                    self.emit("qlost", qubit=handle, src=src, dst=dst)
                    self.registry.lose(handle)
                    return
            else:
                effect = self.registry.apply_channel(handle, noise_map.pauli_probs())
                self.emit(
                    "noise",
                    qubit=handle,
                    kind=noise_map.kind,
                    p=noise_map.p,
                    effect=effect,
                )
        entry = self.registry.entry(handle)
        entry.in_flight = False
        entry.owner = dst
        self.emit("qrecv", qubit=handle, src=src, dst=dst)
        cb = self.node(dst).recv_callback
        if cb is not None:
            cb(handle, src)

    def send_datagram(self, src: int, dst: int, payload: bytes, tag: str = "") -> None:
        """Non-blocking reliable datagram; delivered byte-exact after the link
        delay, FIFO per link."""
        link = self._clink_index.get(frozenset((src, dst)))
        if link is None:
            raise ConfigurationError(f"no classical link between {src} and {dst}")
        if len(payload) > MAX_DATAGRAM_BYTES:
            raise ValueError(f"payload of {len(payload)} bytes exceeds datagram bound")
        encoded = trace_mod.encode_payload(payload)
        self.emit("csend", src=src, dst=dst, payload_b64=encoded, tag=tag)
        datagram = Datagram(src, dst, payload, tag)

        def deliver():
            self.emit("crecv", src=src, dst=dst, payload_b64=encoded, tag=tag)
            cb = self.node(dst).datagram_callback
            if cb is not None:
                cb(datagram)

        self.schedule(link.delay_ns, deliver)

    # -- run -------------------------------------------------------------------

    def _sync_topology(self) -> None:
        topo = self.trace.topology
        topo["nodes"] = [{"id": n.id, "label": n.label} for n in self.nodes]
        topo["qlinks"] = [
            {
                "a": ch.a,
                "b": ch.b,
                "delay_ns": ch.delay_ns,
                "qmaps": [{"kind": m.kind, "p": m.p} for m in ch.noise_maps],
            }
            for ch in self.qchannels
        ]
        topo["clinks"] = [
            {"a": l.a, "b": l.b, "delay_ns": l.delay_ns} for l in self.clinks
        ]

    def run(self) -> int:
        """Drain the event queue; returns the final simulated time in ns."""
        self._started = True
        self._sync_topology()
        return self.scheduler.run()

    def trace_doc(self) -> trace_mod.TraceDoc:
        self._sync_topology()
        return self.trace
