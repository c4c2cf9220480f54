"""qnetsim: discrete-event simulation of hybrid quantum-classical networks."""

__version__ = "0.1.0"
