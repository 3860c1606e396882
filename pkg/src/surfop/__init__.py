"""surfop: a workbench for ribbon graphs, cyclic and modular operads,
A-infinity differentials, moduli homology at desk scale, and Frobenius
surface evaluators."""

__version__ = "0.1.0"
