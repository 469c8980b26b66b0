"""
Exception types raised by nil_graph.

Every error the library raises on bad input derives from NilGraphError so the
CLI can report it with one handler and exit with the usage/parse status.
"""


class NilGraphError(Exception):
    """Base class for all nil_graph errors."""


class RingSpecError(NilGraphError, ValueError):
    """A ring specification cannot be parsed or violates its invariants."""


class RingAxiomError(NilGraphError):
    """A constructed ring fails one of the ring axioms.

    Attributes:
        law (str): Name of the violated law (e.g. "distributivity").
        witness (tuple): Carrier indices exhibiting the violation.
    """

    def __init__(self, law, witness):
        super().__init__(f"ring axiom '{law}' fails at {witness}")
        self.law = law
        self.witness = tuple(int(x) for x in witness)


class NonCommutativeRingError(NilGraphError):
    """A commutative-only operation was asked of a noncommutative ring."""


class SearchTooLargeError(NilGraphError):
    """A ring or search exceeds the configured size cap or solver time limit."""


class ConfigError(NilGraphError):
    """A configuration or families file cannot be read."""
