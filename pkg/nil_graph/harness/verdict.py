"""
Outcome of one theorem case on one ring.
"""

from dataclasses import dataclass
from typing import Any, Optional, Union


@dataclass(frozen=True)
class Pass:
    kind = "pass"

    def to_dict(self) -> dict:
        return {"verdict": self.kind}


@dataclass(frozen=True)
class Mismatch:
    """The claimed property fails.

    Attributes:
        witness: Concrete evidence, e.g. a vertex pair, a cycle or an element,
            given as labels so it reads without the ring at hand.
        expected (bool): Whether this is a known discrepancy in the source
            claim rather than a defect.
        note (str): Short explanation.
    """

    witness: Any
    expected: bool = False
    note: str = ""
    kind = "mismatch"

    def to_dict(self) -> dict:
        return {
            "verdict": self.kind,
            "witness": self.witness,
            "expected": self.expected,
            "note": self.note,
        }


@dataclass(frozen=True)
class Skipped:
    reason: str
    kind = "skipped"

    def to_dict(self) -> dict:
        return {"verdict": self.kind, "reason": self.reason}


Verdict = Union[Pass, Mismatch, Skipped]


def _freeze(value):
    # JSON arrays come back as lists; witnesses are kept as tuples
    if isinstance(value, list):
        return tuple(_freeze(v) for v in value)
    return value


def verdict_from_dict(data: dict) -> Verdict:
    kind = data["verdict"]
    if kind == Pass.kind:
        return Pass()
    if kind == Skipped.kind:
        return Skipped(data["reason"])
    if kind == Mismatch.kind:
        return Mismatch(_freeze(data["witness"]), data.get("expected", False), data.get("note", ""))
    raise ValueError(f"unknown verdict {kind!r}")


def check(condition: bool, witness: Optional[Any] = None, note: str = "") -> Verdict:
    """Pass when *condition* holds, otherwise an unexpected Mismatch."""
    if condition:
        return Pass()
    return Mismatch(witness, False, note)


def is_unexpected(verdict: Verdict) -> bool:
    return isinstance(verdict, Mismatch) and not verdict.expected
