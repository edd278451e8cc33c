"""Machine-readable check reports shared by the library and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Sequence

__all__ = [
    "Check",
    "Report",
    "all_pass",
    "fraction_str",
    "parse_fraction",
]


@dataclass(frozen=True)
class Check:
    """One named verification with a human-readable claim and a verdict."""

    name: str
    claim: str
    passed: bool
    witness: Any = None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "claim": self.claim,
            "passed": self.passed,
            "witness": self.witness,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Check":
        return cls(d["name"], d["claim"], d["passed"], d.get("witness"))


def all_pass(checks: Iterable[Check]) -> bool:
    return all(c.passed for c in checks)


@dataclass(frozen=True)
class Report:
    """Aggregate result of one command: echo, checks, and extra payload."""

    command: str
    args: dict = field(default_factory=dict)
    checks: tuple[Check, ...] = ()
    payload: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all_pass(self.checks)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "args": self.args,
            "checks": [c.to_dict() for c in self.checks],
            "passed": self.passed,
            "payload": self.payload,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        return cls(
            command=d["command"],
            args=dict(d.get("args", {})),
            checks=tuple(Check.from_dict(c) for c in d.get("checks", [])),
            payload=dict(d.get("payload", {})),
        )


def fraction_str(x: Fraction | int) -> str:
    """Exact decimal-free rendering: ``3/4`` or ``-2``."""
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational {text!r}: {exc}") from None


def vector_strs(vec: Sequence[Fraction]) -> list[str]:
    return [fraction_str(x) for x in vec]
