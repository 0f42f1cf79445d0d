"""Check reports: verdicts plus replayable counterexamples."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

DEFAULT_MAX_WITNESSES = 16


@dataclass(frozen=True)
class Counterexample:
    """One failing basis tuple: the identity name, where, and both sides."""

    identity: str
    indices: tuple[int, ...]
    lhs: tuple[Fraction, ...]
    rhs: tuple[Fraction, ...]


@dataclass(frozen=True)
class CheckReport:
    name: str
    passed: bool
    counterexamples: tuple[Counterexample, ...] = ()
    parts: tuple["CheckReport", ...] = ()

    def __post_init__(self):
        ok = not self.counterexamples and all(p.passed for p in self.parts)
        if self.passed != ok:
            raise ValueError("passed flag inconsistent with counterexamples/parts")

    @classmethod
    def leaf(cls, name: str, counterexamples: list[Counterexample],
             max_witnesses: int = DEFAULT_MAX_WITNESSES) -> "CheckReport":
        kept = tuple(counterexamples[:max_witnesses])
        return cls(name=name, passed=not counterexamples, counterexamples=kept)

    @classmethod
    def conjunction(cls, name: str, parts: list["CheckReport"]) -> "CheckReport":
        return cls(name=name, passed=all(p.passed for p in parts),
                   counterexamples=(), parts=tuple(parts))

    def all_counterexamples(self) -> tuple[Counterexample, ...]:
        out = list(self.counterexamples)
        for p in self.parts:
            out.extend(p.all_counterexamples())
        return tuple(out)

    def flat(self, prefix: str = "") -> dict[str, "CheckReport"]:
        """Leaf reports keyed by slash-joined path, depth-first."""
        key = f"{prefix}/{self.name}" if prefix else self.name
        if not self.parts:
            return {key: self}
        out: dict[str, CheckReport] = {}
        for p in self.parts:
            out.update(p.flat(key))
        return out
