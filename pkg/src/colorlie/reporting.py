"""Pass/fail reports with exact counterexample witnesses."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .graded_linalg import Morphism


@dataclass(frozen=True)
class Witness:
    """A basis tensor on which an identity fails, with the exact residual."""

    tensor: str
    residual: tuple[tuple[str, str], ...]  # (target label, scalar string)


@dataclass(frozen=True)
class ReportEntry:
    axiom: str
    passed: bool
    witness: Optional[Witness] = None

    def __post_init__(self) -> None:
        if self.passed and self.witness is not None:
            raise ValueError("passing entries carry no witness")
        if not self.passed and self.witness is None:
            raise ValueError("failing entries need a witness")


@dataclass(frozen=True)
class VerificationReport:
    entries: tuple[ReportEntry, ...]

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def entry(self, axiom: str) -> ReportEntry:
        for e in self.entries:
            if e.axiom == axiom:
                return e
        raise KeyError(axiom)

    def failures(self) -> tuple[ReportEntry, ...]:
        return tuple(e for e in self.entries if not e.passed)

    def merged(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(self.entries + other.entries)

    @staticmethod
    def of(entries: Iterable[ReportEntry]) -> "VerificationReport":
        return VerificationReport(tuple(entries))


def entry_from_residual(axiom: str, residual: Morphism) -> ReportEntry:
    """PASS if the residual morphism vanishes, else FAIL with a witness.

    The witness is the first source basis vector with a nonzero image;
    its residual column is reported exactly.
    """
    if residual.is_zero():
        return ReportEntry(axiom, True)
    field = residual.field
    for j, col in enumerate(residual.cols):
        if col:
            witness = Witness(
                residual.source.labels[j],
                tuple(
                    (residual.target.labels[i], field.format(v)) for i, v in col
                ),
            )
            return ReportEntry(axiom, False, witness)
    raise AssertionError("unreachable")


def entry_from_equality(axiom: str, lhs: Morphism, rhs: Morphism) -> ReportEntry:
    return entry_from_residual(axiom, lhs - rhs)
