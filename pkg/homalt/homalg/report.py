"""Axiom reports returned by every checker."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional

import numpy as np


@dataclass(frozen=True)
class Witness:
    """First violating basis tuple and the nonzero defect it produces."""
    indices: tuple[int, ...]
    defect: tuple[Fraction, ...]


@dataclass(frozen=True)
class AxiomEntry:
    name: str
    holds: bool
    witness: Optional[Witness] = None


@dataclass
class AxiomReport:
    """Ordered list of named identity verdicts."""
    entries: list[AxiomEntry] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(entry.holds for entry in self.entries)

    def __bool__(self) -> bool:
        return self.holds

    def __iter__(self) -> Iterator[AxiomEntry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, name: str) -> AxiomEntry:
        for entry in self.entries:
            if entry.name == name:
                return entry
        raise KeyError(name)

    def names(self) -> list[str]:
        return [entry.name for entry in self.entries]

    def failures(self) -> list[AxiomEntry]:
        return [entry for entry in self.entries if not entry.holds]

    def add(self, entry: AxiomEntry) -> 'AxiomReport':
        self.entries.append(entry)
        return self

    def extend(self, other: 'AxiomReport', prefix: str = '') -> 'AxiomReport':
        for entry in other.entries:
            self.entries.append(AxiomEntry(prefix + entry.name, entry.holds, entry.witness))
        return self


def tensor_entry(name: str, defect: np.ndarray) -> AxiomEntry:
    """Verdict for a defect tensor whose last axis is the output coordinate.

    The leading axes index basis tuples; the witness is the first tuple in
    lexicographic order whose defect vector is nonzero.
    """
    if defect.size == 0:
        return AxiomEntry(name, True)
    nonzero = defect != 0
    rows = np.any(nonzero, axis=-1) if defect.ndim > 1 else nonzero
    hits = np.argwhere(rows)
    if len(hits) == 0:
        return AxiomEntry(name, True)
    if defect.ndim == 1:
        index = int(hits[0][0])
        return AxiomEntry(name, False, Witness((index,), (Fraction(defect[index]),)))
    indices = tuple(int(i) for i in hits[0])
    vector = tuple(Fraction(v) for v in defect[indices])
    return AxiomEntry(name, False, Witness(indices, vector))


def scalar_entry(name: str, defect: np.ndarray) -> AxiomEntry:
    """Verdict for a defect tensor of scalars (no output axis), e.g. a gram identity."""
    if defect.size == 0:
        return AxiomEntry(name, True)
    hits = np.argwhere(defect != 0)
    if len(hits) == 0:
        return AxiomEntry(name, True)
    indices = tuple(int(i) for i in hits[0])
    return AxiomEntry(name, False, Witness(indices, (Fraction(defect[indices]),)))


def flag_entry(name: str, holds: bool, indices: tuple = (), defect=()) -> AxiomEntry:
    """Verdict for a condition that is not a tensor identity (nondegeneracy, evenness)."""
    if holds:
        return AxiomEntry(name, True)
    return AxiomEntry(name, False, Witness(tuple(indices), tuple(Fraction(v) for v in defect)))
