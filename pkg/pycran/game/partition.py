#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Partitions of the RRHs into coalitions."""

from __future__ import annotations

from typing import Iterable, Iterator

from pycran.error import InvalidInput, PreconditionViolation

Coalition = frozenset


class Partition:
    """An immutable collection of disjoint, non-empty coalitions.

    Partitions compare equal when they hold the same coalitions, so they can
    be kept in sets to remember which structures have been visited.
    """

    def __init__(self, coalitions: Iterable[Iterable[int]]) -> None:
        self._coalitions = frozenset(Coalition(coalition) for coalition in coalitions)
        if any(not coalition for coalition in self._coalitions):
            raise InvalidInput("a coalition can not be empty")
        members = [rrh for coalition in self._coalitions for rrh in coalition]
        if len(members) != len(set(members)):
            raise InvalidInput("coalitions in a partition must be disjoint")
        self._lookup = {rrh: coalition for coalition in self._coalitions for rrh in coalition}

    @classmethod
    def singletons(cls, rrhs: Iterable[int]) -> Partition:
        """Return the partition where no RRH cooperates."""
        return cls([rrh] for rrh in rrhs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Partition) and self._coalitions == other._coalitions

    def __hash__(self) -> int:
        return hash(self._coalitions)

    def __iter__(self) -> Iterator[Coalition]:
        return iter(self.coalitions)

    def __len__(self) -> int:
        return len(self._coalitions)

    def __repr__(self) -> str:
        return f"Partition({[sorted(coalition) for coalition in self.coalitions]})"

    # Properties ---------------------------------------------------------------

    @property
    def coalitions(self) -> tuple[Coalition, ...]:
        """The coalitions, ordered by their sorted members."""
        return tuple(sorted(self._coalitions, key=sorted))

    @property
    def rrhs(self) -> frozenset[int]:
        """Every RRH covered by the partition."""
        return frozenset(self._lookup)

    @property
    def sizes(self) -> list[int]:
        """The size of each coalition."""
        return [len(coalition) for coalition in self.coalitions]

    @property
    def average_size(self) -> float:
        """The mean coalition size."""
        return len(self._lookup) / len(self._coalitions) if self._coalitions else 0.0

    @property
    def max_size(self) -> int:
        """The size of the largest coalition."""
        return max(self.sizes, default=0)

    # Public methods -----------------------------------------------------------

    def coalition_of(self, rrh: int) -> Coalition:
        """Return the coalition containing an RRH."""
        return self._lookup[rrh]

    def merge(self, parts: Iterable[Coalition]) -> Partition:
        """Return the partition with some of its coalitions merged."""
        parts = [Coalition(part) for part in parts]
        if any(part not in self._coalitions for part in parts):
            raise PreconditionViolation("only coalitions of the partition can be merged")
        kept = [coalition for coalition in self._coalitions if coalition not in parts]
        return Partition([*kept, frozenset().union(*parts)])

    def split(self, coalition: Coalition, member: int) -> Partition:
        """Return the partition with one member split off into a singleton."""
        coalition = Coalition(coalition)
        if coalition not in self._coalitions:
            raise PreconditionViolation("only coalitions of the partition can be split")
        if len(coalition) < 2 or member not in coalition:  # noqa: PLR2004
            raise PreconditionViolation(f"can not split RRH {member} off {sorted(coalition)}")
        kept = [c for c in self._coalitions if c != coalition]
        return Partition([*kept, coalition - {member}, {member}])

    def validate(self, rrhs: Iterable[int], max_coalition_size: int | None = None) -> None:
        """Check the partition covers exactly a set of RRHs and respects a
        size cap."""
        if self.rrhs != frozenset(rrhs):
            raise InvalidInput("the partition does not cover every RRH exactly once")
        if max_coalition_size is not None and self.max_size > max_coalition_size:
            raise InvalidInput(f"a coalition is larger than the maximum size of {max_coalition_size}")
