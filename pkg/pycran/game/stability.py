#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Check that no merge or split can improve a partition."""

from __future__ import annotations

from itertools import combinations

from pycran.game.formation import CoalitionGame, Operation


def _admissible(game: CoalitionGame, first, second) -> bool:
    threshold = game.ci_threshold_db
    return any(game.ci.linked(rrh, other, threshold) for rrh in first for other in second) or any(
        game.ci.linked(rrh, other, threshold) for rrh in second for other in first
    )


def check_dhp_stable(game: CoalitionGame, *, admissible_only: bool = True) -> tuple[bool, Operation | None]:
    """Check the current partition of a game for stability.

    Every pairwise merge within the size cap and every single-member split
    of the current partition is evaluated, whether or not the game visited
    the resulting partition. By default only merges of coalitions linked by
    a C/I at or below the threshold are considered, as no other merge is
    ever examined by the game. With admissible_only=False every pairwise
    merge is.

    Parameters
    ----------
    game: CoalitionGame
        The game, after its activation has run.
    admissible_only: bool
        Only consider merges of linked coalitions.

    Returns
    -------
    stable: bool
        True if no operation is accepted.
    violation: Operation or None
        The first accepted operation found.
    """
    partition = game.partition

    for first, second in combinations(partition.coalitions, 2):
        if len(first) + len(second) > game.max_coalition_size:
            continue
        if admissible_only and not _admissible(game, first, second):
            continue
        if game.evaluate_merge([first, second]).accepted:
            return False, Operation("merge", (tuple(sorted(first)), tuple(sorted(second))))

    for coalition in partition.coalitions:
        if len(coalition) < 2:  # noqa: PLR2004
            continue
        for member in sorted(coalition):
            if game.evaluate_split(coalition, member).accepted:
                return False, Operation("split", (tuple(sorted(coalition)),), member)

    return True, None
