#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Named random streams.

Every source of randomness has its own stream, spawned from the run seed, so
the draws of one never shift the draws of another. The draws of the streams
shared by every scheme are hashed, so two runs which differ only in their
scheme can be checked to have seen the same network.
"""

from __future__ import annotations

import hashlib

import numpy as np

STREAM_NAMES = ("topology", "shadowing", "fading", "scheduling", "clustering")
SHARED_STREAMS = frozenset(("topology", "shadowing", "fading", "scheduling"))


class RandomStreams:
    """The random generators of a run.

    Parameters
    ----------
    seed: int
        The run seed.
    """

    def __init__(self, seed: int) -> None:
        self.seed = seed
        self._generators = {
            name: np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(i,)))
            for i, name in enumerate(STREAM_NAMES)
        }
        self._digest = hashlib.blake2b(digest_size=16)

    def __getitem__(self, name: str) -> np.random.Generator:
        return self._generators[name]

    def record(self, name: str, draws) -> None:
        """Add the draws of a shared stream to the digest."""
        if name not in SHARED_STREAMS:
            return
        self._digest.update(name.encode("utf-8"))
        self._digest.update(np.ascontiguousarray(draws).tobytes())

    @property
    def digest(self) -> str:
        """The hex digest of every shared draw so far."""
        return self._digest.hexdigest()
