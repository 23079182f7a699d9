"""Deterministic, splittable random streams for parallel Monte Carlo.

Every batch API in this package derives one child stream per task index from
a single root seed.  Child derivation goes through ``numpy.random.SeedSequence``
spawn keys (a hash-based splitting construction), so results are bit-identical
under any parallel schedule: streams never depend on execution order and are
never shared between tasks.
"""

from __future__ import annotations

import numpy as np


def root_stream(root_seed: int) -> np.random.Generator:
    """Generator owned by the top-level task of a run."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(root_seed)))


def child_stream(root_seed: int, *task_path: int) -> np.random.Generator:
    """Derive the stream for a task addressed by ``task_path``.

    ``task_path`` is a tuple of nonnegative integers naming the task in the
    (static) task tree, e.g. ``(batch_index, repetition_index)``.  The same
    ``(root_seed, task_path)`` always yields the same stream.
    """
    seq = np.random.SeedSequence(root_seed, spawn_key=tuple(int(i) for i in task_path))
    return np.random.Generator(np.random.Philox(seq))


def as_generator(rng) -> np.random.Generator:
    """Accept either a Generator or an integer seed."""
    if isinstance(rng, np.random.Generator):
        return rng
    return root_stream(int(rng))
