"""Bounded breadth-first enumeration of the labeled exchange graph.

Seeds are deduplicated by a SHA-256 fingerprint of their canonical
serialization, but the fingerprint is only an accelerator: every lookup
hit is re-verified by structural equality, so a hash collision can never
merge (or split) seeds.  Insertion order is fixed (BFS layer, then parent
order, then direction), which makes two runs with the same inputs produce
identical atlases, whether expansion happens on one worker or several.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .intmat import IntMatrix, c_mutate, g_mutate
from .modseed import CertifiedState, evaluation_points, mutate_state, origin_state
from .seeds import Seed, mutate_seed, new_principal_seed


class BudgetExceededError(RuntimeError):
    """The exploration hit its seed-count cap before finishing."""


@dataclass(frozen=True)
class AtlasEntry:
    seed: Seed
    c: IntMatrix
    g: IntMatrix
    path: tuple[int, ...]  # 1-based directions from the origin


@dataclass
class ExplorationAtlas:
    """Deduplicated ball of labeled seeds around the origin."""

    origin: Seed
    depth_bound: int
    entries: list[AtlasEntry] = field(default_factory=list)
    layer_sizes: list[int] = field(default_factory=list)
    closed: bool = False
    _buckets: dict[str, list[int]] = field(default_factory=dict, repr=False)

    def __len__(self) -> int:
        return len(self.entries)

    def find(self, seed: Seed) -> AtlasEntry | None:
        """Structural lookup; the fingerprint only narrows the candidates."""
        for idx in self._buckets.get(seed.fingerprint(), ()):
            if self.entries[idx].seed == seed:
                return self.entries[idx]
        return None

    def add(self, entry: AtlasEntry) -> bool:
        """Insert if structurally new; returns whether it was added."""
        if self.find(entry.seed) is not None:
            return False
        self._buckets.setdefault(entry.seed.fingerprint(), []).append(len(self.entries))
        self.entries.append(entry)
        return True

    def distinct_variables(self) -> int:
        return len({v for e in self.entries for v in e.seed.vars})

    def replace(self, index: int, entry: AtlasEntry) -> "ExplorationAtlas":
        """Copy of the atlas with one entry swapped out (used by the
        corrupted-canary negative controls, never by exploration)."""
        out = ExplorationAtlas(self.origin, self.depth_bound,
                               list(self.entries), list(self.layer_sizes), self.closed,
                               dict(self._buckets))
        out.entries[index] = entry
        return out


DEFAULT_MAX_OPS = 20_000_000


def explore(B0: IntMatrix, depth: int, max_seeds: int = 100_000,
            check: bool = True, workers: int = 1,
            max_ops: int | None = DEFAULT_MAX_OPS) -> ExplorationAtlas:
    """BFS closure of the principal seed under mutations up to a depth bound.

    Stops early (and marks the atlas closed) when a whole layer yields
    nothing new; otherwise the atlas is a truncated ball and ``closed`` is
    False.  Raises BudgetExceededError if more than max_seeds distinct
    seeds appear, and TermBudgetError when a single variable's product
    work exceeds max_ops term pairs (wild instances grow doubly
    exponentially; see explore_states for a depth-robust alternative).
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    origin = new_principal_seed(B0, check=check)
    n = origin.n
    eye = IntMatrix.identity(n)
    atlas = ExplorationAtlas(origin, depth)
    atlas.add(AtlasEntry(origin, eye, eye, ()))
    atlas.layer_sizes.append(1)

    frontier = list(atlas.entries)
    pool = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for _ in range(depth):
            tasks = [(parent, k) for parent in frontier for k in range(1, n + 1)]

            def expand(task):
                parent, k = task
                return mutate_seed(parent.seed, k, check=check, max_ops=max_ops)

            children = list(pool.map(expand, tasks)) if pool else [expand(t) for t in tasks]

            fresh = []
            for (parent, k), child in zip(tasks, children):
                c = child.ext.C
                g_rec = g_mutate(parent.g, parent.seed.ext.B, parent.c, B0, k)
                if check:
                    if g_rec != child.g_matrix():
                        raise AssertionError(
                            f"G-recurrence disagrees with grading degrees at path {parent.path + (k,)}"
                        )
                    if c != c_mutate(parent.seed.ext.B, parent.c, k):
                        raise AssertionError(
                            f"C-recurrence disagrees with the extended matrix at path {parent.path + (k,)}"
                        )
                entry = AtlasEntry(child, c, g_rec, parent.path + (k,))
                if atlas.add(entry):
                    fresh.append(entry)
                    if len(atlas) > max_seeds:
                        raise BudgetExceededError(
                            f"exploration exceeded the cap of {max_seeds} seeds"
                        )
            if not fresh:
                atlas.closed = True
                break
            atlas.layer_sizes.append(len(fresh))
            frontier = fresh
    finally:
        if pool:
            pool.shutdown()
    return atlas


def replay(origin: Seed, path: tuple[int, ...], check: bool = True) -> Seed:
    """Apply a witness path to the origin seed."""
    s = origin
    for k in path:
        s = mutate_seed(s, k, check=check)
    return s


@dataclass(frozen=True)
class StateEntry:
    state: CertifiedState
    path: tuple[int, ...]


@dataclass
class StateAtlas:
    """Ball of evaluation-certified states: full matrix data per vertex,
    variables replaced by their images at the evaluation points.  Two
    entries are merged only when matrices, G and every image agree; a
    surviving pair with equal matrices is therefore a proof that two
    genuinely different seeds share them."""

    origin_matrix: IntMatrix
    depth_bound: int
    point_count: int
    entries: list[StateEntry] = field(default_factory=list)
    layer_sizes: list[int] = field(default_factory=list)
    closed: bool = False

    def __len__(self) -> int:
        return len(self.entries)


def explore_states(B0: IntMatrix, depth: int, max_states: int = 500_000,
                   points: int = 8) -> StateAtlas:
    """BFS like explore(), but on certified states.  Polynomial work per
    mutation is O(n) field operations, so this survives instances whose
    cluster variables are astronomically large."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    pts = evaluation_points(B0, points)
    atlas = StateAtlas(B0, depth, points)
    origin = origin_state(B0, pts)
    index: dict = {origin.key(): 0}
    atlas.entries.append(StateEntry(origin, ()))
    atlas.layer_sizes.append(1)

    n = B0.rows
    frontier = list(atlas.entries)
    for _ in range(depth):
        fresh = []
        for parent in frontier:
            for k in range(1, n + 1):
                child = mutate_state(parent.state, k, B0, pts)
                if child.key() in index:
                    continue
                entry = StateEntry(child, parent.path + (k,))
                index[child.key()] = len(atlas.entries)
                atlas.entries.append(entry)
                fresh.append(entry)
                if len(atlas) > max_states:
                    raise BudgetExceededError(
                        f"state exploration exceeded the cap of {max_states}")
        if not fresh:
            atlas.closed = True
            break
        atlas.layer_sizes.append(len(fresh))
        frontier = fresh
    return atlas
