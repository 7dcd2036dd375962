"""Edge-coloured flag graphs.

A rank-n flag graph carries n perfect matchings r_0, ..., r_{n-1} on a
common set of flags, one matching per colour.  Matchings of colours i and
j commute whenever |i - j| >= 2, which makes every (i, j) 2-factor a
disjoint union of 4-cycles.  Maps, maniplexes and the flag structures of
abstract polytopes all live in this representation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Violation:
    """One failed structural invariant, with a witness flag."""

    kind: str
    colours: tuple[int, ...]
    flag: int

    def __str__(self) -> str:
        if len(self.colours) == 2:
            return f"{self.kind} ({self.colours[0]},{self.colours[1]}), flag {self.flag}"
        if len(self.colours) == 1:
            return f"{self.kind}, colour {self.colours[0]}, flag {self.flag}"
        return f"{self.kind}, flag {self.flag}"


class FlagGraph:
    """Immutable edge-coloured graph given by per-colour flag permutations.

    ``adj[i][f]`` is the flag joined to ``f`` by the edge of colour ``i``.
    Construction only enforces shape (tables rectangular, images in
    range); the semantic invariants are checked by :func:`validate`.
    """

    __slots__ = ("rank", "flag_count", "adj", "_bfs0")

    def __init__(self, adj) -> None:
        tables = np.array(adj, dtype=np.int32)
        if tables.ndim != 2:
            raise ValueError("adjacency must be a rank x flag_count table")
        rank, count = tables.shape
        if rank < 1:
            raise ValueError("at least one colour is required")
        if count < 2:
            raise ValueError("at least two flags are required")
        if tables.min() < 0 or tables.max() >= count:
            raise ValueError("flag image out of range")
        tables.setflags(write=False)
        self.rank = rank
        self.flag_count = count
        self.adj = tables
        self._bfs0 = None

    def __eq__(self, other) -> bool:
        if not isinstance(other, FlagGraph):
            return NotImplemented
        return self.rank == other.rank and np.array_equal(self.adj, other.adj)

    __hash__ = None

    def __repr__(self) -> str:
        return f"FlagGraph(rank={self.rank}, flags={self.flag_count})"

    def act(self, flag: int, word) -> int:
        """Apply a word of colours to a flag, leftmost colour first."""
        for c in word:
            flag = int(self.adj[c, flag])
        return flag

    def bfs_levels(self, source: int = 0):
        """Breadth-first tree from ``source`` as per-level arrays.

        Each level is a triple ``(flags, parents, colours)`` meaning flag
        ``flags[t]`` was first reached from ``parents[t]`` along colour
        ``colours[t]``.  The tree from flag 0 is cached.
        """
        if source == 0 and self._bfs0 is not None:
            return self._bfs0
        seen = np.zeros(self.flag_count, dtype=bool)
        seen[source] = True
        frontier = np.array([source], dtype=np.int32)
        all_colours = np.arange(self.rank, dtype=np.int32)
        levels = []
        while frontier.size:
            cand_f = self.adj[:, frontier].reshape(-1)
            cand_p = np.tile(frontier, self.rank)
            cand_c = np.repeat(all_colours, frontier.size)
            fresh = ~seen[cand_f]
            cand_f, cand_p, cand_c = cand_f[fresh], cand_p[fresh], cand_c[fresh]
            if cand_f.size == 0:
                break
            uniq, first = np.unique(cand_f, return_index=True)
            levels.append((uniq, cand_p[first], cand_c[first]))
            seen[uniq] = True
            frontier = uniq
        if source == 0:
            self._bfs0 = levels
        return levels

    def is_connected(self) -> bool:
        reached = 1 + sum(level[0].size for level in self.bfs_levels(0))
        return reached == self.flag_count


def validate(g: FlagGraph) -> list[Violation]:
    """Check all maniplex invariants; return one violation per failure.

    The report is total: every violated invariant appears, each with its
    least witness flag.  An empty report means ``g`` is a maniplex flag
    graph.
    """
    out: list[Violation] = []
    ident = np.arange(g.flag_count, dtype=np.int32)
    for i in range(g.rank):
        t = g.adj[i]
        fixed = np.nonzero(t == ident)[0]
        if fixed.size:
            out.append(Violation("fixed point", (i,), int(fixed[0])))
        broken = np.nonzero(t[t] != ident)[0]
        if broken.size:
            out.append(Violation("not an involution", (i,), int(broken[0])))
    for i in range(g.rank):
        for j in range(i + 1, g.rank):
            clash = np.nonzero(g.adj[i] == g.adj[j])[0]
            if clash.size:
                out.append(Violation("overlapping matchings", (i, j), int(clash[0])))
    if not g.is_connected():
        reached = np.zeros(g.flag_count, dtype=bool)
        reached[0] = True
        for flags, _, _ in g.bfs_levels(0):
            reached[flags] = True
        out.append(Violation("disconnected", (), int(np.nonzero(~reached)[0][0])))
    for i in range(g.rank):
        for j in range(i + 2, g.rank):
            bad = np.nonzero(g.adj[i][g.adj[j]] != g.adj[j][g.adj[i]])[0]
            if bad.size:
                out.append(Violation("commuting condition", (i, j), int(bad[0])))
    return out


@dataclass(frozen=True)
class FacePartition:
    """Partition of flags into i-faces (components avoiding one colour)."""

    colour_removed: int
    face_of: np.ndarray
    face_count: int

    def flags_of(self, face: int) -> np.ndarray:
        return np.nonzero(self.face_of == face)[0].astype(np.int32)


def i_faces(g: FlagGraph, i: int) -> FacePartition:
    """Faces of rank ``i``: connected components after deleting colour i.

    Face ids run 0..face_count-1 in order of least flag index.
    """
    if not 0 <= i < g.rank:
        raise ValueError(f"colour {i} out of range for rank {g.rank}")
    colours = [c for c in range(g.rank) if c != i]
    face_of = np.full(g.flag_count, -1, dtype=np.int32)
    count = 0
    for start in range(g.flag_count):
        if face_of[start] >= 0:
            continue
        face_of[start] = count
        stack = [start]
        while stack:
            f = stack.pop()
            for c in colours:
                nxt = int(g.adj[c, f])
                if face_of[nxt] < 0:
                    face_of[nxt] = count
                    stack.append(nxt)
        count += 1
    face_of.setflags(write=False)
    return FacePartition(colour_removed=i, face_of=face_of, face_count=count)


def face_component(g: FlagGraph, i: int, face: int) -> np.ndarray:
    """Flags of one component of the given i-face under colours < i.

    The component containing the least flag of the face is returned, as a
    sorted array of flag ids of ``g``.
    """
    if i < 1:
        raise ValueError("faces of rank 0 have no sub-structure")
    part = i_faces(g, i)
    if not 0 <= face < part.face_count:
        raise ValueError(f"face id {face} out of range")
    members = part.flags_of(face)
    seed = int(members[0])
    in_comp = {seed}
    stack = [seed]
    while stack:
        f = stack.pop()
        for c in range(i):
            nxt = int(g.adj[c, f])
            if nxt not in in_comp:
                in_comp.add(nxt)
                stack.append(nxt)
    return np.array(sorted(in_comp), dtype=np.int32)


def face_maniplex(g: FlagGraph, i: int, face: int) -> FlagGraph:
    """The rank-i flag graph sitting inside an i-face.

    Keeps colours 0..i-1 on one component of the face, re-indexing flags
    densely in increasing order of their original ids.
    """
    comp = face_component(g, i, face)
    local = {int(f): t for t, f in enumerate(comp)}
    sub = np.empty((i, comp.size), dtype=np.int32)
    for c in range(i):
        for t, f in enumerate(comp):
            sub[c, t] = local[int(g.adj[c, f])]
    return FlagGraph(sub)


def recolour_dual(g: FlagGraph) -> FlagGraph:
    """Reverse the colour order (i -> rank-1-i)."""
    return FlagGraph(g.adj[::-1])
