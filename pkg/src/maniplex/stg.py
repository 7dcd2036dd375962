"""Symmetry type graphs: quotients of flag graphs by automorphism orbits.

The quotient is a connected pregraph with one slot per colour at each
vertex; a slot is either an edge to another vertex or a semi-edge
(within-orbit adjacency).  For colours i, j with |i - j| >= 2 every
component of the (i, j) 2-factor must be one of the five quotients of an
alternating 4-cycle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .flag_graph import FlagGraph, face_component, face_maniplex, i_faces
from .symmetry import AutGroup, aut_group

SEMI = -1


@dataclass(frozen=True)
class SymmetryTypeGraph:
    """Coloured pregraph: ``slots[u][i]`` is a vertex or SEMI."""

    rank: int
    vertex_count: int
    slots: tuple[tuple[int, ...], ...]

    def neighbour(self, u: int, i: int) -> int:
        """Vertex reached from u along colour i (u itself on a semi-edge)."""
        s = self.slots[u][i]
        return u if s == SEMI else s

    def semi_colours(self, u: int) -> frozenset[int]:
        return frozenset(i for i in range(self.rank) if self.slots[u][i] == SEMI)

    def edges(self) -> list[tuple[int, int, int]]:
        """Inter-vertex edges as (u, v, colour) with u < v."""
        out = []
        for u in range(self.vertex_count):
            for i, s in enumerate(self.slots[u]):
                if s != SEMI and u < s:
                    out.append((u, s, i))
        return out

    def has_semi_edges(self) -> bool:
        return any(SEMI in row for row in self.slots)


def _component(t: SymmetryTypeGraph, start: int, colours) -> list[int]:
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for i in colours:
            v = t.neighbour(u, i)
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return sorted(seen)


def _two_factor_violations(t: SymmetryTypeGraph) -> list[tuple[int, int, tuple[int, ...]]]:
    """(i, j, component) triples breaking the five-quotient condition."""
    bad = []
    for i in range(t.rank):
        for j in range(i + 2, t.rank):
            left = set(range(t.vertex_count))
            while left:
                comp = _component(t, min(left), (i, j))
                left -= set(comp)
                if not _component_ok(t, comp, i, j):
                    bad.append((i, j, tuple(comp)))
    return bad


def _component_ok(t: SymmetryTypeGraph, comp: list[int], i: int, j: int) -> bool:
    if len(comp) == 1:
        u = comp[0]
        return t.slots[u][i] == SEMI and t.slots[u][j] == SEMI
    if len(comp) == 2:
        u, v = comp
        si, sj = t.slots[u][i], t.slots[u][j]
        if si == v and sj == v:
            return True
        if si == v and sj == SEMI and t.slots[v][j] == SEMI:
            return True
        if sj == v and si == SEMI and t.slots[v][i] == SEMI:
            return True
        return False
    if len(comp) == 4:
        # alternating 4-cycle: every slot of both colours is an edge
        return all(t.slots[u][c] != SEMI for u in comp for c in (i, j))
    return False


def stg_violations(t: SymmetryTypeGraph) -> list[str]:
    """All structural defects: shape, symmetry, connectivity, 2-factors."""
    out = []
    for u, row in enumerate(t.slots):
        if len(row) != t.rank:
            out.append(f"vertex {u} has {len(row)} slots, expected {t.rank}")
            return out
        for i, s in enumerate(row):
            if s == u:
                out.append(f"loop at vertex {u}, colour {i}")
            elif s != SEMI and not (0 <= s < t.vertex_count):
                out.append(f"slot ({u}, {i}) out of range")
            elif s != SEMI and t.slots[s][i] != u:
                out.append(f"asymmetric edge ({u}, {s}) colour {i}")
    if out:
        return out
    if len(_component(t, 0, range(t.rank))) != t.vertex_count:
        out.append("disconnected")
    for i, j, comp in _two_factor_violations(t):
        out.append(f"bad ({i},{j}) 2-factor component {comp}")
    return out


def is_admissible(t: SymmetryTypeGraph) -> bool:
    return not stg_violations(t)


def quotient(g: FlagGraph, a: AutGroup) -> SymmetryTypeGraph:
    """Symmetry type graph: one vertex per flag orbit.

    Within-orbit adjacency becomes a semi-edge; the slot table is well
    defined because orbits map to orbits under every colour action.
    """
    reps = a.orbit_representatives()
    rows = []
    for u, rep in enumerate(reps):
        row = []
        for i in range(g.rank):
            o = int(a.orbit_of[g.adj[i, rep]])
            row.append(SEMI if o == u else o)
        rows.append(tuple(row))
    t = SymmetryTypeGraph(rank=g.rank, vertex_count=a.orbit_count, slots=tuple(rows))
    problems = stg_violations(t)
    if problems:
        raise AssertionError(f"quotient broke pregraph invariants: {problems}")
    return t


def is_i_face_transitive(t: SymmetryTypeGraph, i: int) -> bool:
    """True when deleting colour-i edges leaves the pregraph connected."""
    if not 0 <= i < t.rank:
        raise ValueError(f"colour {i} out of range for rank {t.rank}")
    colours = [c for c in range(t.rank) if c != i]
    return len(_component(t, 0, colours)) == t.vertex_count


def transitivity_profile(t: SymmetryTypeGraph) -> frozenset[int]:
    """Colours i for which the structure is NOT i-face-transitive."""
    return frozenset(i for i in range(t.rank) if not is_i_face_transitive(t, i))


def face_orbit_splits(t: SymmetryTypeGraph, i: int) -> tuple[int, ...]:
    """Sorted component sizes of the pregraph with colour i deleted."""
    colours = [c for c in range(t.rank) if c != i]
    left = set(range(t.vertex_count))
    sizes = []
    while left:
        comp = _component(t, min(left), colours)
        left -= set(comp)
        sizes.append(len(comp))
    return tuple(sorted(sizes))


@dataclass(frozen=True)
class Regular:
    def label(self) -> str:
        return "regular"


@dataclass(frozen=True)
class TwoOrbit:
    semi_colours: frozenset[int]

    def label(self) -> str:
        if not self.semi_colours:
            return "2_∅"
        return "2_{" + ",".join(str(c) for c in sorted(self.semi_colours)) + "}"


@dataclass(frozen=True)
class ThreeOrbitJ:
    j: int

    def label(self) -> str:
        return f"3^{{{self.j}}}"


@dataclass(frozen=True)
class ThreeOrbitJJ1:
    j: int

    def label(self) -> str:
        return f"3^{{{self.j},{self.j + 1}}}"


@dataclass(frozen=True)
class FourOrbitFamily:
    """Four-vertex types, described by how each colour splits the graph.

    ``splits`` records, for every colour i in the non-transitivity
    profile, the component sizes after deleting colour i (one of (1,1,2),
    (1,3), (2,2)).  ``semi_colours`` lists colours owning a semi-edge
    somewhere.  Families are unnamed in the 2- and 3-orbit tradition, so
    this triple is the stable machine-readable label.
    """

    profile: frozenset[int]
    splits: tuple[tuple[int, tuple[int, ...]], ...]
    semi_colours: frozenset[int]

    def label(self) -> str:
        if not self.profile:
            return "4(fully-transitive)"
        parts = ", ".join(f"T^{i}={'+'.join(map(str, sizes))}" for i, sizes in self.splits)
        return f"4({parts})"


@dataclass(frozen=True)
class OtherClass:
    vertex_count: int

    def label(self) -> str:
        return f"{self.vertex_count}-orbit"


STGClass = Regular | TwoOrbit | ThreeOrbitJ | ThreeOrbitJJ1 | FourOrbitFamily | OtherClass


def classify(t: SymmetryTypeGraph) -> STGClass:
    """Name the type: by vertex count and edge pattern.

    Two-vertex types are determined by their semi-edge colour set; the
    three-vertex types by whether the middle vertex carries one or two
    edge colours; four-vertex types get the descriptive family record.
    """
    problems = stg_violations(t)
    if problems:
        raise ValueError(f"not an admissible symmetry type graph: {problems}")
    k = t.vertex_count
    if k == 1:
        return Regular()
    if k == 2:
        return TwoOrbit(t.semi_colours(0))
    if k == 3:
        edges = t.edges()
        if len(edges) == 2:
            (u1, v1, c1), (u2, v2, c2) = edges
            shared = {u1, v1} & {u2, v2}
            if len(shared) == 1 and abs(c1 - c2) == 1:
                return ThreeOrbitJJ1(min(c1, c2))
        elif len(edges) == 3:
            pairs: dict[tuple[int, int], list[int]] = {}
            for u, v, c in edges:
                pairs.setdefault((u, v), []).append(c)
            by_size = sorted(pairs.items(), key=lambda kv: len(kv[1]))
            if len(by_size) == 2 and len(by_size[0][1]) == 1 and len(by_size[1][1]) == 2:
                (single_pair, (j,)), (double_pair, doubles) = by_size
                if sorted(doubles) == [j - 1, j + 1] and len(set(single_pair) & set(double_pair)) == 1:
                    return ThreeOrbitJ(j)
        return OtherClass(3)
    if k == 4:
        profile = transitivity_profile(t)
        splits = tuple((i, face_orbit_splits(t, i)) for i in sorted(profile))
        semis = frozenset(i for i in range(t.rank) if any(t.slots[u][i] == SEMI for u in range(k)))
        return FourOrbitFamily(profile=profile, splits=splits, semi_colours=semis)
    return OtherClass(k)


def verify_face_projection(g: FlagGraph, i: int, face: int, aut: AutGroup | None = None,
                           stg: SymmetryTypeGraph | None = None) -> bool:
    """Check the face-quotient projection property for one i-face.

    The orbits meeting the face form one component C of the colour-i
    deleted quotient.  Mapping each such orbit to the orbit of its
    induced flag in the face's rank-i structure must be well defined,
    surjective, carry j-edges (j < i) to the j-action downstairs, and
    collapse j-edges with j > i.
    """
    if aut is None:
        aut = aut_group(g)
    if stg is None:
        stg = quotient(g, aut)
    part = i_faces(g, i)
    face_flags = part.flags_of(face)
    comp = face_component(g, i, face)
    local = {int(f): t for t, f in enumerate(comp)}
    sub = face_maniplex(g, i, face)
    sub_aut = aut_group(sub)

    # induced flag: walk colours > i inside the face until hitting the
    # component used to build the sub-structure
    high = list(range(i + 1, g.rank))

    def induced(flag: int) -> int:
        seen = {flag}
        queue = [flag]
        while queue:
            f = queue.pop()
            if f in local:
                return local[f]
            for c in high:
                nxt = int(g.adj[c, f])
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        raise AssertionError("face component unreachable through high colours")

    pi: dict[int, int] = {}
    for f in face_flags:
        u = int(aut.orbit_of[f])
        image = int(sub_aut.orbit_of[induced(int(f))])
        if pi.setdefault(u, image) != image:
            return False

    component_vertices = set(pi)
    if set(_component(stg, min(component_vertices), [c for c in range(g.rank) if c != i])) != component_vertices:
        return False
    if set(pi.values()) != set(range(sub_aut.orbit_count)):
        return False

    sub_stg = quotient(sub, sub_aut)
    for u in component_vertices:
        for j in range(g.rank):
            if j == i:
                continue
            v = stg.neighbour(u, j)
            if j < i:
                if sub_stg.neighbour(pi[u], j) != pi[v]:
                    return False
            else:
                if pi[v] != pi[u]:
                    return False
    return True
