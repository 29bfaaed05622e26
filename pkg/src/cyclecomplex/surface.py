"""Closed oriented triangulated surfaces given by triangle-side gluing data.

A surface is a set of triangles with side slots glued in pairs.  Sides are
identified orientation-reversingly with respect to the counterclockwise
boundary orientation of each triangle, so every accepted gluing yields a
closed *oriented* surface.  Side ``s`` of a triangle runs from corner ``s``
to corner ``(s+1) % 3``.

Conventions used throughout the package:

* each edge has a *primary* side slot (the lexicographically smaller of the
  two glued slots); positions and directions along an edge refer to the
  primary side's corner ``s`` -> corner ``s+1`` direction;
* rotating around a vertex with :meth:`CombinatorialSurface.vertex_orbits`
  lists the corners in clockwise order with respect to the surface
  orientation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from .errors import Disconnected, GenusZero, OrientationConflict, UnpairedSide

Slot = Tuple[int, int]          # (triangle, side in 0..2)
WalkStep = Tuple[int, int]      # (edge id, +1 along primary direction / -1 against)


@dataclass(frozen=True)
class CombinatorialSurface:
    """Validated closed oriented connected triangulated surface."""

    num_triangles: int
    gluings: Tuple[Tuple[Slot, Slot], ...]
    # derived, filled by build_surface
    glued_to: Dict[Slot, Slot] = field(compare=False, hash=False, default=None)
    edge_of_slot: Dict[Slot, int] = field(compare=False, hash=False, default=None)
    edge_slots: Tuple[Tuple[Slot, Slot], ...] = field(compare=False, hash=False, default=None)
    vertex_of_corner: Dict[Slot, int] = field(compare=False, hash=False, default=None)
    vertex_orbits: Tuple[Tuple[Slot, ...], ...] = field(compare=False, hash=False, default=None)

    @property
    def num_edges(self) -> int:
        return len(self.edge_slots)

    @property
    def num_vertices(self) -> int:
        return len(self.vertex_orbits)

    @property
    def euler_characteristic(self) -> int:
        return self.num_vertices - self.num_edges + self.num_triangles

    @property
    def genus(self) -> int:
        return (2 - self.euler_characteristic) // 2

    def primary_slot(self, edge: int) -> Slot:
        return self.edge_slots[edge][0]

    def secondary_slot(self, edge: int) -> Slot:
        return self.edge_slots[edge][1]

    def is_primary(self, slot: Slot) -> bool:
        return self.edge_slots[self.edge_of_slot[slot]][0] == slot

    def triangle_sides(self, t: int) -> List[int]:
        """Edge ids of the three sides of triangle ``t``."""
        return [self.edge_of_slot[(t, s)] for s in range(3)]

    def next_corner(self, corner: Slot) -> Slot:
        """Next corner when rotating clockwise around the corner's vertex."""
        t, c = corner
        t2, s2 = self.glued_to[(t, c)]
        return (t2, (s2 + 1) % 3)

    def edge_end_orbit(self, vertex: int) -> List[Slot]:
        """Edge ends around ``vertex`` in clockwise order.

        Each end is reported as the side slot crossed when rotating; the slot
        determines the edge and, via primariness, whether the edge points out
        of the vertex at this end.
        """
        return [corner for corner in self.vertex_orbits[vertex]]


def build_surface(num_triangles: int, gluings: Sequence[Tuple[Slot, Slot]]) -> CombinatorialSurface:
    """Validate gluing data and compute the derived structure.

    Raises :class:`UnpairedSide` if some side slot is not matched exactly
    once, :class:`OrientationConflict` if a side is glued to itself, and
    :class:`Disconnected` if the triangles do not form one surface.
    """
    if num_triangles <= 0:
        raise UnpairedSide("surface needs at least one triangle")
    all_slots = [(t, s) for t in range(num_triangles) for s in range(3)]
    glued: Dict[Slot, Slot] = {}
    for a, b in gluings:
        a = (int(a[0]), int(a[1]))
        b = (int(b[0]), int(b[1]))
        for slot in (a, b):
            if not (0 <= slot[0] < num_triangles and 0 <= slot[1] < 3):
                raise UnpairedSide(f"slot {slot} out of range")
        if a == b:
            raise OrientationConflict(f"side {a} glued to itself")
        if a in glued or b in glued:
            raise UnpairedSide(f"slot {a if a in glued else b} glued twice")
        glued[a] = b
        glued[b] = a
    missing = [s for s in all_slots if s not in glued]
    if missing:
        raise UnpairedSide(f"unglued slots: {missing[:4]}")

    # edges: one per glued pair, primary slot = lexicographic min
    edge_slots: List[Tuple[Slot, Slot]] = []
    edge_of_slot: Dict[Slot, int] = {}
    for slot in all_slots:
        if slot in edge_of_slot:
            continue
        other = glued[slot]
        eid = len(edge_slots)
        pair = (slot, other) if slot < other else (other, slot)
        edge_slots.append(pair)
        edge_of_slot[slot] = eid
        edge_of_slot[other] = eid

    # connectivity over the triangle adjacency graph
    seen = {0}
    stack = [0]
    while stack:
        t = stack.pop()
        for s in range(3):
            t2 = glued[(t, s)][0]
            if t2 not in seen:
                seen.add(t2)
                stack.append(t2)
    if len(seen) != num_triangles:
        raise Disconnected(f"{num_triangles - len(seen)} triangles unreachable")

    # vertex orbits: rotate with next_corner until closed
    vertex_of_corner: Dict[Slot, int] = {}
    orbits: List[Tuple[Slot, ...]] = []
    for start in all_slots:
        if start in vertex_of_corner:
            continue
        orbit = []
        corner = start
        while True:
            orbit.append(corner)
            vertex_of_corner[corner] = len(orbits)
            t, c = corner
            t2, s2 = glued[(t, c)]
            corner = (t2, (s2 + 1) % 3)
            if corner == start:
                break
            if corner in vertex_of_corner:
                raise OrientationConflict("corner rotation did not close up")
        orbits.append(tuple(orbit))

    surf = CombinatorialSurface(
        num_triangles=num_triangles,
        gluings=tuple(sorted((min(a, b), max(a, b)) for a, b in gluings)),
        glued_to=glued,
        edge_of_slot=edge_of_slot,
        edge_slots=tuple(edge_slots),
        vertex_of_corner=vertex_of_corner,
        vertex_orbits=tuple(orbits),
    )
    chi = surf.euler_characteristic
    if chi % 2 != 0 or chi > 2:
        raise OrientationConflict(f"Euler characteristic {chi} impossible for a closed oriented surface")
    return surf


def genus(surface: CombinatorialSurface) -> int:
    return surface.genus


def surface_from_json(data: dict) -> CombinatorialSurface:
    return build_surface(data["triangles"], [((g[0][0], g[0][1]), (g[1][0], g[1][1])) for g in data["gluings"]])


def surface_to_json(surface: CombinatorialSurface) -> dict:
    return {
        "triangles": surface.num_triangles,
        "gluings": [[list(a), list(b)] for a, b in surface.gluings],
    }


# -- standard models ---------------------------------------------------------

def one_vertex_torus() -> CombinatorialSurface:
    """Two triangles glued side-for-side: the standard one-vertex torus."""
    return build_surface(2, [((0, s), (1, s)) for s in range(3)])


def standard_surface(g: int) -> CombinatorialSurface:
    """Fan-triangulated one-vertex ``4g``-gon with word aba'b'cdc'd'...

    ``g == 1`` returns the one-vertex torus.
    """
    if g < 1:
        raise GenusZero("standard_surface needs genus >= 1")
    if g == 1:
        return one_vertex_torus()
    n = 4 * g
    # triangles T_k = (v0, v_{k+1}, v_{k+2}), k = 0..n-3
    # side 0 of T_k: v0 -> v_{k+1}; side 1: v_{k+1} -> v_{k+2}; side 2: v_{k+2} -> v0
    gluings: List[Tuple[Slot, Slot]] = []
    # internal diagonals v0 -> v_j for j = 2..n-2: side 2 of T_{j-2} with side 0 of T_{j-1}
    for j in range(2, n - 1):
        gluings.append(((j - 2, 2), (j - 1, 0)))

    def boundary_slot(i: int) -> Slot:
        # boundary edge E_i runs v_i -> v_{i+1}
        if i == 0:
            return (0, 0)
        if i == n - 1:
            return (n - 3, 2)
        return (i - 1, 1)

    # identification word: blocks a b a^-1 b^-1 per handle
    for h in range(g):
        base = 4 * h
        gluings.append((boundary_slot(base), boundary_slot(base + 2)))
        gluings.append((boundary_slot(base + 1), boundary_slot(base + 3)))
    return build_surface(n - 2, gluings)


# -- homology basis ----------------------------------------------------------

def _spanning_trees(surface: CombinatorialSurface):
    """Primal BFS tree (edges kept) and dual BFS tree (edges crossed)."""
    parent_edge: Dict[int, Tuple[int, int, int]] = {}  # vertex -> (edge, dir to parent, parent)
    tree_edges = set()
    root = 0
    seen_v = {root}
    queue = [root]
    # vertex adjacency through edges: tail/head vertices of each edge
    ends = []
    for eid in range(surface.num_edges):
        t, s = surface.primary_slot(eid)
        tail = surface.vertex_of_corner[(t, s)]
        head = surface.vertex_of_corner[(t, (s + 1) % 3)]
        ends.append((tail, head))
    while queue:
        v = queue.pop(0)
        for eid in range(surface.num_edges):
            tail, head = ends[eid]
            if eid in tree_edges:
                continue
            for u, w, d in ((tail, head, 1), (head, tail, -1)):
                if u == v and w not in seen_v:
                    seen_v.add(w)
                    tree_edges.add(eid)
                    parent_edge[w] = (eid, -d, v)  # direction w -> v
                    queue.append(w)
                    break
    dual_tree = set()
    seen_t = {0}
    queue = [0]
    while queue:
        t = queue.pop(0)
        for s in range(3):
            eid = surface.edge_of_slot[(t, s)]
            if eid in tree_edges:
                continue
            t2 = surface.glued_to[(t, s)][0]
            if t2 not in seen_t:
                seen_t.add(t2)
                dual_tree.add(eid)
                queue.append(t2)
    return tree_edges, parent_edge, dual_tree, ends


def _path_to_root(parent_edge, vertex: int) -> List[WalkStep]:
    steps: List[WalkStep] = []
    while vertex in parent_edge:
        eid, d, parent = parent_edge[vertex]
        steps.append((eid, d))
        vertex = parent
    return steps


def _reduce_walk(steps: List[WalkStep]) -> List[WalkStep]:
    """Cancel adjacent back-and-forth traversals (cyclically)."""
    changed = True
    steps = list(steps)
    while changed and steps:
        changed = False
        out: List[WalkStep] = []
        i = 0
        while i < len(steps):
            if out and out[-1][0] == steps[i][0] and out[-1][1] == -steps[i][1]:
                out.pop()
                changed = True
                i += 1
            else:
                out.append(steps[i])
                i += 1
        while len(out) >= 2 and out[0][0] == out[-1][0] and out[0][1] == -out[-1][1]:
            out = out[1:-1]
            changed = True
        steps = out
    return steps


def fundamental_cycles(surface: CombinatorialSurface, rooted: bool = False) -> List[List[WalkStep]]:
    """2g edge-cycles generating first homology (tree-cotree).

    With ``rooted=False`` each cycle is reduced to a simple cycle (non-tree
    edge plus the tree path between its endpoints); with ``rooted=True`` all
    cycles are closed walks based at the tree root, so they can be
    concatenated.
    """
    tree_edges, parent_edge, dual_tree, ends = _spanning_trees(surface)
    cycles = []
    for eid in range(surface.num_edges):
        if eid in tree_edges or eid in dual_tree:
            continue
        tail, head = ends[eid]
        up_head = _path_to_root(parent_edge, head)
        up_tail = _path_to_root(parent_edge, tail)
        # root -> tail, tail --eid--> head, head -> root
        walk = [(e, -d) for e, d in reversed(up_tail)] + [(eid, 1)] + up_head
        cycles.append(walk if rooted else _reduce_walk(walk))
    return cycles


def _end_sign(surface: CombinatorialSurface, slot: Slot) -> int:
    """+1 if the edge points out of the vertex at this end (primary tail)."""
    return 1 if surface.is_primary(slot) else -1


def _walk_vertices(surface: CombinatorialSurface, walk: List[WalkStep]):
    """For each walk vertex: (incoming end slot, outgoing end slot).

    The end of an edge at a vertex is named by the side slot whose tail
    corner sits at that vertex: the primary slot for the tail end, the
    secondary slot for the head end.
    """
    items = []
    n = len(walk)
    for i in range(n):
        e_in, d_in = walk[i]
        e_out, d_out = walk[(i + 1) % n]
        prim_in, sec_in = surface.edge_slots[e_in]
        prim_out, sec_out = surface.edge_slots[e_out]
        # incoming arrives at its head end if d=+1 (head end slot = secondary)
        in_end = sec_in if d_in == 1 else prim_in
        out_end = prim_out if d_out == 1 else sec_out
        items.append((in_end, out_end))
    return items


def pushoff_crossings(surface: CombinatorialSurface, walk: List[WalkStep]) -> Dict[int, int]:
    """Signed edge crossings of the left push-off of a simple edge-cycle.

    At every walk vertex the push-off sweeps clockwise from the incoming end
    to the outgoing end, crossing each edge end strictly in between; a
    crossing counts +1 when the edge points out of the vertex there.
    """
    counts: Dict[int, int] = {}
    for in_end, out_end in _walk_vertices(surface, walk):
        vertex = surface.vertex_of_corner[(in_end[0], in_end[1])]
        orbit = surface.edge_end_orbit(vertex)
        i = orbit.index(in_end)
        j = orbit.index(out_end)
        k = (i + 1) % len(orbit)
        while k != j:
            slot = orbit[k]
            eid = surface.edge_of_slot[slot]
            counts[eid] = counts.get(eid, 0) + _end_sign(surface, slot)
            k = (k + 1) % len(orbit)
    return {e: c for e, c in counts.items() if c != 0}


def _net_traversals(walk: List[WalkStep]) -> Dict[int, int]:
    net: Dict[int, int] = {}
    for e, d in walk:
        net[e] = net.get(e, 0) + d
    return {e: c for e, c in net.items() if c != 0}


def walk_intersection(surface: CombinatorialSurface, a: List[WalkStep], b: List[WalkStep]) -> int:
    """Algebraic intersection number of two simple edge-cycles."""
    push = pushoff_crossings(surface, a)
    net = _net_traversals(b)
    return sum(c * net.get(e, 0) for e, c in push.items())


class NegativeGenusError(RuntimeError):
    """Internal consistency failure in exact linear algebra."""


def _symplectic_transform(a: List[List[int]]) -> List[List[int]]:
    """Integer P with P^T A P the standard symplectic matrix (blocks [[0,1],[-1,0]]).

    A must be skew-symmetric and unimodular; this is satisfied by the
    intersection form on a basis of first homology.
    """
    n = len(a)
    a = [row[:] for row in a]
    p = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def add_col(dst, src, factor):
        # column op: v_dst += factor * v_src  (applied to A by congruence)
        for i in range(n):
            a[i][dst] += factor * a[i][src]
        for j in range(n):
            a[dst][j] += factor * a[src][j]
        for i in range(n):
            p[i][dst] += factor * p[i][src]

    def swap_cols(i, j):
        for r in range(n):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        a[i], a[j] = a[j], a[i]
        for r in range(n):
            p[r][i], p[r][j] = p[r][j], p[r][i]

    def negate_col(i):
        for r in range(n):
            a[r][i] = -a[r][i]
        for c in range(n):
            a[i][c] = -a[i][c]
        for r in range(n):
            p[r][i] = -p[r][i]

    done = 0
    while done < n:
        # find the minimal nonzero |A[i][j]| in the remaining block
        best = None
        for i in range(done, n):
            for j in range(i + 1, n):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            raise NegativeGenusError("intersection form degenerate")
        i0, j0 = best
        pivot = a[i0][j0]
        reduced = False
        if abs(pivot) > 1:
            for k in range(done, n):
                if k in (i0, j0):
                    continue
                if a[i0][k] % pivot != 0:
                    add_col(k, j0, -(a[i0][k] // pivot))
                    reduced = True
                    break
                if a[j0][k] % pivot != 0:
                    add_col(k, i0, a[j0][k] // pivot)
                    reduced = True
                    break
            if not reduced:
                # divide through is impossible for unimodular forms
                raise NegativeGenusError("intersection form not unimodular")
            continue
        # move the hyperbolic pair to the front
        pos_i, pos_j = i0, j0
        if pos_i != done:
            swap_cols(done, pos_i)
            if pos_j == done:
                pos_j = pos_i
        if pos_j != done + 1:
            swap_cols(done + 1, pos_j)
        if a[done][done + 1] < 0:
            negate_col(done + 1)
        # clear the rest of the two pivot rows
        for k in range(done + 2, n):
            if a[done][k] != 0:
                add_col(k, done + 1, -a[done][k])
            if a[done + 1][k] != 0:
                add_col(k, done, a[done + 1][k])
        done += 2
    return p


def homology_basis(surface: CombinatorialSurface) -> List[List[WalkStep]]:
    """2g oriented edge-cycles whose intersection matrix is standard symplectic.

    Deterministic for a given surface.  The first two cycles form the first
    hyperbolic pair, and so on.  Raises :class:`GenusZero` on the sphere.
    """
    if surface.genus == 0:
        raise GenusZero("sphere has no homology basis")
    cycles = fundamental_cycles(surface)
    n = len(cycles)
    a = [[walk_intersection(surface, cycles[i], cycles[j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        if a[i][i] != 0:
            raise NegativeGenusError("self-intersection nonzero")
        for j in range(n):
            if a[i][j] != -a[j][i]:
                raise NegativeGenusError("intersection form not skew")
    p = _symplectic_transform(a)
    rooted = fundamental_cycles(surface, rooted=True)
    basis: List[List[WalkStep]] = []
    for j in range(n):
        walk: List[WalkStep] = []
        for i in range(n):
            coeff = p[i][j]
            if coeff == 0:
                continue
            piece = rooted[i] if coeff > 0 else [(e, -d) for e, d in reversed(rooted[i])]
            for _ in range(abs(coeff)):
                walk.extend(piece)
        basis.append(_reduce_walk(walk))
    return basis


def standard_symplectic_matrix(g: int) -> List[List[int]]:
    n = 2 * g
    j = [[0] * n for _ in range(n)]
    for m in range(g):
        j[2 * m][2 * m + 1] = 1
        j[2 * m + 1][2 * m] = -1
    return j
