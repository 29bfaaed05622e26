"""Oriented multicurves in normal position on a triangulated surface.

A multicurve is encoded by one non-negative integer weight per edge (normal
coordinates).  Inside a triangle with side weights ``x, y, z`` the strands
resolve into corner arcs; tracing the arcs across edge gluings partitions
the strands into closed components.  Parallel components sharing the same
arc path are grouped with a multiplicity and one orientation sign per copy.

Orientation conventions: the normal of an oriented curve is its tangent
rotated +90 degrees with respect to the surface orientation, and a strand
crossing an edge from the primary-slot triangle into the secondary-slot
triangle counts +1 against a walk traversing the edge in its primary
direction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import EmptyCurve, ParityViolation, SchemaError, TriangleInequalityViolation
from .surface import CombinatorialSurface, Slot, WalkStep, homology_basis, standard_symplectic_matrix

Point = Tuple[int, int]  # (edge id, position along primary direction, 0-based)


def corner_counts(surface: CombinatorialSurface, weights: Sequence[int]) -> List[Tuple[int, int, int]]:
    """Per-triangle corner arc counts; validates parity and triangle inequality."""
    if len(weights) != surface.num_edges:
        raise SchemaError(f"expected {surface.num_edges} weights, got {len(weights)}")
    if any(w < 0 or int(w) != w for w in weights):
        raise TriangleInequalityViolation("weights must be non-negative integers")
    counts = []
    for t in range(surface.num_triangles):
        x = [weights[surface.edge_of_slot[(t, s)]] for s in range(3)]
        if sum(x) % 2 != 0:
            raise ParityViolation(f"triangle {t} has odd side weight sum {x}")
        n = [(x[(c - 1) % 3] + x[c] - x[(c + 1) % 3]) // 2 for c in range(3)]
        if any(v < 0 for v in n):
            raise TriangleInequalityViolation(f"triangle {t} violates the triangle inequality: {x}")
        counts.append(tuple(n))
    return counts


def _side_pos(surface: CombinatorialSurface, slot: Slot, edge_pos: int, weight: int) -> int:
    return edge_pos if surface.is_primary(slot) else weight - 1 - edge_pos


def _edge_pos(surface: CombinatorialSurface, slot: Slot, side_pos: int, weight: int) -> int:
    return side_pos if surface.is_primary(slot) else weight - 1 - side_pos


@dataclass(frozen=True)
class TracedCopy:
    """One traced component in its canonical traversal direction."""

    index: int
    points: Tuple[Point, ...]          # edge crossings in traversal order
    entries: Tuple[Slot, ...]          # slot entered after crossing points[i]
    arcs: Tuple[Tuple[int, int], ...]  # (triangle, corner) of the arc after points[i]
    orientation: int                   # +1: canonical direction, -1: reversed

    @property
    def signature(self) -> Tuple[Tuple[int, int], ...]:
        return _min_rotation(self.arcs)


def _min_rotation(seq: Tuple) -> Tuple:
    n = len(seq)
    if n == 0:
        return seq
    doubled = seq + seq
    best = None
    for i in range(n):
        cand = doubled[i:i + n]
        if best is None or cand < best:
            best = cand
    return tuple(best)


def _trace_components(surface: CombinatorialSurface, weights: Sequence[int], counts) -> List[dict]:
    """Trace all strands into components (canonical direction, no orientation)."""
    visited = set()
    components = []
    all_points = [(e, p) for e in range(surface.num_edges) for p in range(weights[e])]
    for start in all_points:
        if start in visited:
            continue
        # canonical direction: first step enters the primary triangle
        e0, p0 = start
        slot = surface.primary_slot(e0)
        points: List[Point] = []
        entries: List[Slot] = []
        arcs: List[Tuple[int, int]] = []
        point, entered = start, slot
        while True:
            points.append(point)
            entries.append(entered)
            visited.add(point)
            t, s = entered
            w = weights[point[0]]
            spos = _side_pos(surface, entered, point[1], w)
            x = [weights[surface.edge_of_slot[(t, side)]] for side in range(3)]
            n = counts[t]
            if spos < n[s]:
                corner = s
                k = spos
                exit_side = (s - 1) % 3
                exit_spos = x[exit_side] - 1 - k
            else:
                corner = (s + 1) % 3
                k = x[s] - 1 - spos
                exit_side = (s + 1) % 3
                exit_spos = k
            arcs.append((t, corner))
            exit_slot = (t, exit_side)
            eid = surface.edge_of_slot[exit_slot]
            epos = _edge_pos(surface, exit_slot, exit_spos, weights[eid])
            point = (eid, epos)
            entered = surface.glued_to[exit_slot]
            if point == start and entered == slot:
                break
            if point in visited and point == start:
                # returned to start in the opposite direction: impossible for
                # embedded strand structure
                raise TriangleInequalityViolation("tracing failed to close up")
        components.append({"points": tuple(points), "entries": tuple(entries), "arcs": tuple(arcs)})
    components.sort(key=lambda c: min(c["points"]))
    return components


@dataclass(frozen=True)
class OrientedMulticurve:
    """Validated oriented normal multicurve."""

    surface: CombinatorialSurface
    weights: Tuple[int, ...]
    copies: Tuple[TracedCopy, ...]

    @property
    def num_components(self) -> int:
        return len(self.copies)

    def groups(self) -> Dict[Tuple, List[int]]:
        """Parallel classes: signature -> copy indices."""
        out: Dict[Tuple, List[int]] = {}
        for copy in self.copies:
            out.setdefault(copy.signature, []).append(copy.index)
        return out

    def canonical_key(self) -> Tuple:
        """Equal keys iff the oriented multicurves are isotopic.

        Built from the edge weights plus, per parallel class, the
        multiplicity and the multiset of orientations.
        """
        groups = []
        for sig, ids in sorted(self.groups().items()):
            orient = sorted(self.copies[i].orientation for i in ids)
            groups.append((sig, tuple(orient)))
        return (self.weights, tuple(groups))

    def reversed(self) -> "OrientedMulticurve":
        return validate_and_trace(
            self.surface, self.weights, [-c.orientation for c in self.copies]
        )

    def oriented_passages(self, index: int) -> List[Tuple[Point, Slot]]:
        """(point, entered slot) pairs along the copy's oriented traversal."""
        copy = self.copies[index]
        pairs = list(zip(copy.points, copy.entries))
        if copy.orientation == 1:
            return pairs
        out = []
        for point, slot in reversed(pairs):
            a, b = self.surface.edge_slots[point[0]]
            out.append((point, b if slot == a else a))
        return out

    def edge_flux(self) -> Dict[int, int]:
        """Net signed crossings per edge (+1 per primary-to-secondary pass)."""
        flux: Dict[int, int] = {}
        for copy in self.copies:
            for (e, _pos), slot in zip(copy.points, copy.entries):
                sign = -1 if self.surface.is_primary(slot) else 1
                flux[e] = flux.get(e, 0) + sign * copy.orientation
        return flux

    def copy_edge_counts(self, index: int) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for e, _pos in self.copies[index].points:
            counts[e] = counts.get(e, 0) + 1
        return counts


def validate_and_trace(
    surface: CombinatorialSurface,
    weights: Sequence[int],
    orientations: Sequence[int],
) -> OrientedMulticurve:
    """Trace the normal coordinates into an oriented multicurve.

    ``orientations`` lists one sign per traced component, in the traced
    component order (components sorted by their minimal edge crossing).
    """
    counts = corner_counts(surface, weights)
    if all(w == 0 for w in weights):
        raise EmptyCurve("a cycle is a nonempty collection of curves")
    comps = _trace_components(surface, weights, counts)
    if len(orientations) != len(comps):
        raise SchemaError(f"expected {len(comps)} orientations, got {len(orientations)}")
    if any(o not in (1, -1) for o in orientations):
        raise SchemaError("orientations must be +1 or -1")
    copies = tuple(
        TracedCopy(index=i, points=c["points"], entries=c["entries"], arcs=c["arcs"], orientation=o)
        for i, (c, o) in enumerate(zip(comps, orientations))
    )
    return OrientedMulticurve(surface=surface, weights=tuple(int(w) for w in weights), copies=copies)


def trace_component_count(surface: CombinatorialSurface, weights: Sequence[int]) -> int:
    counts = corner_counts(surface, weights)
    if all(w == 0 for w in weights):
        return 0
    return len(_trace_components(surface, weights, counts))


def homology_class(curve: OrientedMulticurve) -> Tuple[int, ...]:
    """Coordinates of the curve in the symplectic homology basis."""
    surface = curve.surface
    basis = _basis_cached(surface)
    flux = curve.edge_flux()
    v = [sum(d * flux.get(e, 0) for e, d in walk) for walk in basis]
    j = standard_symplectic_matrix(surface.genus)
    # [curve] = sum x_a basis_a  with  v = J^T x, so x = J v
    n = len(v)
    return tuple(sum(j[a][b] * v[b] for b in range(n)) for a in range(n))


def walk_class(surface: CombinatorialSurface, walk: List[WalkStep]) -> Tuple[int, ...]:
    """Homology coordinates of an edge walk, for cross-checks."""
    from .surface import walk_intersection

    basis = _basis_cached(surface)
    v = [walk_intersection(surface, walk, b) for b in basis]
    j = standard_symplectic_matrix(surface.genus)
    n = len(v)
    return tuple(sum(j[a][b] * v[b] for b in range(n)) for a in range(n))


_BASIS_CACHE: dict = {}


def _basis_cached(surface: CombinatorialSurface):
    key = id(surface)
    if key not in _BASIS_CACHE:
        _BASIS_CACHE[key] = homology_basis(surface)
    return _BASIS_CACHE[key]


def vertex_linking_weights(surface: CombinatorialSurface, vertex: int) -> List[int]:
    """Normal coordinates of the small circle around a vertex."""
    weights = [0] * surface.num_edges
    for corner in surface.vertex_orbits[vertex]:
        weights[surface.edge_of_slot[corner]] += 1
    return weights


# -- complementary regions ----------------------------------------------------

@dataclass(frozen=True)
class Region:
    """Complementary region of a multicurve.

    Boundary records are (component index, side) pairs; side +1 means the
    component's normal orientation points into this region.
    """

    index: int
    euler_char: int
    boundary: Tuple[Tuple[int, int], ...]

    @property
    def is_null(self) -> bool:
        sides = {s for _c, s in self.boundary}
        return len(sides) == 1


def _single_system_arrangement(curve: OrientedMulticurve):
    from fractions import Fraction

    from .arrangement import Arrangement, curve_paths_from_multicurve

    paths = curve_paths_from_multicurve(curve, "c", Fraction(0), Fraction(1))
    return Arrangement(curve.surface, paths)


def complementary_regions(curve: OrientedMulticurve) -> List[Region]:
    """Cut the surface along the multicurve and report the pieces with sides."""
    arr = _single_system_arrangement(curve)
    boundary: Dict[int, List[Tuple[int, int]]] = {r: [] for r in range(arr.n_regions)}
    for ci in range(len(arr.curves)):
        copy_index = arr.curves[ci].label[1]
        boundary[arr.region_left_of_curve(ci)].append((copy_index, 1))
        boundary[arr.region_right_of_curve(ci)].append((copy_index, -1))
    regions = [
        Region(index=r, euler_char=arr.region_chi[r], boundary=tuple(sorted(boundary[r])))
        for r in range(arr.n_regions)
    ]
    assert sum(r.euler_char for r in regions) == curve.surface.euler_characteristic
    return regions


def is_reduced(curve: OrientedMulticurve) -> bool:
    """True iff no complementary region is a null cobordism."""
    return not any(r.is_null for r in complementary_regions(curve))


def delete_copies(curve: OrientedMulticurve, doomed: Sequence[int]) -> Optional[OrientedMulticurve]:
    """Remove the listed components; None when nothing remains.

    Surviving copies keep their orientations (matched through parallel-class
    signatures, which are unchanged by deleting whole components).
    """
    doomed = set(doomed)
    new_weights = list(curve.weights)
    for i in doomed:
        for e, n in curve.copy_edge_counts(i).items():
            new_weights[e] -= n
    if all(w == 0 for w in new_weights):
        return None
    assert all(w >= 0 for w in new_weights)
    survivors = [c for c in curve.copies if c.index not in doomed]
    by_sig: Dict[Tuple, List[int]] = {}
    for c in survivors:
        by_sig.setdefault(c.signature, []).append(c.orientation)
    counts = corner_counts(curve.surface, new_weights)
    comps = _trace_components(curve.surface, new_weights, counts)
    orientations = []
    pools = {sig: sorted(v, reverse=True) for sig, v in by_sig.items()}
    for comp in comps:
        sig = _min_rotation(comp["arcs"])
        pool = pools.get(sig)
        assert pool, f"deletion changed the parallel classes: {sig}"
        orientations.append(pool.pop(0))
    assert all(not v for v in pools.values())
    return validate_and_trace(curve.surface, new_weights, orientations)


def reduced_subcycle(curve: OrientedMulticurve) -> Optional[OrientedMulticurve]:
    """Discard subcycles bounding null regions until reduced; None if empty.

    The result is empty exactly when the input is null-homologous; the
    homology class is preserved at every step.
    """
    cur = curve
    while True:
        nulls = [r for r in complementary_regions(cur) if r.is_null]
        if not nulls:
            return cur
        doomed = sorted({c for c, _s in nulls[0].boundary})
        cur = delete_copies(cur, doomed)
        if cur is None:
            return None


# -- minimal position ---------------------------------------------------------

@dataclass(frozen=True)
class CrossingRecord:
    c_copy: int
    sign: int


@dataclass
class MinimalOverlay:
    """Minimal-position overlay of two multicurves.

    ``along_b[k]`` lists the crossings met along component ``k`` of ``b`` in
    its oriented traversal order; signs are +1 when (c direction, b direction)
    is a positively oriented frame.
    """

    arrangement: object
    along_b: List[List[CrossingRecord]]

    @property
    def crossing_count(self) -> int:
        return sum(len(lst) for lst in self.along_b)

    @property
    def algebraic(self) -> int:
        return sum(rec.sign for lst in self.along_b for rec in lst)


def minimal_position(c: OrientedMulticurve, b: OrientedMulticurve) -> MinimalOverlay:
    """Isotope ``c`` to meet ``b`` minimally; ``b`` is never moved."""
    from fractions import Fraction

    from .arrangement import curve_paths_from_multicurve, minimal_position_paths

    assert c.surface is b.surface, "curves must live on the same surface"
    c_paths = curve_paths_from_multicurve(c, "c", Fraction(0), Fraction(1, 2))
    b_paths = curve_paths_from_multicurve(b, "b", Fraction(1, 2), Fraction(1))
    arr = minimal_position_paths(c.surface, b_paths, c_paths, "c")
    along_b = []
    for ci, path in enumerate(arr.curves):
        if path.system != "b":
            continue
        records = []
        for xid in arr.curve_crossing_list(ci):
            ca, cb = arr.crossings[xid]
            sign = arr.crossing_sign(xid)
            c_chord = ca if arr.curves[arr.chords[ca][0]].system == "c" else cb
            if c_chord == cb:
                sign = -sign
            records.append(CrossingRecord(c_copy=arr.curves[arr.chords[c_chord][0]].label[1], sign=sign))
        along_b.append(records)
    return MinimalOverlay(arrangement=arr, along_b=along_b)


def geometric_intersection(c: OrientedMulticurve, b: OrientedMulticurve) -> int:
    return minimal_position(c, b).crossing_count


def algebraic_intersection(c: OrientedMulticurve, b: OrientedMulticurve) -> int:
    """Sum of crossing signs in minimal position; equals the symplectic pairing
    of the homology classes."""
    return minimal_position(c, b).algebraic


def symplectic_pairing(surface: CombinatorialSurface, x: Sequence[int], y: Sequence[int]) -> int:
    j = standard_symplectic_matrix(surface.genus)
    n = len(x)
    return sum(x[a] * j[a][b] * y[b] for a in range(n) for b in range(n))
