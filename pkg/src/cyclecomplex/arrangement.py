"""Exact overlay of curve systems on a triangulated surface.

Curves are combinatorial paths: cyclic sequences of edge crossings (``hops``)
with exact rational positions along each edge and, inside each triangle,
taut chords between consecutive crossings.  Two chords inside a triangle
cross exactly when their endpoints interleave around the triangle boundary,
so the whole overlay (crossings, faces, complementary regions) is determined
combinatorially and is rebuilt from scratch after every move.

The reference triangle has corners (0,0), (1,0), (0,1), counterclockwise;
crossing signs are determinants of chord direction vectors in this frame.

Moves: sliding a curve of one system across an innermost bigon (removes two
crossings), and removing a same-side chord (an isotopy across an edge that
shortens the path).  Together they bring a pair of systems into minimal
position: a transverse position with no bigon regions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .surface import CombinatorialSurface, Slot

Hop = Tuple[int, Fraction, Slot]  # (edge, param along primary direction, slot entered)

_CORNERS = ((Fraction(0), Fraction(0)), (Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))


@dataclass(frozen=True)
class CurvePath:
    """Closed combinatorial curve; ``label[0]`` names the system it belongs to."""

    label: Tuple
    hops: Tuple[Hop, ...]

    @property
    def system(self):
        return self.label[0]


def _side_param(surface: CombinatorialSurface, slot: Slot, param: Fraction) -> Fraction:
    return param if surface.is_primary(slot) else 1 - param


def _xy(side: int, sp: Fraction) -> Tuple[Fraction, Fraction]:
    ax, ay = _CORNERS[side]
    bx, by = _CORNERS[(side + 1) % 3]
    return (ax + sp * (bx - ax), ay + sp * (by - ay))


def _cross(a, b) -> Fraction:
    return a[0] * b[1] - a[1] * b[0]


def curve_paths_from_multicurve(curve, system, lo: Fraction, hi: Fraction) -> List[CurvePath]:
    """Normal placement of a traced multicurve with params mapped into (lo, hi)."""
    paths = []
    span = hi - lo
    for copy in curve.copies:
        hops = []
        for (e, pos), slot in curve.oriented_passages(copy.index):
            param = lo + span * Fraction(pos + 1, curve.weights[e] + 1)
            hops.append((e, param, slot))
        paths.append(CurvePath(label=(system, copy.index), hops=tuple(hops)))
    return paths


class Arrangement:
    """Immutable overlay of curve paths; all derived structure built eagerly."""

    def __init__(self, surface: CombinatorialSurface, curves: Sequence[CurvePath], check: bool = True):
        self.surface = surface
        self.curves = list(curves)
        self._build()
        if check:
            self._check_euler()

    # -- construction --------------------------------------------------------

    def _build(self):
        surface = self.surface
        # points: (curve index, hop index) -> per-edge ordered lists
        self.points: List[Tuple[int, int]] = []
        self.point_id: Dict[Tuple[int, int], int] = {}
        self.edge_points: Dict[int, List[int]] = {e: [] for e in range(surface.num_edges)}
        for ci, curve in enumerate(self.curves):
            for hi_, hop in enumerate(curve.hops):
                pid = len(self.points)
                self.points.append((ci, hi_))
                self.point_id[(ci, hi_)] = pid
                self.edge_points[hop[0]].append(pid)
        for e in self.edge_points:
            self.edge_points[e].sort(key=lambda pid: self._hop(pid)[1])
            params = [self._hop(pid)[1] for pid in self.edge_points[e]]
            assert len(set(params)) == len(params), "duplicate params on edge"
        self.point_rank: Dict[int, int] = {}
        for e, pids in self.edge_points.items():
            for k, pid in enumerate(pids):
                self.point_rank[pid] = k

        # triangle boundary cycles: ("corner", c) and ("pt", pid, slot)
        self.tri_boundary: Dict[int, List[Tuple]] = {}
        self.boundary_index: Dict[int, Dict[Tuple, int]] = {}
        for t in range(surface.num_triangles):
            entries: List[Tuple] = []
            for s in range(3):
                entries.append(("corner", s))
                slot = (t, s)
                eid = surface.edge_of_slot[slot]
                side_pts = [(pid, _side_param(surface, slot, self._hop(pid)[1])) for pid in self.edge_points[eid]]
                side_pts.sort(key=lambda x: x[1])
                for pid, _sp in side_pts:
                    entries.append(("pt", pid, slot))
            self.tri_boundary[t] = entries
            self.boundary_index[t] = {entry: i for i, entry in enumerate(entries)}

        # chords: one per hop (from hop i's point to hop i+1's point)
        # chord record: (curve, hop i, triangle, bid start, bid end)
        self.chords: List[Tuple[int, int, int, int, int]] = []
        self.chord_id: Dict[Tuple[int, int], int] = {}
        for ci, curve in enumerate(self.curves):
            n = len(curve.hops)
            for i in range(n):
                e0, _p0, slot0 = curve.hops[i]
                e1, _p1, slot1 = curve.hops[(i + 1) % n]
                t = slot0[0]
                arrive = self.surface.glued_to[slot1]
                assert arrive[0] == t, (
                    f"curve {curve.label} hop {i}: chord triangle {t} does not reach {slot1}"
                )
                b0 = self.boundary_index[t][("pt", self.point_id[(ci, i)], slot0)]
                b1 = self.boundary_index[t][("pt", self.point_id[(ci, (i + 1) % n)], arrive)]
                cid = len(self.chords)
                self.chords.append((ci, i, t, b0, b1))
                self.chord_id[(ci, i)] = cid

        self._find_crossings()
        self._build_graph()
        self._trace_faces()
        self._build_regions()

    def _hop(self, pid: int) -> Hop:
        ci, hi_ = self.points[pid]
        return self.curves[ci].hops[hi_]

    def _between(self, n: int, a: int, x: int, b: int) -> bool:
        """x strictly inside the ccw cyclic open interval (a, b) of Z/n."""
        if a < b:
            return a < x < b
        return x > a or x < b

    def _find_crossings(self):
        # crossings only between chords of different systems
        self.crossings: List[Tuple[int, int]] = []  # (chord a, chord b)
        self.chord_crossings: Dict[int, List[int]] = {c: [] for c in range(len(self.chords))}
        by_tri: Dict[int, List[int]] = {}
        for cid, (_ci, _hi, t, _b0, _b1) in enumerate(self.chords):
            by_tri.setdefault(t, []).append(cid)
        for t, cids in by_tri.items():
            n = len(self.tri_boundary[t])
            for i in range(len(cids)):
                for j in range(i + 1, len(cids)):
                    ca, cb = cids[i], cids[j]
                    a = self.chords[ca]
                    b = self.chords[cb]
                    inter = self._between(n, a[3], b[3], a[4]) != self._between(n, a[3], b[4], a[4])
                    if not inter:
                        continue
                    sys_a = self.curves[a[0]].system
                    sys_b = self.curves[b[0]].system
                    assert sys_a != sys_b, (
                        f"chords of system {sys_a} cross: curve embeddedness violated"
                    )
                    xid = len(self.crossings)
                    self.crossings.append((ca, cb))
                    self.chord_crossings[ca].append(xid)
                    self.chord_crossings[cb].append(xid)
        # order crossings along each chord: by ccw distance from the chord start
        for cid, xids in self.chord_crossings.items():
            _ci, _hi, t, b0, b1 = self.chords[cid]
            n = len(self.tri_boundary[t])

            def key(xid):
                ca, cb = self.crossings[xid]
                other = cb if ca == cid else ca
                ob0, ob1 = self.chords[other][3], self.chords[other][4]
                inside = ob0 if self._between(n, b0, ob0, b1) else ob1
                return (inside - b0) % n

            xids.sort(key=key)

    def _entry_xy(self, t: int, entry: Tuple):
        if entry[0] == "corner":
            return _CORNERS[entry[1]]
        _kind, pid, slot = entry
        sp = _side_param(self.surface, slot, self._hop(pid)[1])
        return _xy(slot[1], sp)

    def chord_direction(self, cid: int):
        _ci, _hi, t, b0, b1 = self.chords[cid]
        p0 = self._entry_xy(t, self.tri_boundary[t][b0])
        p1 = self._entry_xy(t, self.tri_boundary[t][b1])
        return (p1[0] - p0[0], p1[1] - p0[1])

    def crossing_sign(self, xid: int) -> int:
        """+1 when (first chord direction, second chord direction) is positive."""
        ca, cb = self.crossings[xid]
        assert not self._same_side(ca) and not self._same_side(cb), "sign of a degenerate chord"
        d = _cross(self.chord_direction(ca), self.chord_direction(cb))
        assert d != 0
        return 1 if d > 0 else -1

    def _same_side(self, cid: int) -> bool:
        ci, hi_, t, _b0, _b1 = self.chords[cid]
        curve = self.curves[ci]
        n = len(curve.hops)
        slot0 = curve.hops[hi_][2]
        arrive = self.surface.glued_to[curve.hops[(hi_ + 1) % n][2]]
        return slot0 == arrive

    # -- half-edge graph -----------------------------------------------------

    def _build_graph(self):
        surface = self.surface
        # vertices: ("v", orbit) | ("p", pid) | ("x", xid)
        # undirected edges with two halves 2k, 2k+1; ekey per edge
        self.h_tail: List = []
        self.h_ekey: List = []
        self.h_twin: List[int] = []
        self.rotations: Dict[Tuple, List[int]] = {}

        def add_edge(u, v, ekey):
            h1 = len(self.h_tail)
            self.h_tail.append(u)
            self.h_ekey.append(ekey)
            self.h_twin.append(h1 + 1)
            self.h_tail.append(v)
            self.h_ekey.append(ekey)
            self.h_twin.append(h1)
            return h1, h1 + 1

        # intervals along each triangulation edge
        self.n_intervals = 0
        point_interval_halves: Dict[int, Dict[str, int]] = {}  # pid -> {"up": h, "down": h}
        vertex_end_half: Dict[Tuple[int, Slot], int] = {}  # (vertex, end slot) -> outgoing half
        for e in range(surface.num_edges):
            prim, sec = surface.edge_slots[e]
            tail_v = ("v", surface.vertex_of_corner[prim])
            head_v = ("v", surface.vertex_of_corner[(sec[0], sec[1])])
            pids = self.edge_points[e]
            stations = [tail_v] + [("p", pid) for pid in pids] + [head_v]
            for k in range(len(stations) - 1):
                h_fwd, h_bwd = add_edge(stations[k], stations[k + 1], ("ivl", e, k))
                self.n_intervals += 1
                if k == 0:
                    vertex_end_half[(tail_v[1], prim)] = h_fwd
                else:
                    point_interval_halves.setdefault(pids[k - 1], {})["up"] = h_fwd
                if k == len(stations) - 2:
                    vertex_end_half[(head_v[1], sec)] = h_bwd
                else:
                    point_interval_halves.setdefault(pids[k], {})["down"] = h_bwd
        # note: "up" = outgoing toward increasing param, "down" = decreasing

        # chord fragments
        self.n_fragments = 0
        # per chord: list of nodes [start pt, crossings..., end pt]
        chord_frag_halves: Dict[int, List[Tuple[int, int]]] = {}
        self.chord_halves = chord_frag_halves
        point_chord_half: Dict[Tuple[int, Slot], int] = {}  # (pid, slot) -> outgoing chord half
        crossing_frag_halves: Dict[int, Dict[int, Tuple[int, int]]] = {}
        for cid, (ci, hi_, t, b0, b1) in enumerate(self.chords):
            entry0 = self.tri_boundary[t][b0]
            entry1 = self.tri_boundary[t][b1]
            nodes: List = [("p", entry0[1])]
            for xid in self.chord_crossings[cid]:
                nodes.append(("x", xid))
            nodes.append(("p", entry1[1]))
            halves = []
            for k in range(len(nodes) - 1):
                h_fwd, h_bwd = add_edge(nodes[k], nodes[k + 1], ("frag", cid, k))
                self.n_fragments += 1
                halves.append((h_fwd, h_bwd))
            chord_frag_halves[cid] = halves
            point_chord_half[(entry0[1], entry0[2])] = halves[0][0]
            arrive_slot = entry1[2]
            point_chord_half[(entry1[1], arrive_slot)] = halves[-1][1]
            for k, xid in enumerate(self.chord_crossings[cid]):
                crossing_frag_halves.setdefault(xid, {})[cid] = (halves[k][1], halves[k + 1][0])
                # halves[k][1]: outgoing at crossing toward chord start side
                # halves[k+1][0]: outgoing toward chord end side

        # rotations
        # at points: CCW = [up, chord into primary triangle, down, chord into secondary]
        for pid in range(len(self.points)):
            e = self._hop(pid)[0]
            prim, sec = surface.edge_slots[e]
            rot = [
                point_interval_halves[pid]["up"],
                point_chord_half[(pid, prim)],
                point_interval_halves[pid]["down"],
                point_chord_half[(pid, sec)],
            ]
            self.rotations[("p", pid)] = rot
        # at surface vertices: CCW = reversed clockwise orbit of end slots
        for vid, orbit in enumerate(surface.vertex_orbits):
            rot = []
            for corner in reversed(orbit):
                rot.append(vertex_end_half[(vid, corner)])
            self.rotations[("v", vid)] = rot
        # at crossings: CCW = cyclic boundary order of the four destinations
        for xid, (ca, cb) in enumerate(self.crossings):
            t = self.chords[ca][2]
            n = len(self.tri_boundary[t])
            entries = []
            for cid in (ca, cb):
                toward_start, toward_end = crossing_frag_halves[xid][cid]
                entries.append((self.chords[cid][3] % n, toward_start))
                entries.append((self.chords[cid][4] % n, toward_end))
            entries.sort()
            self.rotations[("x", xid)] = [h for _b, h in entries]

        self.h_head = [self.h_tail[self.h_twin[h]] for h in range(len(self.h_tail))]
        self._rot_pos: Dict[int, Tuple[Tuple, int]] = {}
        for v, rot in self.rotations.items():
            for i, h in enumerate(rot):
                assert self.h_tail[h] == v, f"rotation entry at {v} has tail {self.h_tail[h]}"
                self._rot_pos[h] = (v, i)

    def _ccw_prev(self, h: int) -> int:
        v, i = self._rot_pos[h]
        rot = self.rotations[v]
        return rot[(i - 1) % len(rot)]

    def _next_face(self, h: int) -> int:
        return self._ccw_prev(self.h_twin[h])

    def _trace_faces(self):
        self.face_of: List[int] = [-1] * len(self.h_tail)
        self.n_faces = 0
        for h0 in range(len(self.h_tail)):
            if self.face_of[h0] != -1:
                continue
            f = self.n_faces
            self.n_faces += 1
            h = h0
            while self.face_of[h] == -1:
                self.face_of[h] = f
                h = self._next_face(h)
            assert h == h0, "face tracing did not close"

    def _build_regions(self):
        parent = list(range(self.n_faces))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)

        for h in range(0, len(self.h_tail), 2):
            if self.h_ekey[h][0] == "ivl":
                union(self.face_of[h], self.face_of[h + 1])
        roots = sorted({find(f) for f in range(self.n_faces)})
        self.region_index = {r: i for i, r in enumerate(roots)}
        self.region_of_face = [self.region_index[find(f)] for f in range(self.n_faces)]
        self.n_regions = len(roots)

        # euler characteristic per region: faces - interior intervals + vertices
        self.region_chi = [0] * self.n_regions
        face_region_seen = [self.region_of_face[f] for f in range(self.n_faces)]
        for f in range(self.n_faces):
            self.region_chi[face_region_seen[f]] += 1
        for h in range(0, len(self.h_tail), 2):
            if self.h_ekey[h][0] == "ivl":
                r1 = self.region_of_face[self.face_of[h]]
                r2 = self.region_of_face[self.face_of[h + 1]]
                assert r1 == r2
                self.region_chi[r1] -= 1
        self.region_of_vertex = {}
        for v in self.rotations:
            if v[0] == "v":
                h = self.rotations[v][0]
                r = self.region_of_face[self.face_of[h]]
                self.region_chi[r] += 1
                self.region_of_vertex[v[1]] = r

    def _check_euler(self):
        v = len(self.rotations)
        e = self.n_intervals + self.n_fragments
        f = self.n_faces
        assert v - e + f == self.surface.euler_characteristic, (
            f"overlay Euler check failed: {v}-{e}+{f} != {self.surface.euler_characteristic}"
        )
        # the curve union is a 4-valent graph of compact euler char -#crossings
        assert sum(self.region_chi) == self.surface.euler_characteristic + len(self.crossings)

    # -- queries --------------------------------------------------------------

    def crossing_count(self) -> int:
        return len(self.crossings)

    def region_left_of_curve(self, ci: int) -> int:
        """Region on the left (normal side) of the directed curve ``ci``."""
        cid = self.chord_id[(ci, 0)]
        # forward half of the first fragment of the chord
        h = self._chord_first_half(cid)
        return self.region_of_face[self.face_of[h]]

    def region_right_of_curve(self, ci: int) -> int:
        cid = self.chord_id[(ci, 0)]
        h = self._chord_first_half(cid)
        return self.region_of_face[self.face_of[self.h_twin[h]]]

    def _chord_first_half(self, cid: int) -> int:
        # the forward half of fragment 0 of chord cid
        return self.chord_halves[cid][0][0]

    def curve_crossing_list(self, ci: int) -> List[Tuple[int, int]]:
        """Crossings along curve ``ci`` in word order: (crossing id, position key)."""
        out = []
        curve = self.curves[ci]
        for i in range(len(curve.hops)):
            cid = self.chord_id[(ci, i)]
            for xid in self.chord_crossings[cid]:
                out.append(xid)
        return out

    # -- region boundary walks -------------------------------------------------

    def _next_region_half(self, h: int) -> Tuple[int, List[int]]:
        """Next fragment half-edge along the region boundary, and the interval
        halves skipped at the junction vertex (in scan order)."""
        r = self.region_of_face[self.face_of[h]]
        v = self.h_head[h]
        rot = self.rotations[v]
        start = self._rot_pos[self.h_twin[h]][1]
        skipped = []
        for step in range(1, len(rot) + 1):
            cand = rot[(start - step) % len(rot)]
            if self.h_ekey[cand][0] == "ivl":
                assert self.region_of_face[self.face_of[cand]] == r
                skipped.append(cand)
                continue
            assert self.region_of_face[self.face_of[cand]] == r, "boundary scan left the region"
            return cand, skipped
        raise AssertionError("no boundary continuation found")

    def region_boundary_cycles(self, region: int) -> List[List[int]]:
        halves = [
            h for h in range(len(self.h_tail))
            if self.h_ekey[h][0] == "frag" and self.region_of_face[self.face_of[h]] == region
        ]
        unseen = set(halves)
        cycles = []
        while unseen:
            h0 = min(unseen)
            cyc = []
            h = h0
            while True:
                cyc.append(h)
                unseen.discard(h)
                h, _skipped = self._next_region_half(h)
                if h == h0:
                    break
            cycles.append(cyc)
        return cycles

    def fragment_owner(self, h: int) -> Tuple[int, int]:
        """(curve index, hop index) of the chord under a fragment half-edge."""
        _kind, cid, _k = self.h_ekey[h]
        ci, hi_, _t, _b0, _b1 = self.chords[cid]
        return ci, hi_

    # -- bigon detection --------------------------------------------------------

    def find_bigon(self) -> Optional[dict]:
        """Innermost bigon between the two systems, if any.

        Returns a dict with the boundary cycle and the two corner crossings,
        oriented so the cycle starts just after one corner.
        """
        for region in range(self.n_regions):
            if self.region_chi[region] != 1:
                continue
            cycles = self.region_boundary_cycles(region)
            if len(cycles) != 1:
                continue
            cyc = cycles[0]
            corner_positions = [
                i for i, h in enumerate(cyc) if isinstance(self.h_head[h], tuple) and self.h_head[h][0] == "x"
            ]
            if len(corner_positions) != 2:
                continue
            x1 = self.h_head[cyc[corner_positions[0]]]
            x2 = self.h_head[cyc[corner_positions[1]]]
            if x1 == x2:
                continue
            # rotate so the cycle starts right after the first corner
            start = corner_positions[0] + 1
            cyc = cyc[start:] + cyc[:start]
            return {"region": region, "cycle": cyc, "corners": (x1[1], x2[1])}
        return None

    # -- moves ------------------------------------------------------------------

    def _fragment_forward(self, h: int) -> bool:
        return h % 2 == 0

    def _chord_endpoint_slot(self, cid: int, at_start: bool) -> Slot:
        _ci, _hi, t, b0, b1 = self.chords[cid]
        entry = self.tri_boundary[t][b0 if at_start else b1]
        return entry[2]

    def _run_info(self, run: List[int]):
        """Decode one side of a bigon: owner curve, interior hop word positions,
        and per-interior-point data gathered along the region boundary walk."""
        ci0, _ = self.fragment_owner(run[0])
        interior = []  # (pid, hop index, R-side interval half, arriving fragment)
        for h in run[:-1]:
            head = self.h_head[h]
            assert head[0] == "p", "run interior must be curve points"
            pid = head[1]
            ci, hi_ = self.points[pid]
            assert ci == ci0, "bigon side spans several components"
            _nxt, skipped = self._next_region_half(h)
            assert len(skipped) == 1 and self.h_ekey[skipped[0]][0] == "ivl"
            interior.append((pid, hi_, skipped[0], h))
        aligned = self._fragment_forward(run[0])
        for h in run:
            assert self._fragment_forward(h) == aligned, "run changes direction"
        return ci0, interior, aligned

    def _far_param(self, live_params: Dict[int, List[Fraction]], edge: int, base: Fraction, upward: bool) -> Fraction:
        params = live_params[edge]
        if upward:
            above = [p for p in params if p > base]
            lim = min(above) if above else Fraction(1)
        else:
            below = [p for p in params if p < base]
            lim = max(below) if below else Fraction(0)
        new = (base + lim) / 2
        params.append(new)
        return new

    def slide(self, bigon: dict, movable_system) -> List[CurvePath]:
        """Isotope the movable curve across the bigon; returns the new curve list."""
        cyc = bigon["cycle"]
        # split at the second corner into the two runs
        split = next(
            i for i, h in enumerate(cyc) if self.h_head[h][0] == "x" and i < len(cyc) - 1
        )
        run1, run2 = cyc[: split + 1], cyc[split + 1:]
        sys1 = self.curves[self.fragment_owner(run1[0])[0]].system
        if sys1 == movable_system:
            c_run, b_run = run1, run2
        else:
            c_run, b_run = run2, run1
        assert self.curves[self.fragment_owner(c_run[0])[0]].system == movable_system
        assert self.curves[self.fragment_owner(b_run[0])[0]].system != movable_system

        ci, c_interior, c_aligned = self._run_info(c_run)
        bi, b_interior, _b_aligned = self._run_info(b_run)
        c_curve = self.curves[ci]
        n = len(c_curve.hops)

        live_params: Dict[int, List[Fraction]] = {
            e: [self._hop(pid)[1] for pid in pids] for e, pids in self.edge_points.items()
        }

        # new hops parallel the b-run reversed (the region walk traverses the
        # b-side from the second corner back to the first)
        new_hops: List[Hop] = []
        for pid, _hi, r_side_ivl, arriving in reversed(b_interior):
            edge = self._hop(pid)[0]
            base = self._hop(pid)[1]
            r_upward = self._ivl_upward(r_side_ivl, pid)
            param = self._far_param(live_params, edge, base, not r_upward)
            # the new strand runs against the walk here, so it enters the
            # triangle of the fragment that arrives at this point in the walk
            cid = self.h_ekey[arriving][1]
            frag_fwd = self._fragment_forward(arriving)
            slot = self._chord_endpoint_slot(cid, at_start=not frag_fwd)
            new_hops.append((edge, param, slot))

        # anchors in the word: prev_hop stays, then the replacement, then the
        # hop after the removed block
        count = len(c_interior)
        if c_interior:
            first_remove = c_interior[0][1] if c_aligned else c_interior[-1][1]
            prev_hop = (first_remove - 1) % n
        else:
            # both corners sit on a single chord of the movable curve
            cid = self.h_ekey[c_run[0]][1]
            prev_hop = self.chords[cid][1]
        if not c_aligned:
            # word traverses the replaced stretch in the opposite direction
            new_hops = [(e, p, self.surface.glued_to[s]) for (e, p, s) in reversed(new_hops)]

        rebuilt: List[Hop] = [c_curve.hops[prev_hop]]
        rebuilt.extend(new_hops)
        j = (prev_hop + 1 + count) % n
        while j != prev_hop:
            rebuilt.append(c_curve.hops[j])
            j = (j + 1) % n
        out = list(self.curves)
        out[ci] = CurvePath(label=c_curve.label, hops=tuple(rebuilt))
        return out

    def _ivl_upward(self, h: int, pid: int) -> bool:
        """True if interval half ``h`` leaves point ``pid`` toward larger params."""
        assert self.h_tail[h] == ("p", pid)
        _kind, e, k = self.h_ekey[h]
        # interval k runs between stations k and k+1 (increasing param);
        # the half leaving pid upward is the forward half of interval rank+1
        rank = self.point_rank[pid]
        return k == rank + 1

    def find_uturn(self, movable_system) -> Optional[dict]:
        """Innermost same-side chord of the movable system, if any."""
        best = None
        for cid, (ci, hi_, t, b0, b1) in enumerate(self.chords):
            if self.curves[ci].system != movable_system:
                continue
            if not self._same_side(cid):
                continue
            curve = self.curves[ci]
            n = len(curve.hops)
            e0, p0, _s0 = curve.hops[hi_]
            e1, p1, _s1 = curve.hops[(hi_ + 1) % n]
            lo, hi2 = min(p0, p1), max(p0, p1)
            blocked = False
            for pid in self.edge_points[e0]:
                oc, _oh = self.points[pid]
                if self.curves[oc].system != movable_system:
                    continue
                q = self._hop(pid)[1]
                if lo < q < hi2:
                    blocked = True
                    break
            if not blocked:
                return {"curve": ci, "hop": hi_}
        return best

    def remove_uturn(self, info: dict) -> List[CurvePath]:
        ci, hi_ = info["curve"], info["hop"]
        curve = self.curves[ci]
        n = len(curve.hops)
        assert n >= 4, "u-turn removal would erase the component"
        keep = [curve.hops[i] for i in range(n) if i not in (hi_, (hi_ + 1) % n)]
        out = list(self.curves)
        out[ci] = CurvePath(label=curve.label, hops=tuple(keep))
        return out


def minimal_position_paths(
    surface: CombinatorialSurface,
    fixed: Sequence[CurvePath],
    movable: Sequence[CurvePath],
    movable_system,
) -> Arrangement:
    """Slide the movable system across bigons until the pair is minimal.

    The fixed system is never modified; the returned arrangement has no bigon
    regions and the movable system has no same-side chords.
    """
    arr = Arrangement(surface, list(movable) + list(fixed))
    while True:
        bigon = arr.find_bigon()
        if bigon is None:
            break
        before = arr.crossing_count()
        arr = Arrangement(surface, arr.slide(bigon, movable_system))
        after = arr.crossing_count()
        assert after < before and (before - after) % 2 == 0, (
            f"bigon slide did not reduce crossings: {before} -> {after}"
        )
    while True:
        info = arr.find_uturn(movable_system)
        if info is None:
            break
        before = arr.crossing_count()
        arr = Arrangement(surface, arr.remove_uturn(info))
        assert arr.crossing_count() == before, "u-turn removal changed crossings"
        assert arr.find_bigon() is None, "u-turn removal exposed a bigon"
    return arr
