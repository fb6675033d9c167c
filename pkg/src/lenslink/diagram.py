"""Combinatorial disk diagrams of links in lens spaces L(p,q).

A diagram is a planar map in a disk: 4-valent crossings with a fixed
counterclockwise slot order (the overstrand always occupies slots 0 and 2,
the understrand slots 1 and 3), oriented edges between crossing slots and
boundary labels, and a counterclockwise cycle of 2t boundary labels
+1..+t, -1..-t read from the basepoint.  Label +i is identified with -i
at angle +q/p around the boundary circle; the identification is never
drawn, only validated.

Closed curves that meet nothing are stored as single edges with both
endpoints null ("free loops").

Conventions enforced by the validator:
  - +1 is the first label after the basepoint and +-labels ascend;
  - straight-through orientation at crossings (slot s in, slot s+2 out);
  - a strand ending at +i continues from -i and vice versa;
  - the rotation system is planar (Euler characteristic 2 per connected
    component of the capped map);
  - the boundary cycle admits exact rational angles (realizability).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import angles

Label = tuple[int, int]                 # (sign, index)
Endpoint = tuple | None                 # ("C", cid, slot) | ("B", sign, idx) | None


class DiagramError(Exception):
    pass


class ParseError(DiagramError):
    pass


@dataclass(frozen=True)
class LensSpace:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or not (0 <= self.q < self.p):
            raise DiagramError(f"need 0 <= q < p and p >= 1, got ({self.p},{self.q})")
        if gcd(self.p, self.q) != 1:
            raise DiagramError("gcd(p,q) must be 1")


@dataclass(frozen=True)
class Edge:
    id: int
    tail: Endpoint
    head: Endpoint

    def is_loop(self):
        return self.tail is None and self.head is None


@dataclass(frozen=True)
class Violation:
    code: str
    message: str

    def __str__(self):
        return f"[{self.code}] {self.message}"


@dataclass(frozen=True)
class Component:
    index: int
    edge_ids: tuple[int, ...]


def label_str(lab: Label) -> str:
    return ("+" if lab[0] > 0 else "-") + str(lab[1])


def parse_label(s: str) -> Label:
    s = s.strip()
    if not s or s[0] not in "+-" or not s[1:].isdigit():
        raise ParseError(f"bad boundary label {s!r}")
    return (1 if s[0] == "+" else -1, int(s[1:]))


class Diagram:
    """Immutable diagram value; derived maps are computed lazily."""

    def __init__(self, space: LensSpace, crossings, edges, boundary):
        self.space = space
        self.crossings = tuple(sorted(crossings))
        if isinstance(edges, dict):
            edges = edges.values()
        self.edges = {e.id: e for e in sorted(edges, key=lambda e: e.id)}
        self.boundary = tuple(boundary)
        self._cache: dict = {}

    # -- basic derived data ------------------------------------------------

    @property
    def t(self) -> int:
        return len(self.boundary) // 2

    def free_loops(self) -> list[int]:
        return [e.id for e in self.edges.values() if e.is_loop()]

    def slot_ends(self) -> dict:
        """(cid, slot) -> (edge id, 'T'|'H'); raises on conflicts."""
        if "slot_ends" not in self._cache:
            out = {}
            for e in self.edges.values():
                for end, tag in ((e.tail, "T"), (e.head, "H")):
                    if end is not None and end[0] == "C":
                        key = (end[1], end[2])
                        if key in out:
                            raise DiagramError(f"slot {key} used twice")
                        out[key] = (e.id, tag)
            self._cache["slot_ends"] = out
        return self._cache["slot_ends"]

    def label_ends(self) -> dict:
        if "label_ends" not in self._cache:
            out = {}
            for e in self.edges.values():
                for end, tag in ((e.tail, "T"), (e.head, "H")):
                    if end is not None and end[0] == "B":
                        key = (end[1], end[2])
                        if key in out:
                            raise DiagramError(f"label {label_str(key)} used twice")
                        out[key] = (e.id, tag)
            self._cache["label_ends"] = out
        return self._cache["label_ends"]

    def positions(self) -> dict:
        return {lab: k for k, lab in enumerate(self.boundary)}

    def __eq__(self, other):
        return (isinstance(other, Diagram) and self.space == other.space
                and self.crossings == other.crossings
                and self.edges == other.edges and self.boundary == other.boundary)

    def __repr__(self):
        return (f"Diagram(L({self.space.p},{self.space.q}), "
                f"{len(self.crossings)} crossings, {len(self.edges)} edges, t={self.t})")


# -- file format ---------------------------------------------------------------


def _endpoint_to_json(end: Endpoint):
    if end is None:
        return None
    if end[0] == "C":
        return ["C", end[1], end[2]]
    return ["B", label_str((end[1], end[2]))]


def _endpoint_from_json(obj, where: str) -> Endpoint:
    if obj is None:
        return None
    if not isinstance(obj, list) or not obj:
        raise ParseError(f"{where}: endpoint must be null or a tagged list")
    if obj[0] == "C":
        if len(obj) != 3 or not all(isinstance(x, int) for x in obj[1:]):
            raise ParseError(f"{where}: crossing endpoint needs [\"C\", id, slot]")
        if obj[2] not in (0, 1, 2, 3):
            raise ParseError(f"{where}: slot must be 0..3")
        return ("C", obj[1], obj[2])
    if obj[0] == "B":
        if len(obj) != 2 or not isinstance(obj[1], str):
            raise ParseError(f"{where}: boundary endpoint needs [\"B\", \"+i\"]")
        sign, idx = parse_label(obj[1])
        return ("B", sign, idx)
    raise ParseError(f"{where}: unknown endpoint tag {obj[0]!r}")


def parse_diagram(text: str) -> Diagram:
    """Parse the JSON diagram format; the result always passes validate."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} col {exc.colno}: {exc.msg}") from None
    if not isinstance(obj, dict):
        raise ParseError("top level must be an object")
    for field in ("p", "q", "crossings", "edges", "boundary"):
        if field not in obj:
            raise ParseError(f"missing field {field!r}")
    try:
        space = LensSpace(obj["p"], obj["q"])
    except DiagramError as exc:
        raise ParseError(str(exc)) from None
    cids = []
    for c in obj["crossings"]:
        if not isinstance(c, dict) or "id" not in c or not isinstance(c["id"], int):
            raise ParseError("crossings must be objects with an integer id")
        if c["id"] in cids:
            raise ParseError(f"duplicate crossing id {c['id']}")
        cids.append(c["id"])
    edges = []
    seen = set()
    for e in obj["edges"]:
        if not isinstance(e, dict) or "id" not in e:
            raise ParseError("edges must be objects with an integer id")
        if e["id"] in seen:
            raise ParseError(f"duplicate edge id {e['id']}")
        seen.add(e["id"])
        tail = _endpoint_from_json(e.get("tail"), f"edge {e['id']} tail")
        head = _endpoint_from_json(e.get("head"), f"edge {e['id']} head")
        if (tail is None) != (head is None):
            raise ParseError(f"edge {e['id']}: a free loop needs both endpoints null")
        edges.append(Edge(e["id"], tail, head))
    cidset = set(cids)
    for e in edges:
        for end in (e.tail, e.head):
            if end is not None and end[0] == "C" and end[1] not in cidset:
                raise ParseError(f"edge {e.id} references missing crossing {end[1]}")
    boundary = [parse_label(s) for s in obj["boundary"]]
    d = Diagram(space, cids, edges, boundary)
    problems = validate(d)
    if problems:
        raise ParseError("; ".join(str(v) for v in problems))
    return d


def serialize(d: Diagram) -> str:
    obj = {
        "format": "lld-1",
        "p": d.space.p,
        "q": d.space.q,
        "crossings": [{"id": c} for c in d.crossings],
        "edges": [{"id": e.id,
                   "tail": _endpoint_to_json(e.tail),
                   "head": _endpoint_to_json(e.head)}
                  for e in d.edges.values()],
        "boundary": [label_str(lab) for lab in d.boundary],
    }
    return json.dumps(obj, separators=(",", ":")) + "\n"


# -- validation -----------------------------------------------------------------


def validate(d: Diagram) -> list[Violation]:
    """All diagram invariants; an empty list means the diagram is valid."""
    out: list[Violation] = []
    try:
        slot_ends = d.slot_ends()
        label_ends = d.label_ends()
    except DiagramError as exc:
        return [Violation("structure", str(exc))]

    # every slot of every crossing is hit exactly once
    for c in d.crossings:
        for s in range(4):
            if (c, s) not in slot_ends:
                out.append(Violation("structure", f"crossing {c} slot {s} unused"))
    for (c, s) in slot_ends:
        if c not in d.crossings:
            out.append(Violation("structure", f"edge references missing crossing {c}"))

    # boundary label bookkeeping
    labels = list(d.boundary)
    if len(set(labels)) != len(labels):
        out.append(Violation("labels", "repeated label in boundary cycle"))
        return out
    t = d.t
    expect = {(s, i) for s in (1, -1) for i in range(1, t + 1)}
    if set(labels) != expect or len(labels) % 2 != 0:
        out.append(Violation("labels", "boundary labels must be exactly +-1..+-t"))
        return out
    for lab in expect:
        if lab not in label_ends:
            out.append(Violation("labels", f"label {label_str(lab)} not used by any edge"))
    for lab in label_ends:
        if lab not in expect:
            out.append(Violation("labels", f"edge endpoint {label_str(lab)} missing from boundary"))
    if out:
        return out
    if t > 0:
        plus = [lab for lab in labels if lab[0] == 1]
        if labels[0] != (1, 1):
            out.append(Violation("labels", "+1 must be the first label after the basepoint"))
        if plus != sorted(plus):
            out.append(Violation("labels", "+ labels must ascend counterclockwise"))
    if d.space.p == 1 and t > 0:
        out.append(Violation("labels", "diagrams in L(1,0) cannot touch the boundary"))
    if out:
        return out

    # orientation consistency
    for c in d.crossings:
        for s in range(4):
            a = slot_ends.get((c, s))
            b = slot_ends.get((c, (s + 2) % 4))
            if a and b and a[1] == "H" and b[1] != "T":
                out.append(Violation(
                    "orientation", f"crossing {c}: strand in at slot {s} must leave at {(s+2)%4}"))
    for i in range(1, t + 1):
        a = label_ends[(1, i)]
        b = label_ends[(-1, i)]
        if a[1] == b[1]:
            out.append(Violation(
                "orientation", f"strand must continue through the +{i}/-{i} identification"))
    if out:
        return out

    # exact angular realizability of the identification
    if not angles.realizable(list(d.boundary), d.space.p, d.space.q):
        out.append(Violation(
            "realizability",
            "boundary cycle admits no angle assignment with step q/p"))

    # rotation-system planarity: Euler characteristic 2 per map component
    for comp in _map_components(d):
        verts, edge_count, face_count = _component_euler_data(d, comp)
        chi = verts - edge_count + face_count
        if chi != 2:
            out.append(Violation(
                "planarity", f"map component has Euler characteristic {chi}, not 2"))
    return out


def require_valid(d: Diagram) -> Diagram:
    problems = validate(d)
    if problems:
        raise DiagramError("; ".join(str(v) for v in problems))
    return d


# -- the rotation-system map ---------------------------------------------------
#
# Darts: ("E", eid, 0) runs tail->head, ("E", eid, 1) head->tail;
# ("S", k, 0) runs along the boundary circle from position k to k+1,
# ("S", k, 1) backwards.  Rotations are counterclockwise; the face to the
# left of a dart is traced by next(d) = predecessor of reverse(d) in the
# rotation at its target vertex.


def _vertex_of(d: Diagram, end: Endpoint):
    if end[0] == "C":
        return ("C", end[1])
    return ("B", end[1], end[2])


def _dart_target(d: Diagram, dart):
    kind = dart[0]
    if kind == "E":
        e = d.edges[dart[1]]
        end = e.head if dart[2] == 0 else e.tail
        return _vertex_of(d, end)
    n = len(d.boundary)
    k = dart[1]
    pos = (k + 1) % n if dart[2] == 0 else k
    lab = d.boundary[pos]
    return ("B", lab[0], lab[1])


def _reverse(dart):
    return (dart[0], dart[1], 1 - dart[2])


def _rotations(d: Diagram) -> dict:
    """vertex -> counterclockwise list of darts leaving it."""
    if "rot" in d._cache:
        return d._cache["rot"]
    rot = {}
    slot_ends = d.slot_ends()
    for c in d.crossings:
        darts = []
        for s in range(4):
            eid, tag = slot_ends[(c, s)]
            darts.append(("E", eid, 0 if tag == "T" else 1))
        rot[("C", c)] = darts
    n = len(d.boundary)
    label_ends = d.label_ends()
    for k, lab in enumerate(d.boundary):
        eid, tag = label_ends[lab]
        germ = ("E", eid, 0 if tag == "T" else 1)
        b_next = ("S", k, 0)
        b_prev = ("S", (k - 1) % n, 1)
        rot[("B", lab[0], lab[1])] = [b_next, germ, b_prev]
    d._cache["rot"] = rot
    return rot


def faces(d: Diagram) -> list[tuple]:
    """Face orbits of the capped map (free loops excluded).

    The pure-boundary outer face is included; callers that want only disk
    interior faces can filter out faces consisting of backward S darts.
    """
    if "faces" in d._cache:
        return d._cache["faces"]
    rot = _rotations(d)
    index = {}
    for v, darts in rot.items():
        for i, dart in enumerate(darts):
            index[dart] = (v, i)
    out = []
    seen = set()
    for start in sorted(index):
        if start in seen:
            continue
        face = []
        dart = start
        while True:
            face.append(dart)
            seen.add(dart)
            rev = _reverse(dart)
            v, i = index[rev]
            darts = rot[v]
            dart = darts[(i - 1) % len(darts)]
            if dart == start:
                break
        out.append(tuple(face))
    d._cache["faces"] = out
    return out


def outer_face(d: Diagram) -> tuple | None:
    if d.t == 0:
        return None
    for f in faces(d):
        if all(dart[0] == "S" and dart[2] == 1 for dart in f):
            return f
    return None


def interior_faces(d: Diagram) -> list[tuple]:
    of = outer_face(d)
    return [f for f in faces(d) if f != of]


def _map_components(d: Diagram):
    """Connected components of the capped map, as sets of vertices."""
    rot = _rotations(d)
    adj = {v: set() for v in rot}
    for v, darts in rot.items():
        for dart in darts:
            adj[v].add(_dart_target(d, dart))
    comps = []
    left = set(adj)
    while left:
        root = left.pop()
        comp = {root}
        stack = [root]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in comp:
                    comp.add(w)
                    left.discard(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def _component_euler_data(d: Diagram, comp):
    verts = len(comp)
    edge_count = 0
    for e in d.edges.values():
        if e.is_loop():
            continue
        if _vertex_of(d, e.tail) in comp:
            edge_count += 1
    if d.t > 0 and ("B", d.boundary[0][0], d.boundary[0][1]) in comp:
        edge_count += len(d.boundary)
    face_count = 0
    for f in faces(d):
        v = _dart_target(d, f[0])
        if v in comp:
            face_count += 1
    return verts, edge_count, face_count


# -- link structure -------------------------------------------------------------


def _next_edge(d: Diagram, eid: int) -> int:
    """Successor edge along the oriented link."""
    e = d.edges[eid]
    if e.is_loop():
        return eid
    head = e.head
    if head[0] == "C":
        c, s = head[1], head[2]
        nxt, tag = d.slot_ends()[(c, (s + 2) % 4)]
        assert tag == "T"
        return nxt
    sign, idx = head[1], head[2]
    nxt, tag = d.label_ends()[(-sign, idx)]
    assert tag == "T"
    return nxt


def components(d: Diagram) -> list[Component]:
    """Oriented link components; traversal passes straight through
    crossings and continues through the +-i identifications."""
    seen = set()
    out = []
    for eid in d.edges:
        if eid in seen:
            continue
        cycle = []
        cur = eid
        while cur not in seen:
            seen.add(cur)
            cycle.append(cur)
            cur = _next_edge(d, cur)
        out.append(Component(len(out) + 1, tuple(cycle)))
    return out


def component_of_edge(d: Diagram) -> dict[int, int]:
    out = {}
    for comp in components(d):
        for eid in comp.edge_ids:
            out[eid] = comp.index
    return out


def epsilon_signs(d: Diagram) -> list[int]:
    """eps_i = +1 iff the strand leaves the upper point +i into the disk."""
    ends = d.label_ends()
    return [1 if ends[(1, i)][1] == "T" else -1 for i in range(1, d.t + 1)]


def crossing_sign(d: Diagram, cid: int) -> int:
    """+1 when the understrand direction turned 90deg counterclockwise gives
    the overstrand direction, under the slot conventions."""
    slot_ends = d.slot_ends()
    o_in = next(s for s in (0, 2) if slot_ends[(cid, s)][1] == "H")
    u_in = next(s for s in (1, 3) if slot_ends[(cid, s)][1] == "H")
    return 1 if o_in == (u_in + 1) % 4 else -1


# -- overpasses ------------------------------------------------------------------


@dataclass(frozen=True)
class Overpass:
    """Maximal strand run between underpasses / boundary endpoints."""
    index: int
    edge_ids: tuple[int, ...]
    start: Endpoint          # None for circles
    end: Endpoint
    is_circle: bool

    def boundary_end(self) -> Label | None:
        for end in (self.start, self.end):
            if end is not None and end[0] == "B":
                return (end[1], end[2])
        return None

    def boundary_ends(self) -> list[Label]:
        out = []
        for end in (self.start, self.end):
            if end is not None and end[0] == "B":
                out.append((end[1], end[2]))
        return out


def overpasses(d: Diagram) -> list[Overpass]:
    """Overpass decomposition: runs continue through over-slots only."""
    slot_ends = d.slot_ends()

    def over_next(eid):
        head = d.edges[eid].head
        if head is not None and head[0] == "C" and head[2] in (0, 2):
            nxt, _ = slot_ends[(head[1], (head[2] + 2) % 4)]
            return nxt
        return None

    def over_prev(eid):
        tail = d.edges[eid].tail
        if tail is not None and tail[0] == "C" and tail[2] in (0, 2):
            prev, _ = slot_ends[(tail[1], (tail[2] + 2) % 4)]
            return prev
        return None

    seen = set()
    runs = []
    for eid in d.edges:
        if eid in seen:
            continue
        if d.edges[eid].is_loop():
            seen.add(eid)
            runs.append((eid, [eid], True))
            continue
        start = eid
        hops = 0
        while True:
            prev = over_prev(start)
            if prev is None or prev == eid and hops > 0:
                break
            if prev == eid:  # closed over-circle
                break
            start = prev
            hops += 1
            if hops > len(d.edges):
                break
        chain = [start]
        seen.add(start)
        cur = start
        circle = False
        while True:
            nxt = over_next(cur)
            if nxt is None:
                break
            if nxt == start:
                circle = True
                break
            chain.append(nxt)
            seen.add(nxt)
            cur = nxt
        runs.append((start, chain, circle))
    out = []
    for i, (start, chain, circle) in enumerate(runs):
        s = d.edges[chain[0]].tail if not circle else None
        e = d.edges[chain[-1]].head if not circle else None
        out.append(Overpass(i, tuple(chain), s, e, circle))
    return out


# -- misc helpers ----------------------------------------------------------------


def mirror(d: Diagram) -> Diagram:
    """Swap over/under everywhere (rotate every crossing's slots by one)."""
    def remap(end):
        if end is not None and end[0] == "C":
            return ("C", end[1], (end[2] + 1) % 4)
        return end

    edges = [Edge(e.id, remap(e.tail), remap(e.head)) for e in d.edges.values()]
    return Diagram(d.space, d.crossings, edges, d.boundary)


def reverse_component(d: Diagram, edge_ids) -> Diagram:
    """Reverse the orientation of one link component."""
    ids = set(edge_ids)
    edges = [Edge(e.id, e.head, e.tail) if e.id in ids else e
             for e in d.edges.values()]
    return Diagram(d.space, d.crossings, edges, d.boundary)


def renumber(d: Diagram) -> Diagram:
    """Canonical ids: crossings and edges numbered consecutively from 0."""
    cmap = {c: i for i, c in enumerate(d.crossings)}
    emap = {e: i for i, e in enumerate(sorted(d.edges))}

    def remap(end):
        if end is not None and end[0] == "C":
            return ("C", cmap[end[1]], end[2])
        return end

    edges = [Edge(emap[e.id], remap(e.tail), remap(e.head))
             for e in d.edges.values()]
    return Diagram(d.space, sorted(cmap.values()), edges, d.boundary)
