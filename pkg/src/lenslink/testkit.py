"""Reference diagram constructors: local embeddings, connected sums,
core knots, braid closures, and small seed diagrams for generators."""

from __future__ import annotations

from .diagram import (Diagram, DiagramError, Edge, LensSpace, components,
                      require_valid, validate)

S3 = LensSpace(1, 0)


def circle(space: LensSpace = S3) -> Diagram:
    """One free loop, no crossings, empty boundary."""
    return Diagram(space, [], [Edge(0, None, None)], [])


def circles(n: int, space: LensSpace = S3) -> Diagram:
    return Diagram(space, [], [Edge(i, None, None) for i in range(n)], [])


def core_knot(space: LensSpace) -> Diagram:
    """Single arc from +1 to -1; the core circle of the glued solid torus."""
    if space.p <= 1:
        raise DiagramError("core knot needs p > 1")
    d = Diagram(space, [], [Edge(0, ("B", 1, 1), ("B", -1, 1))],
                [(1, 1), (-1, 1)])
    return require_valid(d)


def parallel_chords(space: LensSpace, n: int = 2) -> Diagram:
    """n disjoint boundary chords +i -> -i with cycle +1 -1 +2 -2 ...

    Realizable whenever nq/p < ... in practice for p >= n+1; validation
    raises otherwise.
    """
    edges = [Edge(i, ("B", 1, i + 1), ("B", -1, i + 1)) for i in range(n)]
    boundary = []
    for i in range(1, n + 1):
        boundary += [(1, i), (-1, i)]
    return require_valid(Diagram(space, [], edges, boundary))


def braid_closure(word: list[int], width: int | None = None,
                  space: LensSpace = S3) -> Diagram:
    """Closure of a braid word (entries +-i for the i-th positive or
    negative generator), as a classical diagram with t = 0.

    Slot layout per letter, braid running downward:
      sigma_i:   over NW->SE (slots 0->2), under NE->SW (3->1), sign +1
      sigma_i^-: over NE->SW (slots 0->2), under NW->SE (1->3), sign -1
    """
    if width is None:
        width = max((abs(x) for x in word), default=0) + 1
    first_in: list = [None] * width
    current: list = [None] * width
    edges = []
    crossings = []
    next_eid = 0

    def arrive(j, endpoint):
        nonlocal next_eid
        if current[j] is None:
            first_in[j] = endpoint
        else:
            edges.append(Edge(next_eid, current[j], endpoint))
            next_eid += 1

    for k, letter in enumerate(word):
        if letter == 0 or abs(letter) >= width:
            raise DiagramError(f"bad braid letter {letter}")
        i = abs(letter) - 1
        c = len(crossings)
        crossings.append(c)
        if letter > 0:
            in_left, in_right = ("C", c, 0), ("C", c, 3)
            out_left, out_right = ("C", c, 1), ("C", c, 2)
        else:
            in_left, in_right = ("C", c, 1), ("C", c, 0)
            out_left, out_right = ("C", c, 2), ("C", c, 3)
        arrive(i, in_left)
        arrive(i + 1, in_right)
        current[i], current[i + 1] = out_left, out_right

    for j in range(width):
        if first_in[j] is None:
            edges.append(Edge(next_eid, None, None))  # untouched strand
            next_eid += 1
        else:
            edges.append(Edge(next_eid, current[j], first_in[j]))
            next_eid += 1
    return require_valid(Diagram(space, crossings, edges, []))


def trefoil() -> Diagram:
    return braid_closure([1, 1, 1])


def figure_eight() -> Diagram:
    return braid_closure([1, -2, 1, -2])


def torus_knot_2k(k: int) -> Diagram:
    return braid_closure([1] * k)


def hopf_link() -> Diagram:
    return braid_closure([1, 1])


def embed_local(classical: Diagram, space: LensSpace) -> Diagram:
    """Reinterpret a diagram with no boundary points inside another space."""
    if classical.t != 0:
        raise DiagramError("local embedding needs a diagram with t = 0")
    return Diagram(space, classical.crossings, list(classical.edges.values()),
                   [])


def connected_sum_local(base: Diagram, classical: Diagram,
                        base_edge: int | None = None,
                        classical_edge: int | None = None) -> Diagram:
    """Diagrammatic connected sum; the second factor must be local (t = 0).

    Cuts one edge of each diagram and splices respecting orientation.
    Separate map components may be placed freely, so any edge pair works.
    """
    if classical.t != 0:
        raise DiagramError("second factor of the sum must have t = 0")
    if base_edge is None:
        base_edge = min(base.edges)
    if classical_edge is None:
        classical_edge = min(classical.edges)
    coff = max(base.crossings, default=-1) + 1
    eoff = max(base.edges, default=-1) + 1

    def remap(end):
        if end is not None and end[0] == "C":
            return ("C", end[1] + coff, end[2])
        return end

    crossings = list(base.crossings) + [c + coff for c in classical.crossings]
    edges = {e.id: e for e in base.edges.values()}
    for e in classical.edges.values():
        edges[e.id + eoff] = Edge(e.id + eoff, remap(e.tail), remap(e.head))
    e1 = edges.pop(base_edge)
    e2 = edges.pop(classical_edge + eoff)
    nid = max(edges, default=-1) + 1
    if e1.is_loop() and e2.is_loop():
        edges[nid] = Edge(nid, None, None)
    elif e1.is_loop():
        edges[nid] = Edge(nid, e2.tail, e2.head)
    elif e2.is_loop():
        edges[nid] = Edge(nid, e1.tail, e1.head)
    else:
        edges[nid] = Edge(nid, e1.tail, e2.head)
        edges[nid + 1] = Edge(nid + 1, e2.tail, e1.head)
    out = Diagram(base.space, crossings, edges, base.boundary)
    return require_valid(out)


def diagrams_isomorphic(d1: Diagram, d2: Diagram) -> bool:
    """Equality up to renaming of crossing/edge ids and slot rotation by 2.

    Brute force over crossing bijections; intended for small test diagrams.
    """
    import itertools

    if d1.space != d2.space or d1.boundary != d2.boundary:
        return False
    if len(d1.crossings) != len(d2.crossings) or len(d1.edges) != len(d2.edges):
        return False
    if len(d1.free_loops()) != len(d2.free_loops()):
        return False

    def signature(d, cmap, rot):
        def key(end):
            if end is None:
                return None
            if end[0] == "C":
                return ("C", cmap[end[1]], (end[2] + rot[end[1]]) % 4)
            return end
        return sorted((key(e.tail), key(e.head)) for e in d.edges.values())

    base = sorted((e.tail, e.head) for e in d2.edges.values())
    n = len(d1.crossings)
    for perm in itertools.permutations(d2.crossings, n):
        cmap = dict(zip(d1.crossings, perm))
        for bits in range(1 << n):
            rot = {c: 2 * ((bits >> i) & 1) for i, c in enumerate(d1.crossings)}
            if signature(d1, cmap, rot) == base:
                return True
    return False
