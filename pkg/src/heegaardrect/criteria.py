"""Rectangle condition and double rectangle condition with witnesses.

The two criteria are decided through auxiliary graphs built from rectangle
and composed-rectangle types.  Vertices of the detail graphs are boundary
circle labels (curve index, side) of a cut component of the second family;
vertices of the per-disk graphs are labels of the first family, tagged by
the side of the distinguished disk when both sides are in play.

Connectivity conventions are exactly the ones the criteria quantify over,
which differ from textbook biconnectivity in the small cases: the empty
graph and one-vertex graphs count as connected, hence a one-vertex graph
is 2-connected, and the doubly-2-connected test deletes one vertex from
each block simultaneously and asks nothing else.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .diagram import FAMILY_A, FAMILY_B, Diagram, DiagramError, MINUS, PLUS, side_str
from .rectangles import composed_rectangles, rectangle_faces
from .systems import cut_components

Vertex = tuple
Edge = tuple[Vertex, Vertex]


@dataclass(frozen=True)
class CriteriaGraph:
    """Finite simple graph on tuple-labeled vertices, optionally 2-blocked."""

    vertices: frozenset
    edges: frozenset
    partition: Optional[tuple[frozenset, frozenset]] = None

    def __post_init__(self):
        for u, v in self.edges:
            if u == v:
                raise DiagramError(f"loop edge at {u}")
            if u not in self.vertices or v not in self.vertices:
                raise DiagramError(f"edge ({u},{v}) leaves the vertex set")
        if self.partition is not None:
            lo, hi = self.partition
            if lo & hi or (lo | hi) != self.vertices:
                raise DiagramError("partition blocks must be disjoint and cover")

    def neighbors(self) -> dict:
        adj: dict = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


def graph_from_edges(edges: Sequence[Edge], vertices=(), partition=None) -> CriteriaGraph:
    vs = set(vertices)
    es = set()
    for u, v in edges:
        if u == v:
            continue
        vs.add(u)
        vs.add(v)
        es.add((u, v) if u <= v else (v, u))
    return CriteriaGraph(frozenset(vs), frozenset(es), partition)


def _is_connected(adj: dict, removed: frozenset = frozenset()) -> bool:
    nodes = [v for v in adj if v not in removed]
    if not nodes:
        return True
    seen = {nodes[0]}
    stack = [nodes[0]]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in removed and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(nodes)


def is_two_connected(graph: CriteriaGraph) -> bool:
    """Connected, and still connected after deleting any single vertex.

    Implemented through articulation points (iterative lowlink); graphs on
    at most one vertex are 2-connected under this reading.
    """
    adj = graph.neighbors()
    if len(adj) <= 1:
        return True
    if not _is_connected(adj):
        return False
    return not articulation_points(adj)


def articulation_points(adj: dict) -> set:
    """Articulation points of a connected graph, by iterative DFS lowlink."""
    disc: dict = {}
    low: dict = {}
    points: set = set()
    for root in adj:
        if root in disc:
            continue
        root_children = 0
        stack = [(root, None, iter(adj[root]))]
        disc[root] = low[root] = len(disc)
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w in disc:
                    low[u] = min(low[u], disc[w])
                else:
                    disc[w] = low[w] = len(disc)
                    stack.append((w, u, iter(adj[w])))
                    advanced = True
                    break
            if advanced:
                continue
            stack.pop()
            if parent is not None:
                low[parent] = min(low[parent], low[u])
                if parent == root:
                    root_children += 1
                elif low[u] >= disc[parent]:
                    points.add(parent)
        if root_children > 1:
            points.add(root)
    return points


def two_connected_witness(graph: CriteriaGraph) -> Optional[tuple]:
    """None if 2-connected, else ('disconnected',) or ('cut-vertex', v)."""
    adj = graph.neighbors()
    if len(adj) <= 1:
        return None
    if not _is_connected(adj):
        return ("disconnected",)
    pts = articulation_points(adj)
    if pts:
        return ("cut-vertex", min(pts))
    return None


def is_doubly_two_connected(graph: CriteriaGraph) -> bool:
    """Connected after deleting any one vertex from each partition block."""
    if graph.partition is None:
        raise DiagramError("doubly-2-connected test needs a partition")
    return doubly_two_connected_witness(graph) is None


def doubly_two_connected_witness(graph: CriteriaGraph) -> Optional[tuple[Vertex, Vertex]]:
    """First vertex pair (one per block) whose deletion disconnects, if any."""
    if graph.partition is None:
        raise DiagramError("doubly-2-connected test needs a partition")
    adj = graph.neighbors()
    lo, hi = graph.partition
    for a in sorted(lo):
        for b in sorted(hi):
            if not _is_connected(adj, frozenset((a, b))):
                return (a, b)
    return None


# -- analysis context --------------------------------------------------------


class CriteriaContext:
    """Cut components and rectangle indexes of one diagram, computed once."""

    def __init__(self, diagram: Diagram):
        self.diagram = diagram
        self.comps_a = cut_components(diagram, FAMILY_A)
        self.comps_b = cut_components(diagram, FAMILY_B)
        self.m = len(self.comps_a)
        self.m_star = len(self.comps_b)
        self.n = len(diagram.a_words)
        self.n_star = len(diagram.b_words)

        face_to_l = {}
        for comp in self.comps_b:
            for fi in comp.faces:
                face_to_l[fi] = comp.index

        # a-side pair -> l -> set of b-side pairs
        self.rect_index: dict = {}
        for face, rtype in rectangle_faces(diagram):
            l = face_to_l[face.index]
            self.rect_index.setdefault(rtype.a_sides, {}).setdefault(l, set()).add(
                rtype.b_sides
            )

        # (axis, end_minus, end_plus) -> l -> set of b-side pairs
        self.composed_index: dict = {}
        for ctype, f_minus, f_plus in composed_rectangles(diagram, FAMILY_A):
            l = face_to_l[f_minus.index]
            if face_to_l[f_plus.index] != l:
                raise DiagramError("composed rectangle straddles cut components")
            key = (ctype.axis, ctype.end_minus, ctype.end_plus)
            self.composed_index.setdefault(key, {}).setdefault(l, set()).add(
                ctype.b_sides
            )

    def a_set(self, k: int) -> frozenset:
        if not 1 <= k <= self.m:
            raise DiagramError(f"component index {k} out of range 1..{self.m}")
        return self.comps_a[k - 1].a_set

    def a_star_set(self, l: int) -> frozenset:
        if not 1 <= l <= self.m_star:
            raise DiagramError(f"component index {l} out of range 1..{self.m_star}")
        return self.comps_b[l - 1].a_set

    def k_of(self, disk: int, side: int) -> int:
        for comp in self.comps_a:
            if (disk, side) in comp.a_set:
                return comp.index
        raise DiagramError(f"({disk},{side_str(side)}) not on any component")

    def lambda_of(self, disk: int, side: int) -> frozenset:
        k = self.k_of(disk, side)
        return frozenset(self.a_set(k) - {(disk, side)})

    # -- graph builders ----------------------------------------------------

    def detail_graph(self, k: int, l: int, p: Vertex, q: Vertex) -> CriteriaGraph:
        a_k = self.a_set(k)
        if p not in a_k or q not in a_k:
            raise DiagramError(f"{p} or {q} is not in A_{k}")
        vertices = self.a_star_set(l)
        pairs = self.rect_index.get((p, q) if p <= q else (q, p), {}).get(l, ())
        edges = [bp for bp in pairs if bp[0] != bp[1]]
        for u, v in edges:
            if u not in vertices or v not in vertices:
                raise DiagramError("rectangle crosses its own cut component")
        return graph_from_edges(edges, vertices=vertices)

    def component_graph(self, k: int) -> CriteriaGraph:
        a_k = sorted(self.a_set(k))
        edges = []
        for i, p in enumerate(a_k):
            for q in a_k[i + 1:]:
                if all(
                    is_two_connected(self.detail_graph(k, l, p, q))
                    for l in range(1, self.m_star + 1)
                ):
                    edges.append((p, q))
        return graph_from_edges(edges, vertices=a_k)

    def cross_detail_graph(
        self, l: int, disk: int, end_minus: Vertex, end_plus: Vertex
    ) -> CriteriaGraph:
        if end_minus not in self.lambda_of(disk, MINUS):
            raise DiagramError(f"{end_minus} is not in Lambda_({disk},-)")
        if end_plus not in self.lambda_of(disk, PLUS):
            raise DiagramError(f"{end_plus} is not in Lambda_({disk},+)")
        vertices = self.a_star_set(l)
        pairs = self.composed_index.get((disk, end_minus, end_plus), {}).get(l, ())
        edges = [bp for bp in pairs if bp[0] != bp[1]]
        return graph_from_edges(edges, vertices=vertices)

    def disk_graph(self, disk: int) -> CriteriaGraph:
        if not 1 <= disk <= self.n:
            raise DiagramError(f"disk index {disk} out of range 1..{self.n}")
        lam_minus = sorted(self.lambda_of(disk, MINUS))
        lam_plus = sorted(self.lambda_of(disk, PLUS))
        block_minus = frozenset((MINUS,) + p for p in lam_minus)
        block_plus = frozenset((PLUS,) + p for p in lam_plus)
        edges = []
        for kappa, lam in ((MINUS, lam_minus), (PLUS, lam_plus)):
            k = self.k_of(disk, kappa)
            for i, p in enumerate(lam):
                for q in lam[i + 1:]:
                    if all(
                        is_two_connected(self.detail_graph(k, l, p, q))
                        for l in range(1, self.m_star + 1)
                    ):
                        edges.append(((kappa,) + p, (kappa,) + q))
        for p in lam_minus:
            for q in lam_plus:
                if all(
                    is_two_connected(self.cross_detail_graph(l, disk, p, q))
                    for l in range(1, self.m_star + 1)
                ):
                    edges.append(((MINUS,) + p, (PLUS,) + q))
        return graph_from_edges(
            edges,
            vertices=block_minus | block_plus,
            partition=(block_minus, block_plus),
        )

    def first_failing_l_detail(self, k: int, p: Vertex, q: Vertex) -> Optional[int]:
        for l in range(1, self.m_star + 1):
            if not is_two_connected(self.detail_graph(k, l, p, q)):
                return l
        return None

    def first_failing_l_cross(
        self, disk: int, end_minus: Vertex, end_plus: Vertex
    ) -> Optional[int]:
        for l in range(1, self.m_star + 1):
            if not is_two_connected(self.cross_detail_graph(l, disk, end_minus, end_plus)):
                return l
        return None


# -- public graph builders ----------------------------------------------------


def graph_G(diagram: Diagram, k: int, l: int, p: Vertex, q: Vertex) -> CriteriaGraph:
    """Edges = b-side pairs of rectangles with a-sides {p, q} in component l."""
    return CriteriaContext(diagram).detail_graph(k, l, p, q)


def graph_Gk(diagram: Diagram, k: int) -> CriteriaGraph:
    """Graph on A_k; an edge needs a 2-connected detail graph for every l."""
    return CriteriaContext(diagram).component_graph(k)


def graph_H(diagram: Diagram, l: int, disk: int, end_minus: Vertex, end_plus: Vertex) -> CriteriaGraph:
    """Edges = b-side pairs of composed rectangles with the given axis data."""
    return CriteriaContext(diagram).cross_detail_graph(l, disk, end_minus, end_plus)


def graph_Hd(diagram: Diagram, disk: int) -> CriteriaGraph:
    """Side-tagged graph over both punctured label sets of one disk."""
    return CriteriaContext(diagram).disk_graph(disk)


# -- verdicts ------------------------------------------------------------------


@dataclass(frozen=True)
class MissingType:
    """A rectangle or composed-rectangle type whose absence broke an edge."""

    kind: str  # "rectangle" | "composed-rectangle"
    a_data: tuple
    first_failing_l: Optional[int]
    failing_vertex: Optional[tuple]

    def describe(self) -> str:
        if self.kind == "rectangle":
            (i, e), (j, dl) = self.a_data
            head = f"rectangle of type ((D_{i},{side_str(e)}),(D_{j},{side_str(dl)}); .,.)"
        else:
            (i, e), d, (j, dl) = self.a_data
            head = (
                f"composed rectangle of type ((D_{i},{side_str(e)}),"
                f"D_{d},(D_{j},{side_str(dl)}); .,.)"
            )
        tail = ""
        if self.first_failing_l is not None:
            tail = f" [detail graph fails first at l={self.first_failing_l}"
            if self.failing_vertex is not None:
                tail += f", vertex {_fmt_vertex(self.failing_vertex)}"
            tail += "]"
        return "missing " + head + tail


@dataclass(frozen=True)
class Witness:
    """One failure record of a criterion."""

    kind: str  # "rc" | "drc"
    swapped: bool  # True when the families were exchanged for this check
    index: int  # failing component index k, or disk index d
    reason: str  # "disconnected" | "cut-vertex" | "pair"
    vertices: tuple
    missing: tuple = ()

    def describe(self) -> str:
        where = "after switching the families, " if self.swapped else ""
        if self.kind == "rc":
            head = f"{where}G_{self.index} is not 2-connected"
        else:
            head = f"{where}H_{self.index} is not doubly 2-connected"
        if self.reason == "disconnected":
            head += " (already disconnected)"
        elif self.vertices:
            head += f" (delete {', '.join(_fmt_vertex(v) for v in self.vertices)})"
        return head


def _fmt_vertex(v: tuple) -> str:
    if len(v) == 2:
        return f"({v[0]},{side_str(v[1])})"
    if len(v) == 3:
        return f"({side_str(v[0])};{v[1]},{side_str(v[2])})"
    return str(v)


@dataclass(frozen=True)
class Verdict:
    """Boolean outcome plus machine-readable witnesses."""

    holds: bool
    witnesses: tuple[Witness, ...]
    note: str = ""

    def __post_init__(self):
        if self.holds != (not self.witnesses):
            raise DiagramError("verdict boolean must match witness emptiness")


NOTE_RC = "the Heegaard splitting is strongly irreducible"
NOTE_DRC = "the Goeritz group of the Heegaard splitting is finite"


def rectangle_condition(diagram: Diagram, ctx: Optional[CriteriaContext] = None) -> Verdict:
    """Holds iff the component graph G_k is 2-connected for every k."""
    ctx = ctx or CriteriaContext(diagram)
    witnesses = []
    for k in range(1, ctx.m + 1):
        gk = ctx.component_graph(k)
        failure = two_connected_witness(gk)
        if failure is None:
            continue
        if failure[0] == "disconnected":
            reason, verts = "disconnected", ()
        else:
            reason, verts = "cut-vertex", (failure[1],)
        missing = _missing_rc_types(ctx, k, gk, verts)
        witnesses.append(
            Witness("rc", False, k, reason, verts, missing)
        )
    holds = not witnesses
    return Verdict(holds, tuple(witnesses), NOTE_RC if holds else "")


def _missing_rc_types(ctx, k, gk, deleted, cap=6):
    """Absent edges of G_k that would reconnect it, as missing rectangle types."""
    adj = gk.neighbors()
    removed = frozenset(deleted)
    comps = _connected_parts(adj, removed)
    missing = []
    for ci in range(len(comps)):
        for cj in range(ci + 1, len(comps)):
            for p in sorted(comps[ci]):
                for q in sorted(comps[cj]):
                    l_fail = ctx.first_failing_l_detail(k, *sorted((p, q)))
                    vert = None
                    if l_fail is not None:
                        w = two_connected_witness(ctx.detail_graph(k, l_fail, p, q))
                        vert = w[1] if w and len(w) > 1 else None
                    missing.append(
                        MissingType("rectangle", tuple(sorted((p, q))), l_fail, vert)
                    )
                    if len(missing) >= cap:
                        return tuple(missing)
    return tuple(missing)


def _connected_parts(adj, removed):
    seen = set(removed)
    parts = []
    for v in sorted(adj):
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        parts.append(comp)
    return parts


def double_rectangle_condition(diagram: Diagram) -> Verdict:
    """Holds iff every disk graph H_d is doubly 2-connected, both ways round.

    The condition is checked on the diagram as given and on the diagram with
    the families exchanged; witnesses record which direction failed.  Disk
    graphs that pass the pairwise-deletion test without being connected are
    flagged in the note, since stronger readings would reject them.
    """
    witnesses = []
    borderline = []
    for swapped, d in ((False, diagram), (True, diagram.swap_roles())):
        ctx = CriteriaContext(d)
        for disk in range(1, ctx.n + 1):
            hd = ctx.disk_graph(disk)
            pair = doubly_two_connected_witness(hd)
            if pair is None:
                if not _is_connected(hd.neighbors()):
                    tag = "families switched, " if swapped else ""
                    borderline.append(f"{tag}H_{disk}")
                continue
            missing = _missing_drc_types(ctx, disk, hd, pair)
            witnesses.append(Witness("drc", swapped, disk, "pair", pair, missing))
    holds = not witnesses
    note = NOTE_DRC if holds else ""
    if borderline:
        flag = (
            "informational: the pairwise-deletion reading holds on a "
            "disconnected graph for " + "; ".join(borderline)
        )
        note = f"{note} ({flag})" if note else flag
    return Verdict(holds, tuple(witnesses), note)


def _missing_drc_types(ctx, disk, hd, pair, cap=6):
    """Absent edges of H_d - pair that would reconnect it, typed per block."""
    adj = hd.neighbors()
    comps = _connected_parts(adj, frozenset(pair))
    missing = []
    for ci in range(len(comps)):
        for cj in range(ci + 1, len(comps)):
            for u in sorted(comps[ci]):
                for v in sorted(comps[cj]):
                    if u[0] == v[0]:
                        k = ctx.k_of(disk, u[0])
                        p, q = sorted((u[1:], v[1:]))
                        l_fail = ctx.first_failing_l_detail(k, p, q)
                        vert = None
                        if l_fail is not None:
                            w = two_connected_witness(ctx.detail_graph(k, l_fail, p, q))
                            vert = w[1] if w and len(w) > 1 else None
                        missing.append(MissingType("rectangle", (p, q), l_fail, vert))
                    else:
                        em, ep = (u, v) if u[0] == MINUS else (v, u)
                        l_fail = ctx.first_failing_l_cross(disk, em[1:], ep[1:])
                        vert = None
                        if l_fail is not None:
                            w = two_connected_witness(
                                ctx.cross_detail_graph(l_fail, disk, em[1:], ep[1:])
                            )
                            vert = w[1] if w and len(w) > 1 else None
                        missing.append(
                            MissingType(
                                "composed-rectangle",
                                (em[1:], disk, ep[1:]),
                                l_fail,
                                vert,
                            )
                        )
                    if len(missing) >= cap:
                        return tuple(missing)
    return tuple(missing)
