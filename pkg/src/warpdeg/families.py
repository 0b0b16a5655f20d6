"""Generators for the diagram families used throughout the package.

Diagrams are assembled as planar port graphs.  A crossing is a square
with ports SW, SE, NE, NW (counterclockwise, slots 0..3); its strands run
along the diagonals SW-NE and SE-NW and a flag says which diagonal is the
overpass.  Twist regions are grown one crossing at a time: a right twist
hooks a new crossing onto the NE/SE corners of the tangle, a bottom twist
onto SW/SE.  Closing the tangle (NW to NE, SW to SE) and walking the
curve yields a PD code whose edge numbering follows the traversal; the
shared PD-to-Gauss converter then produces the signed Gauss code.

The two-parameter family ``rational_pq(p, q)``: p bottom twists applied
to the vertical (infinity) tangle followed by q right twists realize the
continued fraction q + 1/p, so the closure is the two-bridge diagram of
the fraction (pq+1)/p.  In particular (2, n) is the standard (n+2)-crossing
twist knot diagram: a clasp of two crossings plus n half-twists.

``ozawa_twist(n)`` is a different diagram of the same twist knot, drawn
so that one crossing change makes it monotone no matter which
orientation is chosen: the half-twist region is laid out as a nested
spiral that some base point descends completely, in both directions,
except at a single clasp crossing.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .codes import PDCode, pd_to_gauss
from .diagram import OrientedDiagram, from_gauss
from .errors import InternalInconsistency, InvalidParam, NotAKnot

__all__ = ["twist_minimal", "rational_pq", "ozawa_twist", "family_pd"]

# Chirality of new crossings, per twist direction.  True means the SW-NE
# diagonal is the overpass.  The pair is chosen so that every rational
# diagram built here comes out alternating.
_RIGHT_OVER02 = True
_BOTTOM_OVER02 = True

Port = tuple[int, int]  # (crossing id, slot)


@dataclass
class _PortGraph:
    """A partially wired planar diagram under construction."""

    over02: list[bool] = field(default_factory=list)
    links: dict[Port, Port] = field(default_factory=dict)

    def new_crossing(self, over02: bool) -> int:
        self.over02.append(over02)
        return len(self.over02) - 1

    def connect(self, a: Port, b: Port) -> None:
        if a in self.links or b in self.links:
            raise InternalInconsistency(f"port {a} or {b} wired twice")
        self.links[a] = b
        self.links[b] = a

    # -- curve traversal and PD emission ---------------------------------

    def to_pd(self) -> PDCode:
        """Walk the closed curve and emit PD quadruples.

        Edges are numbered 1..2c in traversal order.  Raises NotAKnot if
        the wiring closes into more than one component.
        """
        c = len(self.over02)
        if len(self.links) != 4 * c:
            raise InternalInconsistency("construction left dangling ports")
        edge_at: dict[Port, int] = {}
        entered: dict[Port, bool] = {}
        start = (0, 0)
        here = start
        for edge in range(1, 2 * c + 1):
            # arrive via the link into ``here``, pass through the crossing
            entered[here] = True
            edge_at[here] = edge
            out = (here[0], (here[1] + 2) % 4)
            edge_at[out] = edge % (2 * c) + 1
            here = self.links[out]
        if here != start:
            raise NotAKnot("closure has more than one component")
        if len(entered) != 2 * c:
            raise NotAKnot("closure has more than one component")

        quads = []
        for cid in range(c):
            under_slots = (1, 3) if self.over02[cid] else (0, 2)
            under_in = next(
                s for s in under_slots if entered.get((cid, s), False)
            )
            quads.append(tuple(
                edge_at[(cid, (under_in + k) % 4)] for k in range(4)
            ))
        return PDCode(tuple(sorted(quads)))


class _Tangle:
    """Rational tangle builder over a _PortGraph."""

    def __init__(self, vertical: bool) -> None:
        self.graph = _PortGraph()
        # corner -> ("peer", corner) while still a bare start strand,
        # then ("port", port) once a crossing has been hooked on.
        if vertical:  # infinity tangle: NW-SW and NE-SE strands
            self.corners = {"nw": ("peer", "sw"), "sw": ("peer", "nw"),
                            "ne": ("peer", "se"), "se": ("peer", "ne")}
        else:  # zero tangle: NW-NE and SW-SE strands
            self.corners = {"nw": ("peer", "ne"), "ne": ("peer", "nw"),
                            "sw": ("peer", "se"), "se": ("peer", "sw")}

    def _consume(self, corner: str, port: Port) -> None:
        kind, value = self.corners[corner]
        if kind == "peer":
            self.corners[value] = ("port", port)
        else:
            self.graph.connect(value, port)

    def twist_right(self) -> None:
        cid = self.graph.new_crossing(_RIGHT_OVER02)
        self._consume("ne", (cid, 3))
        self._consume("se", (cid, 0))
        self.corners["ne"] = ("port", (cid, 2))
        self.corners["se"] = ("port", (cid, 1))

    def twist_bottom(self) -> None:
        cid = self.graph.new_crossing(_BOTTOM_OVER02)
        self._consume("sw", (cid, 3))
        self._consume("se", (cid, 2))
        self.corners["sw"] = ("port", (cid, 0))
        self.corners["se"] = ("port", (cid, 1))

    def close_numerator(self) -> PDCode:
        for a, b in (("nw", "ne"), ("sw", "se")):
            ka, va = self.corners[a]
            kb, vb = self.corners[b]
            if ka != "port" or kb != "port":
                raise InternalInconsistency("closing an unbuilt tangle")
            self.graph.connect(va, vb)
        return self.graph.to_pd()


def _continued_fraction_pd(entries: list[int]) -> PDCode:
    """PD code of the numerator closure of the tangle [a1, a2, ..., ak].

    The realized fraction is ak + 1/(a_{k-1} + 1/(... + 1/a1)).  Entries
    must all be >= 1.  Used with k = 2 by the public API; longer vectors
    serve the bundled-data generator.
    """
    if not entries or any(a < 1 for a in entries):
        raise InvalidParam("tangle entries must be integers >= 1")
    k = len(entries)
    # the last entry must land on right twists; parity fixes the start
    tangle = _Tangle(vertical=k % 2 == 0)
    for i, a in enumerate(entries):
        bottoms = (k - i) % 2 == 0  # i counts from 0; last entry is rights
        for _ in range(a):
            if bottoms:
                tangle.twist_bottom()
            else:
                tangle.twist_right()
    return tangle.close_numerator()


def rational_pq(p: int, q: int) -> OrientedDiagram:
    """The standard alternating two-bridge diagram of the fraction (pq+1)/p.

    p and q count the half-twists of the two regions; both must be >= 1.
    Raises NotAKnot when the closure has two components, which happens
    exactly when pq is odd (the fraction numerator pq+1 is even).
    """
    if p < 1 or q < 1:
        raise InvalidParam(f"twist counts must be >= 1, got ({p}, {q})")
    return from_gauss(pd_to_gauss(_continued_fraction_pd([p, q])))


def twist_minimal(n: int) -> OrientedDiagram:
    """Minimal (n+2)-crossing twist knot diagram: a clasp plus n twists."""
    if n < 1:
        raise InvalidParam(f"twist parameter must be >= 1, got {n}")
    return rational_pq(2, n)


def _ozawa_pd(n: int) -> PDCode:
    """PD code of the (2n+1)-crossing both-ways-almost-descending diagram.

    Layout: a horizontal arc passes over stations 1..2n+1 from west to
    east; the return arc comes back under it, visiting the stations in
    the nested zigzag order 1, 2n, 3, 2n-2, 5, ... (odd stations
    ascending interleaved with even stations descending) and arriving
    from the south on odd visits.  The horizontal arc yields only at the
    middle station n+1.  Edge numbering follows the traversal: edge s
    enters station s from the west, and the return arc's m-th visit
    arrives on edge c+m.
    """
    c = 2 * n + 1
    order = [m if m % 2 else c + 1 - m for m in range(1, c + 1)]
    visit = {s: m for m, s in enumerate(order, 1)}
    quads = []
    for s in range(1, c + 1):
        west, east = s, (s + 1 if s < c else c + 1)
        m = visit[s]
        ret_in = c + m
        ret_out = c + m + 1 if m < c else 1
        if s != n + 1:  # horizontal arc on top; return arc goes under
            if m % 2:   # arrives from the south: ccw reads S, E, N, W
                quads.append((ret_in, east, ret_out, west))
            else:       # arrives from the north: ccw reads N, W, S, E
                quads.append((ret_in, west, ret_out, east))
        elif m % 2:     # clasp station, horizontal arc under: W, S, E, N
            quads.append((west, ret_in, east, ret_out))
        else:
            quads.append((west, ret_out, east, ret_in))
    return PDCode(tuple(sorted(quads)))


def ozawa_twist(n: int) -> OrientedDiagram:
    """A twist knot diagram with warping degree 1 for both orientations.

    Same knot as ``twist_minimal(n)`` but drawn with 2n+1 crossings so
    that a single crossing change makes the diagram monotone no matter
    which orientation is chosen: one arc passes over everything except
    one clasp crossing in the middle.  Walking from either end of that
    arc meets only the clasp as a first-visit underpass, in both
    directions, so d(D) = d(-D) = 1 and e(D) = 2.
    """
    if n < 1:
        raise InvalidParam(f"twist parameter must be >= 1, got {n}")
    return from_gauss(pd_to_gauss(_ozawa_pd(n)))


def family_pd(family: str, params) -> PDCode:
    """PD code of a family diagram; used for PD-notation output."""
    if family == "twist":
        if params.n < 1:
            raise InvalidParam(f"twist parameter must be >= 1, got {params.n}")
        return _continued_fraction_pd([2, params.n])
    if family == "rational":
        if params.p < 1 or params.q < 1:
            raise InvalidParam(
                f"twist counts must be >= 1, got ({params.p}, {params.q})"
            )
        return _continued_fraction_pd([params.p, params.q])
    if family == "ozawa":
        if params.n < 1:
            raise InvalidParam(f"twist parameter must be >= 1, got {params.n}")
        return _ozawa_pd(params.n)
    raise InvalidParam(f"no planar construction for family {family!r}")
