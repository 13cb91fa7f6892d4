"""Combinatorial maps of two transverse curve families on a closed oriented surface.

A diagram is encoded Gauss-code style: every curve is a cyclic word of
crossing ids, every crossing carries a sign recording the local rotation.
The surface is *defined* by the map; faces and genus are derived, never
given as input.

Conventions (fixed once, everything else follows):

* Each crossing has four darts, numbered by port::

      0 = a_out   1 = b_out   2 = a_in   3 = b_in

  "a" is the strand of the first family (disks, signed in files), "b" the
  strand of the second family (dual disks, or the auxiliary curve of a
  multicurve map).  "in"/"out" are relative to the curve orientations.

* At a crossing of sign ``+1`` the counterclockwise dart order is
  ``(a_out, b_out, a_in, b_in)``; at sign ``-1`` it is
  ``(a_out, b_in, a_in, b_out)``.  Equivalently the sign is the sign of
  ``det(a_direction, b_direction)``.

* The plus side of a curve is its left side with respect to the traversal
  direction and the counterclockwise surface orientation.  With that
  convention, the face on the left of a boundary arc starting at an "out"
  port lies on the plus side of the strand, and on the minus side for an
  "in" port.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

MINUS = -1
PLUS = 1

FAMILY_A = "A"
FAMILY_B = "B"

_A_OUT, _B_OUT, _A_IN, _B_IN = 0, 1, 2, 3


class DiagramError(ValueError):
    """Raised for malformed diagram data."""


def side_str(side: int) -> str:
    return "+" if side > 0 else "-"


@dataclass(frozen=True)
class Crossing:
    """One transverse intersection point of an a-curve with a b-curve."""

    id: str
    a_curve: str
    b_curve: str
    sign: int

    def __post_init__(self):
        if self.sign not in (MINUS, PLUS):
            raise DiagramError(f"crossing {self.id}: sign must be +1 or -1")


@dataclass(frozen=True)
class FaceSide:
    """One boundary arc of a face: the face lies on `side` of `curve`."""

    family: str
    curve: str
    side: int


@dataclass(frozen=True)
class Face:
    """A complementary region of the diagram, as a cyclic sequence of arcs.

    `darts` are the start darts of the boundary arcs, in order, rotated so
    the smallest dart comes first.  The face interior is on the left of
    every boundary arc.
    """

    index: int
    darts: tuple[int, ...]
    sides: tuple[FaceSide, ...]

    @property
    def degree(self) -> int:
        return len(self.darts)


class Diagram:
    """Immutable two-family curve diagram on a closed oriented surface.

    `a_words` / `b_words` map curve ids to cyclic tuples of crossing ids.
    Every crossing id must occur exactly once among the a-words and exactly
    once among the b-words.  `aux` marks a multicurve map whose b-family is
    a single auxiliary curve rather than a second disk system.
    """

    def __init__(
        self,
        a_words: Mapping[str, Sequence[str]],
        b_words: Mapping[str, Sequence[str]],
        signs: Mapping[str, int],
        aux: bool = False,
    ):
        self.a_words: dict[str, tuple[str, ...]] = {
            c: tuple(w) for c, w in sorted(a_words.items())
        }
        self.b_words: dict[str, tuple[str, ...]] = {
            c: tuple(w) for c, w in sorted(b_words.items())
        }
        self.aux = aux
        self._check_words()

        a_of: dict[str, str] = {}
        b_of: dict[str, str] = {}
        for curve, word in self.a_words.items():
            for x in word:
                a_of[x] = curve
        for curve, word in self.b_words.items():
            for x in word:
                b_of[x] = curve
        self.crossings: dict[str, Crossing] = {
            x: Crossing(x, a_of[x], b_of[x], signs[x]) for x in sorted(a_of)
        }

        self._crossing_ids: tuple[str, ...] = tuple(sorted(self.crossings))
        self._cindex = {x: i for i, x in enumerate(self._crossing_ids)}
        self._build_map()

    # -- construction ------------------------------------------------------

    def _check_words(self):
        if not self.a_words:
            raise DiagramError("empty first curve family")
        if not self.b_words:
            raise DiagramError("empty second curve family")
        if self.aux and len(self.b_words) != 1:
            raise DiagramError("a multicurve map has exactly one auxiliary curve")
        dup = set(self.a_words) & set(self.b_words)
        if dup:
            raise DiagramError(f"curve ids used in both families: {sorted(dup)}")
        seen_a: set[str] = set()
        for curve, word in self.a_words.items():
            if not word:
                raise DiagramError(f"curve {curve} has an empty word")
            for x in word:
                if x in seen_a:
                    raise DiagramError(f"crossing {x} occurs twice in the first family")
                seen_a.add(x)
        seen_b: set[str] = set()
        for curve, word in self.b_words.items():
            if not word:
                raise DiagramError(f"curve {curve} has an empty word")
            for x in word:
                if x in seen_b:
                    raise DiagramError(f"crossing {x} occurs twice in the second family")
                seen_b.add(x)
        if seen_a != seen_b:
            missing = seen_a ^ seen_b
            raise DiagramError(f"crossing occurrences do not match up: {sorted(missing)}")

    def _build_map(self):
        n = len(self._crossing_ids)
        nd = 4 * n
        sigma = [0] * nd
        sigma_inv = [0] * nd
        for x, ci in self._cindex.items():
            base = 4 * ci
            if self.crossings[x].sign == PLUS:
                order = (_A_OUT, _B_OUT, _A_IN, _B_IN)
            else:
                order = (_A_OUT, _B_IN, _A_IN, _B_OUT)
            for j in range(4):
                d = base + order[j]
                e = base + order[(j + 1) % 4]
                sigma[d] = e
                sigma_inv[e] = d
        alpha = [0] * nd
        for word in self.a_words.values():
            m = len(word)
            for t in range(m):
                x, y = word[t], word[(t + 1) % m]
                alpha[4 * self._cindex[x] + _A_OUT] = 4 * self._cindex[y] + _A_IN
                alpha[4 * self._cindex[y] + _A_IN] = 4 * self._cindex[x] + _A_OUT
        for word in self.b_words.values():
            m = len(word)
            for t in range(m):
                x, y = word[t], word[(t + 1) % m]
                alpha[4 * self._cindex[x] + _B_OUT] = 4 * self._cindex[y] + _B_IN
                alpha[4 * self._cindex[y] + _B_IN] = 4 * self._cindex[x] + _B_OUT
        self._sigma = sigma
        self._sigma_inv = sigma_inv
        self._alpha = alpha

        if not self._connected():
            raise DiagramError("disconnected diagram unsupported")

        self._faces = self._trace_faces()
        self._face_of_dart = [0] * nd
        for f in self._faces:
            for d in f.darts:
                self._face_of_dart[d] = f.index

        v, e, f = n, 2 * n, len(self._faces)
        chi = v - e + f
        if chi % 2 != 0 or chi > 2:
            raise DiagramError(f"corrupted map: Euler characteristic {chi}")
        self._genus = (2 - chi) // 2

    def _connected(self) -> bool:
        nd = 4 * len(self._crossing_ids)
        if nd == 0:
            return False
        seen = [False] * nd
        stack = [0]
        seen[0] = True
        while stack:
            d = stack.pop()
            for e in (self._sigma[d], self._alpha[d]):
                if not seen[e]:
                    seen[e] = True
                    stack.append(e)
        return all(seen)

    def _trace_faces(self) -> tuple[Face, ...]:
        nd = 4 * len(self._crossing_ids)
        seen = [False] * nd
        faces = []
        for start in range(nd):
            if seen[start]:
                continue
            orbit = []
            d = start
            while not seen[d]:
                seen[d] = True
                orbit.append(d)
                d = self._sigma_inv[self._alpha[d]]
            sides = tuple(self._dart_side(p) for p in orbit)
            faces.append(Face(len(faces), tuple(orbit), sides))
        return tuple(faces)

    def _dart_side(self, d: int) -> FaceSide:
        x = self._crossing_ids[d // 4]
        port = d % 4
        cr = self.crossings[x]
        if port in (_A_OUT, _A_IN):
            family, curve = FAMILY_A, cr.a_curve
        else:
            family, curve = FAMILY_B, cr.b_curve
        side = PLUS if port in (_A_OUT, _B_OUT) else MINUS
        return FaceSide(family, curve, side)

    # -- basic queries -----------------------------------------------------

    @property
    def genus(self) -> int:
        return self._genus

    @property
    def faces(self) -> tuple[Face, ...]:
        return self._faces

    @property
    def num_crossings(self) -> int:
        return len(self.crossings)

    def crossing_ids(self) -> tuple[str, ...]:
        return self._crossing_ids

    def curve_family(self, curve: str) -> str:
        if curve in self.a_words:
            return FAMILY_A
        if curve in self.b_words:
            return FAMILY_B
        raise DiagramError(f"unknown curve id {curve!r}")

    def word(self, curve: str) -> tuple[str, ...]:
        if curve in self.a_words:
            return self.a_words[curve]
        if curve in self.b_words:
            return self.b_words[curve]
        raise DiagramError(f"unknown curve id {curve!r}")

    def a_curve_ids(self) -> tuple[str, ...]:
        return tuple(self.a_words)

    def b_curve_ids(self) -> tuple[str, ...]:
        return tuple(self.b_words)

    def curve_index(self, curve: str) -> int:
        """1-based index of a curve within its own family (sorted by id)."""
        fam = self.curve_family(curve)
        ids = self.a_curve_ids() if fam == FAMILY_A else self.b_curve_ids()
        return ids.index(curve) + 1

    def face_of_dart(self, d: int) -> int:
        return self._face_of_dart[d]

    def dart(self, crossing: str, port: int) -> int:
        return 4 * self._cindex[crossing] + port

    def mate(self, d: int) -> int:
        """The other dart of the same edge."""
        return self._alpha[d]

    def dart_crossing(self, d: int) -> str:
        return self._crossing_ids[d // 4]

    def dart_side(self, d: int) -> FaceSide:
        return self._dart_side(d)

    def a_edges(self) -> Iterator[tuple[str, str, str]]:
        """Yield (curve, x, y) for every edge of the first family, x -> y."""
        for curve, word in self.a_words.items():
            m = len(word)
            for t in range(m):
                yield curve, word[t], word[(t + 1) % m]

    def b_edges(self) -> Iterator[tuple[str, str, str]]:
        for curve, word in self.b_words.items():
            m = len(word)
            for t in range(m):
                yield curve, word[t], word[(t + 1) % m]

    def bigon_faces(self) -> tuple[Face, ...]:
        return tuple(f for f in self._faces if f.degree == 2)

    def is_bigon_free(self) -> bool:
        return not self.bigon_faces()

    # -- transformations ---------------------------------------------------

    def swap_roles(self) -> "Diagram":
        """Exchange the two families.  Crossing signs flip under the swap."""
        if self.aux:
            raise DiagramError("cannot swap the families of a multicurve map")
        signs = {x: -cr.sign for x, cr in self.crossings.items()}
        return Diagram(self.b_words, self.a_words, signs)

    def reverse_curve(self, curve: str) -> "Diagram":
        """Reverse the orientation of one curve; its crossing signs flip."""
        fam = self.curve_family(curve)
        a_words = dict(self.a_words)
        b_words = dict(self.b_words)
        if fam == FAMILY_A:
            a_words[curve] = tuple(reversed(a_words[curve]))
        else:
            b_words[curve] = tuple(reversed(b_words[curve]))
        signs = {
            x: (-cr.sign if curve in (cr.a_curve, cr.b_curve) else cr.sign)
            for x, cr in self.crossings.items()
        }
        return Diagram(a_words, b_words, signs, aux=self.aux)

    def relabel_crossings(self, mapping: Mapping[str, str]) -> "Diagram":
        if len(set(mapping.values())) != len(mapping):
            raise DiagramError("crossing relabeling is not a bijection")
        a_words = {c: tuple(mapping[x] for x in w) for c, w in self.a_words.items()}
        b_words = {c: tuple(mapping[x] for x in w) for c, w in self.b_words.items()}
        signs = {mapping[x]: cr.sign for x, cr in self.crossings.items()}
        return Diagram(a_words, b_words, signs, aux=self.aux)

    # -- bigon reduction ----------------------------------------------------

    def reduce_bigons(self) -> "Diagram":
        """Remove bigon faces one at a time until none remain.

        Always reduces the bigon with the smallest face index first, so the
        result is deterministic.  Genus is preserved at every step; a curve
        whose word would become empty signals a non-essential configuration.
        """
        d = self
        while True:
            bigons = d.bigon_faces()
            if not bigons:
                return d
            d = d._remove_bigon(bigons[0])

    def _remove_bigon(self, face: Face) -> "Diagram":
        corners = {self.dart_crossing(p) for p in face.darts}
        if len(corners) != 2:
            raise DiagramError("degenerate bigon with identified corners")
        x, y = sorted(corners)
        a_words = {}
        for c, w in self.a_words.items():
            nw = tuple(z for z in w if z not in (x, y))
            if not nw:
                raise DiagramError(f"curve eliminated: {c} meets the rest only in a bigon")
            a_words[c] = nw
        b_words = {}
        for c, w in self.b_words.items():
            nw = tuple(z for z in w if z not in (x, y))
            if not nw:
                raise DiagramError(f"curve eliminated: {c} meets the rest only in a bigon")
            b_words[c] = nw
        signs = {z: cr.sign for z, cr in self.crossings.items() if z not in (x, y)}
        out = Diagram(a_words, b_words, signs, aux=self.aux)
        if out.genus != self.genus:
            raise DiagramError("bigon removal changed the genus; corrupted map")
        return out

    # -- isomorphism --------------------------------------------------------

    def canonical_certificate(self) -> tuple:
        """A relabeling-invariant certificate of the diagram.

        Two diagrams with the same curve ids are isomorphic (equal up to a
        bijection of crossing ids) iff their certificates are equal.  The
        certificate is the lexicographic minimum of a deterministic
        traversal normal form recording signs, curve ids and port
        structure, over all roots in the rarest dart color class (a class
        chosen the same way in any isomorphic diagram).
        """
        nd = 4 * len(self._crossing_ids)
        colors: dict[tuple, list[int]] = {}
        for d in range(nd):
            cr = self.crossings[self.dart_crossing(d)]
            colors.setdefault((d % 4, cr.sign, cr.a_curve, cr.b_curve), []).append(d)
        roots = colors[min(colors, key=lambda c: (len(colors[c]), c))]
        best = None
        for root in roots:
            cert = self._rooted_certificate(root)
            if best is None or cert < best:
                best = cert
        return best

    def _rooted_certificate(self, root: int) -> tuple:
        order: list[int] = []
        number: dict[int, int] = {}
        stack = [root]
        while stack:
            d = stack.pop()
            if d in number:
                continue
            number[d] = len(order)
            order.append(d)
            stack.append(self._alpha[d])
            stack.append(self._sigma[d])
        sig = tuple(number[self._sigma[d]] for d in order)
        alp = tuple(number[self._alpha[d]] for d in order)
        colors = []
        for d in order:
            cr = self.crossings[self.dart_crossing(d)]
            colors.append((d % 4, cr.sign, cr.a_curve, cr.b_curve))
        return (sig, alp, tuple(colors))

    def is_isomorphic(self, other: "Diagram") -> bool:
        if self.a_curve_ids() != other.a_curve_ids():
            return False
        if self.b_curve_ids() != other.b_curve_ids():
            return False
        if self.num_crossings != other.num_crossings:
            return False
        if (
            self.a_words == other.a_words
            and self.b_words == other.b_words
            and all(
                self.crossings[x].sign == other.crossings[x].sign
                for x in self.crossings
            )
        ):
            return True
        return self.canonical_certificate() == other.canonical_certificate()

    def __repr__(self):
        kind = "MulticurveMap" if self.aux else "Diagram"
        return (
            f"<{kind} genus={self.genus} n={len(self.a_words)} "
            f"n*={len(self.b_words)} crossings={self.num_crossings}>"
        )


def intersection_number(d: Diagram, c1: str, c2: str) -> int:
    """Number of crossings shared by two curves.

    On a bigon-free diagram this equals the geometric intersection number
    for curves in different families; same-family curves are disjoint.
    """
    f1, f2 = d.curve_family(c1), d.curve_family(c2)
    if f1 == f2:
        return 0
    a, b = (c1, c2) if f1 == FAMILY_A else (c2, c1)
    return sum(1 for cr in d.crossings.values() if cr.a_curve == a and cr.b_curve == b)
