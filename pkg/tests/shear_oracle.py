"""Exact-rational annulus model of the twisted diagram, built from geometry.

Every crossing of (disks, twisted disks) lies in an annulus around gamma,
so the whole twisted diagram can be computed inside the annulus universal
cover: disk strands are vertical segments at integer positions, the
twisted curves are straight lines climbing across the strip while drifting
one period per lap.  Crossbetween are found by solving line equations over
Fractions; nothing here shares code with the splice implementation.
"""

from __future__ import annotations

from fractions import Fraction

PLUS, MINUS = 1, -1


class OracleError(AssertionError):
    pass


def _dual(disk: str) -> str:
    return "e" + disk[1:] if disk.startswith("d") else disk + "*"


def shear_model(base, power: int):
    """Words and signs of the twisted diagram, from exact line geometry.

    `base` is a multicurve map (disk words, one gamma word, signs); the
    return value is (a_words, b_words, signs) of the disks together with
    the images of their plus-side push-offs under `power` annulus twists.
    """
    if power == 0:
        raise OracleError("power must be nonzero")
    gamma = base.b_words["gamma"]
    w = len(gamma)
    slot = {x: i for i, x in enumerate(gamma)}
    sign_of = {x: base.crossings[x].sign for x in base.crossings}
    drift = w * power  # signed total horizontal travel of each line

    # vertical strands: x = slot, traversed downward when the sign is +
    # lines: from (x0, -1) to (x0 + drift, +1), x0 = slot +- 1/4 (push-off)
    lines = {}  # parent crossing -> x0
    for x in base.crossings:
        off = Fraction(1, 4) if sign_of[x] == PLUS else Fraction(-1, 4)
        lines[x] = Fraction(slot[x]) + off
    if len(set(v % w for v in lines.values())) != len(lines):
        raise OracleError("push-off lines collide")

    on_strand = {x: [] for x in base.crossings}  # vertical -> [(u, id)]
    on_line = {x: [] for x in base.crossings}  # parent -> [(u, id)]
    signs = {}
    pair_of = {}
    disk_of_strand = {}
    for disk, word in base.a_words.items():
        for x in word:
            disk_of_strand[x] = disk

    for parent, x0 in lines.items():
        b_curve = _dual(disk_of_strand[parent])
        for strand in base.crossings:
            s = slot[strand]
            # x0 + drift*(u+1)/2 = s + k*w  with  -1 < u < 1
            # (u+1)/2 in (0,1)  =>  k ranges over one period worth of hits
            for k in range(-abs(power) - 2, abs(power) + 3):
                num = Fraction(s + k * w) - x0
                frac = num / drift  # = (u+1)/2
                if not (0 < frac < 1):
                    continue
                u = 2 * frac - 1
                cid = f"o_{parent}_{strand}_{k}"
                dir_a_u = -1 if sign_of[strand] == PLUS else 1
                # traversal of the line follows the push-off's parent strand
                down = sign_of[parent] == PLUS
                dir_b_x = -drift if down else drift
                det = -dir_a_u * dir_b_x
                signs[cid] = PLUS if det > 0 else MINUS
                pair_of[cid] = (disk_of_strand[strand], b_curve)
                on_strand[strand].append((u, cid))
                on_line[parent].append((u, cid))

    a_words = {}
    for disk, word in base.a_words.items():
        out = []
        for strand in word:
            events = sorted(on_strand[strand])
            if sign_of[strand] == PLUS:  # downward: decreasing u
                events = events[::-1]
            out.extend(c for _, c in events)
        a_words[disk] = tuple(out)
    b_words = {}
    for disk, word in base.a_words.items():
        out = []
        for parent in word:
            events = sorted(on_line[parent])
            if sign_of[parent] == PLUS:
                events = events[::-1]
            out.extend(c for _, c in events)
        b_words[_dual(disk)] = tuple(out)
    return a_words, b_words, signs


# -- independent map assembly -------------------------------------------------


class FlatMap:
    """Minimal two-family map: faces, genus, bigon removal; no shared code."""

    def __init__(self, a_words, b_words, signs):
        self.a_words = {c: list(w) for c, w in a_words.items()}
        self.b_words = {c: list(w) for c, w in b_words.items()}
        self.signs = dict(signs)

    def _succ(self):
        """next[(crossing, port)] -> (crossing, port) walking face corners."""
        a_next, a_prev = {}, {}
        for word in self.a_words.values():
            n = len(word)
            for i, x in enumerate(word):
                a_next[x] = word[(i + 1) % n]
                a_prev[x] = word[(i - 1) % n]
        b_next, b_prev = {}, {}
        for word in self.b_words.values():
            n = len(word)
            for i, x in enumerate(word):
                b_next[x] = word[(i + 1) % n]
                b_prev[x] = word[(i - 1) % n]

        # ports: ao, bo, ai, bi; counterclockwise order by sign
        ccw = {}
        for x, s in self.signs.items():
            order = ("ao", "bo", "ai", "bi") if s == PLUS else ("ao", "bi", "ai", "bo")
            for i, p in enumerate(order):
                ccw[(x, order[(i - 1) % 4])] = (x, p)  # clockwise = ccw inverse
        mate = {}
        for x in self.signs:
            mate[(x, "ao")] = (a_next[x], "ai")
            mate[(x, "ai")] = (a_prev[x], "ao")
            mate[(x, "bo")] = (b_next[x], "bi")
            mate[(x, "bi")] = (b_prev[x], "bo")
        return ccw, mate

    def faces(self):
        ccw, mate = self._succ()
        seen = set()
        out = []
        for start in mate:
            if start in seen:
                continue
            orbit = []
            p = start
            while p not in seen:
                seen.add(p)
                orbit.append(p)
                p = ccw[mate[p]]  # arrive, then turn clockwise one port
            out.append(orbit)
        return out

    def genus(self):
        v = len(self.signs)
        f = len(self.faces())
        return (2 - (v - 2 * v + f)) // 2

    def remove_bigons(self):
        removed = 0
        while True:
            bigon = None
            for orbit in self.faces():
                if len(orbit) == 2:
                    bigon = {x for x, _ in orbit}
                    break
            if bigon is None:
                return removed
            if len(bigon) != 2:
                raise OracleError("degenerate bigon")
            for words in (self.a_words, self.b_words):
                for c in words:
                    words[c] = [x for x in words[c] if x not in bigon]
                    if not words[c]:
                        raise OracleError("curve eliminated")
            for x in bigon:
                del self.signs[x]
            removed += 1

    def pair_counts(self):
        a_of, b_of = {}, {}
        for c, w in self.a_words.items():
            for x in w:
                a_of[x] = c
        for c, w in self.b_words.items():
            for x in w:
                b_of[x] = c
        counts = {}
        for x in self.signs:
            key = (a_of[x], b_of[x])
            counts[key] = counts.get(key, 0) + 1
        return counts


def oracle_intersections(base, power: int):
    """Pairwise geometric intersection numbers of the twisted diagram."""
    a_words, b_words, signs = shear_model(base, power)
    m = FlatMap(a_words, b_words, signs)
    expected_genus = base.genus
    removed = m.remove_bigons()
    if m.genus() != expected_genus:
        raise OracleError(f"oracle model has genus {m.genus()}, base {expected_genus}")
    return m.pair_counts(), removed
