"""
Rational tangles, 4-plats (2-bridge links) and their closed-form data.

A tangle vector (a_1, ..., a_n) lists twist boxes from the inside out and
evaluates to the fraction a_n + 1/(a_{n-1} + ... + 1/a_1).  Boxes
alternate between vertical and horizontal twists, every vector ends with
horizontal twists, so box i is horizontal exactly when i and n have the
same parity; builds start from the zero tangle when box 1 is horizontal
and from the infinity tangle when it is vertical.  Closing with the
numerator closure (top ends joined, bottom ends joined) yields the
4-plat.

Diagrams are built unoriented ("shadows") and oriented afterwards, since
crossing signs depend on the strand directions fixed at closure.
Positive entries use one fixed handedness per box axis; signed vectors
(mirrored boxes, as in the nullification-number-one families) are
allowed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagram import DiagramError, LinkDiagram

# Compass layouts, counterclockwise; the over-strand always occupies
# positions 1 and 3.  The two layouts per axis are mirror twists; the
# positive pair is chosen so all-positive vectors build alternating
# diagrams (arcs between consecutive boxes join an over end to an under
# end).
_H_POS = {0: "ES", 1: "EN", 2: "WN", 3: "WS"}  # under-strand runs ES-WN
_H_NEG = {0: "EN", 1: "WN", 2: "WS", 3: "ES"}  # under-strand runs EN-WS
_V_POS = {0: "SE", 1: "NE", 2: "NW", 3: "SW"}  # under-strand runs SE-NW
_V_NEG = {0: "SW", 1: "SE", 2: "NE", 3: "NW"}  # under-strand runs SW-NE


class _Shadow:
    """Unoriented 4-valent map under construction."""

    def __init__(self):
        self.pair = {}
        self.compass = {}
        self._next = 0

    def new_crossing(self, layout):
        c = self._next
        self._next += 1
        self.compass[c] = dict(layout)
        return c

    def port(self, c, role):
        for pos, r in self.compass[c].items():
            if r == role:
                return (c, pos)
        raise KeyError(role)

    def connect(self, a, b):
        if a in self.pair or b in self.pair:
            raise DiagramError("endpoint connected twice")
        if a == b:
            raise DiagramError("endpoint connected to itself")
        self.pair[a] = b
        self.pair[b] = a


class Tangle:
    """A 2-string tangle shadow with open corners NW, NE, SW, SE.

    Each corner holds a crossing endpoint, or is "straight": wired
    directly to another corner with no crossing in between.
    """

    def __init__(self, start="zero", shadow=None):
        self.shadow = shadow if shadow is not None else _Shadow()
        self.ends = {"NW": None, "NE": None, "SW": None, "SE": None}
        if start == "zero":
            self.straight = {frozenset(("NW", "NE")), frozenset(("SW", "SE"))}
        elif start == "infinity":
            self.straight = {frozenset(("NW", "SW")), frozenset(("NE", "SE"))}
        elif start == "bare":
            self.straight = set()
        else:
            raise DiagramError("unknown start tangle %r" % (start,))
        self.free_loops = 0
        self.boxes = []  # (axis, value, [crossing ids])

    def _take(self, corner):
        """Detach the strand end at an open corner."""
        e = self.ends[corner]
        if e is not None:
            self.ends[corner] = None
            return ("end", e)
        for s in self.straight:
            if corner in s:
                (other,) = s - {corner}
                self.straight.remove(s)
                return ("corner", other)
        raise DiagramError("corner %s is not open" % corner)

    def _attach(self, got, endpoint):
        """Wire a detached strand end to a crossing endpoint."""
        kind, val = got
        if kind == "end":
            self.shadow.connect(val, endpoint)
        else:
            self.ends[val] = endpoint

    def add_twists(self, axis, count):
        """Append a twist box; horizontal boxes grow east, vertical south.

        The sign of ``count`` picks the handedness of the half-twists.
        """
        if axis not in ("h", "v"):
            raise DiagramError("axis must be 'h' or 'v'")
        cids = []
        layout = {
            ("h", 1): _H_POS,
            ("h", -1): _H_NEG,
            ("v", 1): _V_POS,
            ("v", -1): _V_NEG,
        }[(axis, 1 if count >= 0 else -1)]
        if axis == "h":
            near, far = ("WN", "WS"), ("EN", "ES")
            corners = ("NE", "SE")
        else:
            near, far = ("NW", "NE"), ("SW", "SE")
            corners = ("SW", "SE")
        for _ in range(abs(count)):
            c = self.shadow.new_crossing(layout)
            cids.append(c)
            a = self._take(corners[0])
            if a == ("corner", corners[1]):
                # the twisted pair was one straight strand: it arcs over
                self.straight.discard(frozenset(corners))
                self.shadow.connect(self.shadow.port(c, near[0]), self.shadow.port(c, near[1]))
            else:
                b = self._take(corners[1])
                self._attach(a, self.shadow.port(c, near[0]))
                self._attach(b, self.shadow.port(c, near[1]))
            self.ends[corners[0]] = self.shadow.port(c, far[0])
            self.ends[corners[1]] = self.shadow.port(c, far[1])
        self.boxes.append((axis, count, cids))


def tangle_from_vector(vector, shadow=None):
    """Build the rational-tangle shadow of a twist vector.

    Only the final entry may be zero.  Box i is horizontal when i and the
    vector length have equal parity.
    """
    v = list(vector)
    if not v:
        raise DiagramError("empty tangle vector")
    if any(a == 0 for a in v[:-1]):
        raise DiagramError("zero interior entry in tangle vector")
    n = len(v)
    first_horizontal = 1 % 2 == n % 2
    t = Tangle("zero" if first_horizontal else "infinity", shadow)
    for i, a in enumerate(v, start=1):
        axis = "h" if i % 2 == n % 2 else "v"
        t.add_twists(axis, a)
    return t


def tangle_sum(t1, t2):
    """Join t2 to the right of t1; both must share one shadow."""
    if t1.shadow is not t2.shadow:
        raise DiagramError("tangles must share a shadow to be summed")
    out = Tangle("bare", t1.shadow)
    rename = {}
    for tt, mine, theirs in ((t1, ("NW", "SW"), ("NE", "SE")), (t2, ("NE", "SE"), ("NW", "SW"))):
        for corner in mine:
            rename[(id(tt), corner)] = corner
    # carry surviving straights with corners renamed to the output corners
    for tt in (t1, t2):
        for s in tt.straight:
            out.straight.add(frozenset(rename.get((id(tt), x), ("mid", id(tt), x)) for x in s))
    for upper in (True, False):
        a_c, b_c = ("NE", "SE")[0 if upper else 1], ("NW", "SW")[0 if upper else 1]
        a = t1._take(a_c)
        b = t2._take(b_c)
        ra = a if a[0] == "end" else ("corner", rename.get((id(t1), a[1]), a[1]))
        rb = b if b[0] == "end" else ("corner", rename.get((id(t2), b[1]), b[1]))
        if ra[0] == "end" and rb[0] == "end":
            t1.shadow.connect(ra[1], rb[1])
        elif ra[0] == "end":
            out.ends[rb[1]] = ra[1]
        elif rb[0] == "end":
            out.ends[ra[1]] = rb[1]
        else:
            out.straight.add(frozenset((ra[1], rb[1])))
    for corner, src in (("NW", t1), ("SW", t1), ("NE", t2), ("SE", t2)):
        if src.ends[corner] is not None:
            out.ends[corner] = src.ends[corner]
    out.free_loops = t1.free_loops + t2.free_loops
    out.boxes = t1.boxes + t2.boxes
    return out


def numerator_close(t):
    """Join NW-NE and SW-SE; returns (shadow, free_loops, top_pair).

    ``top_pair`` is the connected (NW endpoint, NE endpoint) pair used to
    seed orientations, or None when the top strand carries no crossing.
    """
    loops = t.free_loops
    top_pair = None
    for a, b in (("NW", "NE"), ("SW", "SE")):
        ea, eb = t.ends[a], t.ends[b]
        if ea is not None and eb is not None:
            t.shadow.connect(ea, eb)
            if a == "NW":
                top_pair = (ea, eb)
        elif ea is None and eb is None:
            if frozenset((a, b)) in t.straight:
                t.straight.discard(frozenset((a, b)))
                loops += 1
            else:
                raise DiagramError("unsupported degenerate closure")
        else:
            raise DiagramError("unsupported degenerate closure")
    return t.shadow, loops, top_pair


def orient_shadow(shadow, free_loops=0, entry=None, flip=()):
    """Assign strand directions, producing an oriented diagram.

    ``entry`` is an endpoint forced to be a strand entry; ``flip`` lists
    circuit indices (discovery order) reversed after that.  Returns the
    diagram and the per-crossing rotation mapping shadow positions to
    diagram slots (slot k sits at position rot + k mod 4).
    """
    pair = shadow.pair
    seen = set()
    circuits = []
    for e0 in sorted(pair):
        if e0 in seen:
            continue
        circuit = []
        cur = e0
        while cur not in seen:
            seen.add(cur)
            c, p = cur
            exit_end = (c, (p + 2) % 4)
            seen.add(exit_end)
            circuit.append(cur)
            cur = pair[exit_end]
        circuits.append(circuit)

    def rev(circ):
        return [(c, (p + 2) % 4) for (c, p) in reversed(circ)]

    oriented = []
    for idx, circ in enumerate(circuits):
        chosen = circ
        if entry is not None and entry in set(rev(circ)):
            chosen = rev(circ)
        if idx in flip:
            chosen = rev(chosen)
        oriented.append(chosen)

    rot = {}
    for circ in oriented:
        for c, p in circ:
            if p in (0, 2):
                rot[c] = p
    if len(rot) != len(shadow.compass):
        raise DiagramError("orientation did not reach every crossing")
    signs = {}
    succ = {}
    for circ in oriented:
        for c, p in circ:
            if p not in (0, 2):
                over_slot = (p - rot[c]) % 4
                signs[c] = 1 if over_slot == 3 else -1
        for c, p in circ:
            exit_end = (c, (p + 2) % 4)
            c2, p2 = pair[exit_end]
            succ[(c, (p + 2 - rot[c]) % 4)] = (c2, (p2 - rot[c2]) % 4)
    d = LinkDiagram(signs, succ, free_loops=free_loops)
    return d, rot


# -- continued fractions -----------------------------------------------------


def cf_to_fraction(vector):
    """Evaluate a_n + 1/(a_{n-1} + ... + 1/a_1) exactly."""
    v = list(vector)
    if not v:
        raise DiagramError("empty tangle vector")
    if any(a == 0 for a in v[:-1]):
        raise DiagramError("zero interior entry in tangle vector")
    val = Fraction(v[0])
    for a in v[1:]:
        if val == 0:
            raise DiagramError("degenerate continued fraction (division by zero)")
        val = a + 1 / val
    return val


def fraction_to_canonical_vector(f):
    """All-positive vector via the Euclidean algorithm; round-trips exactly."""
    f = Fraction(f)
    if f <= 0:
        raise DiagramError("canonical vectors require a positive fraction")
    p, q = f.numerator, f.denominator
    quotients = []
    while q:
        quotients.append(p // q)
        p, q = q, p % q
    return tuple(reversed(quotients))


def fourplat_fraction_normalize(f):
    """(p, q) with 0 < q < p and gcd 1; (1, 1) is the unknot."""
    f = Fraction(abs(Fraction(f)))
    p, q = f.numerator, f.denominator
    if p == 0:
        raise DiagramError("zero fraction is not a 4-plat")
    q %= p
    if q == 0:
        if p == 1:
            return (1, 1)
        raise DiagramError("fraction must be in lowest terms with q != 0 mod p")
    return (p, q)


def is_knot_fraction(f):
    p, _ = fourplat_fraction_normalize(f)
    return p % 2 == 1


def fourplat_equals(f1, f2):
    """Same 4-plat: equal p and q1 = q2 or q1*q2 = 1 (mod p)."""
    p1, q1 = fourplat_fraction_normalize(f1)
    p2, q2 = fourplat_fraction_normalize(f2)
    if p1 != p2:
        return False
    if p1 == 1:
        return True
    return q1 % p1 == q2 % p1 or (q1 * q2) % p1 == 1 % p1


def fourplat_mirror_equals(f1, f2):
    """Mirror-image test: q1 = -q2 or q1*q2 = -1 (mod p)."""
    p1, q1 = fourplat_fraction_normalize(f1)
    p2, q2 = fourplat_fraction_normalize(f2)
    if p1 != p2:
        return False
    if p1 == 1:
        return True
    return (q1 + q2) % p1 == 0 or (q1 * q2) % p1 == (p1 - 1) % p1


def even_expansion(f):
    """Length-2g all-even continued fraction of a 2-bridge knot fraction.

    Returned inside-out like tangle vectors, so cf_to_fraction recovers a
    fraction equivalent to f.  Uses nearest-even quotients; parities
    alternate along the remainders, so the choice is always unique.
    """
    p, q = fourplat_fraction_normalize(f)
    if p % 2 == 0:
        raise DiagramError("even expansions require a knot fraction (odd p)")
    if p == 1:
        return ()
    if q % 2 == 1:
        q -= p  # exactly one of q, q - p is even since p is odd
    out = []
    num, den = p, q
    while True:
        x = Fraction(num, den)
        b = 2 * round(x / 2)
        if b == 0:
            raise DiagramError("even expansion produced a zero entry")
        out.append(int(b))
        rem = x - b
        if rem == 0:
            break
        num, den = rem.denominator, rem.numerator
    if len(out) % 2:
        raise DiagramError("even expansion has odd length; input was not a knot")
    return tuple(reversed(out))


# -- 4-plat diagrams ---------------------------------------------------------


@dataclass
class FourPlat:
    """A built 4-plat: oriented diagram plus box data for classification."""

    vector: tuple
    diagram: LinkDiagram
    boxes: list  # (axis, value, [crossing ids]) in vector order
    rotations: dict  # crossing -> shadow position of the under-strand entry
    shadow_compass: dict  # crossing -> {position: compass role}

    def _enters(self, c, role):
        """True when the strand enters crossing c at the given compass role."""
        rot = self.rotations[c]
        over_in = 3 if self.diagram.signs[c] > 0 else 1
        pos = next(p for p, r in self.shadow_compass[c].items() if r == role)
        return (pos - rot) % 4 in (0, over_in)

    def box_parallel(self, i):
        """True if box i (1-based) has co-directed strands.

        Horizontal strands are co-directed when the two west ports are
        both entries or both exits; vertical boxes use the north ports.
        """
        axis, _value, cids = self.boxes[i - 1]
        if not cids:
            raise DiagramError("box %d has no crossings" % i)
        c = cids[0]
        side = ("WN", "WS") if axis == "h" else ("NW", "NE")
        return self._enters(c, side[0]) == self._enters(c, side[1])

    def classification(self):
        """(parallel, anti-parallel) 1-based box index sets."""
        P, A = set(), set()
        for i, (_axis, _value, cids) in enumerate(self.boxes, start=1):
            if not cids:
                continue
            (P if self.box_parallel(i) else A).add(i)
        return P, A


def fourplat_diagram(vector, flip_second=False):
    """Build the 4-plat closure of a twist vector.

    Entries may be signed (mirrored boxes).  The top closure strand seeds
    the orientation; ``flip_second`` reverses the remaining component of a
    2-component 4-plat.
    """
    v = tuple(vector)
    if not v:
        raise DiagramError("empty 4-plat vector")
    if any(a == 0 for a in v):
        raise DiagramError("zero entry in 4-plat vector")
    t = tangle_from_vector(v)
    shadow, loops, top_pair = numerator_close(t)
    entry = top_pair[1] if top_pair else None
    flips = (1,) if flip_second else ()
    d, rot = orient_shadow(shadow, loops, entry=entry, flip=flips)
    return FourPlat(v, d, t.boxes, rot, shadow.compass)


def classify_parallel_antiparallel(vector, flip_second=False):
    """Partition the box indices of a 4-plat into parallel/anti-parallel."""
    return fourplat_diagram(vector, flip_second=flip_second).classification()


def fourplat_nd(vector, flip_second=False):
    """Closed-form diagram nullification number of a 4-plat.

    n_d = sum of (|a_i| - 1) over parallel boxes plus the count of
    anti-parallel boxes; equals Cr - s + 1 on reduced alternating forms.
    """
    fp = fourplat_diagram(vector, flip_second=flip_second)
    P, A = fp.classification()
    return sum(abs(fp.boxes[i - 1][1]) - 1 for i in P) + len(A)


def fourplat_signature(f):
    """Signature of a 2-bridge knot from its even continued fraction."""
    ev = even_expansion(f)
    return sum((-1) ** i * (1 if a > 0 else -1) for i, a in enumerate(ev))


def fourplat_crossing_number(even_vector):
    """Crossing number from a sign-alternating all-even vector.

    Cr = (sum of |a_i|) - 2g + 1 for (a_1..a_2g) with a_i * a_{i+1} < 0.
    """
    v = tuple(even_vector)
    if not v or len(v) % 2:
        raise DiagramError("vector length must be 2g with g >= 1")
    if any(a == 0 or a % 2 for a in v):
        raise DiagramError("entries must be nonzero even integers")
    if any(v[i] * v[i + 1] > 0 for i in range(len(v) - 1)):
        raise DiagramError("entries must alternate in sign")
    return sum(abs(a) for a in v) - len(v) + 1
