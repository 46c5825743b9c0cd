"""
Oriented link diagrams as combinatorial maps.

A diagram is a set of signed crossings plus a successor map on crossing
ends.  Each crossing has four ends ("slots") numbered counterclockwise:

          2 (under-out)
          |
    3 ----+---- 1
          |
          0 (under-in)

The under-strand always enters at slot 0 and leaves at slot 2.  The
over-strand enters at slot 3 and leaves at slot 1 on a positive crossing;
it enters at slot 1 and leaves at slot 3 on a negative one.  (A crossing
is positive when rotating the over-direction counterclockwise by 90
degrees gives the under-direction.)

Arcs are directed: ``succ[(c, out_slot)] == (c2, in_slot)`` is the arc
leaving crossing ``c`` through ``out_slot`` and entering ``c2`` through
``in_slot``.  Crossing-free circles are counted separately in
``free_loops``.

The slot numbering fixes the rotation system at every crossing, so a
diagram is a combinatorial map on a surface; construction validates that
every connected piece has genus zero.  Faces of a 4-valent planar map are
automatically checkerboard colorable, so no separate check is needed.

Diagrams are immutable values: every operation returns a new instance and
crossing ids are preserved by smoothing and simplification.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


class DiagramError(ValueError):
    """Raised for structurally invalid diagrams or operations."""


class ParseError(DiagramError):
    """Raised when a PD or Gauss code cannot be parsed or realized."""


def _over_in(sign):
    return 3 if sign > 0 else 1


def _over_out(sign):
    return 1 if sign > 0 else 3


@dataclass(frozen=True)
class SeifertDecomposition:
    """Seifert circles of a diagram: count and arc-end membership."""

    circle_count: int
    # circle index for every crossing end; free loops are extra circles
    # beyond the indices appearing here.
    membership: dict

    @property
    def s(self):
        return self.circle_count


class LinkDiagram:
    """An oriented link diagram with signed crossings."""

    def __init__(self, signs, succ, free_loops=0, validate=True):
        self.signs = dict(signs)
        self.succ = dict(succ)
        self.free_loops = int(free_loops)
        self._faces = None
        self._components = None
        if validate:
            self._validate()

    # -- basic structure -------------------------------------------------

    @property
    def crossing_ids(self):
        return sorted(self.signs)

    @property
    def n_crossings(self):
        return len(self.signs)

    def sign(self, c):
        return self.signs[c]

    def writhe(self):
        return sum(self.signs.values())

    def in_slots(self, c):
        return (0, _over_in(self.signs[c]))

    def out_slots(self, c):
        return (2, _over_out(self.signs[c]))

    def strand_wiring(self, c):
        s = self.signs[c]
        return {0: 2, _over_in(s): _over_out(s)}

    def smooth_wiring(self, c):
        s = self.signs[c]
        return {0: _over_out(s), _over_in(s): 2}

    def _validate(self):
        outs = set()
        ins = set()
        for c in self.signs:
            if self.signs[c] not in (1, -1):
                raise DiagramError("crossing %r has sign %r" % (c, self.signs[c]))
            outs.update((c, k) for k in self.out_slots(c))
            ins.update((c, k) for k in self.in_slots(c))
        if set(self.succ) != outs:
            raise DiagramError("successor map keys do not match out-slots")
        if set(self.succ.values()) != ins or len(set(self.succ.values())) != len(self.succ):
            raise DiagramError("successor map is not a bijection onto in-slots")
        if self.free_loops < 0:
            raise DiagramError("negative free loop count")
        self._check_planarity()

    def _check_planarity(self):
        """Each connected piece of the 4-valent map must have genus 0."""
        if not self.signs:
            return
        piece = {}
        for c in self.signs:
            piece.setdefault(c, c)

        parent = {c: c for c in self.signs}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (c, _), (c2, _) in self.succ.items():
            ra, rb = find(c), find(c2)
            if ra != rb:
                parent[ra] = rb
        sizes = {}
        for c in self.signs:
            r = find(c)
            sizes[r] = sizes.get(r, 0) + 1
        face_counts = {}
        for face in self.faces():
            (tail, _head), _fwd = face[0]
            r = find(tail[0])
            face_counts[r] = face_counts.get(r, 0) + 1
        for r, v in sizes.items():
            if face_counts.get(r, 0) != v + 2:
                raise DiagramError(
                    "diagram piece is not planar (V=%d, F=%d)" % (v, face_counts.get(r, 0))
                )

    # -- traversal --------------------------------------------------------

    def _attach(self):
        """Map each crossing end to (arc, is_tail)."""
        att = {}
        for tail, head in self.succ.items():
            arc = (tail, head)
            att[tail] = (arc, True)
            att[head] = (arc, False)
        return att

    def components(self):
        """Ordered strand components as lists of (crossing, in_slot) visits.

        Free loops are not listed; ``component_count`` includes them.
        """
        if self._components is not None:
            return self._components
        seen = set()
        comps = []
        starts = sorted((c, k) for c in self.signs for k in self.in_slots(c))
        for start in starts:
            if start in seen:
                continue
            comp = []
            cur = start
            while cur not in seen:
                seen.add(cur)
                comp.append(cur)
                c, k = cur
                cur = self.succ[(c, self.strand_wiring(c)[k])]
            comps.append(comp)
        self._components = comps
        return comps

    @property
    def component_count(self):
        return len(self.components()) + self.free_loops

    def component_of_end(self, end):
        """Component index of the strand through an in-slot end."""
        for i, comp in enumerate(self.components()):
            if end in comp:
                return i
        raise DiagramError("unknown end %r" % (end,))

    def seifert_circles(self):
        """Circles obtained by smoothing every crossing."""
        seen = set()
        membership = {}
        count = 0
        starts = sorted((c, k) for c in self.signs for k in self.in_slots(c))
        for start in starts:
            if start in seen:
                continue
            cur = start
            while cur not in seen:
                seen.add(cur)
                membership[cur] = count
                c, k = cur
                out = self.smooth_wiring(c)[k]
                membership[(c, out)] = count
                cur = self.succ[(c, out)]
            count += 1
        return SeifertDecomposition(count + self.free_loops, membership)

    def seifert_circle_count(self):
        return self.seifert_circles().circle_count

    # -- faces ------------------------------------------------------------

    def faces(self):
        """Faces of the map as lists of darts.

        A dart is ``(arc, forward)`` where ``arc == (tail, head)``; the face
        is traversed with its interior on a fixed side, turning to slot
        ``k + 1`` at each arrival slot ``k``.
        """
        if self._faces is not None:
            return self._faces
        att = self._attach()
        darts = []
        for arc in sorted(self.succ.items()):
            darts.append((arc, True))
            darts.append((arc, False))
        seen = set()
        faces = []
        for d0 in darts:
            if d0 in seen:
                continue
            face = []
            d = d0
            while d not in seen:
                seen.add(d)
                face.append(d)
                (tail, head), fwd = d
                c, k = head if fwd else tail
                arc2, is_tail = att[(c, (k + 1) % 4)]
                d = (arc2, is_tail)
            faces.append(face)
        self._faces = faces
        return faces

    def corner_faces(self):
        """Map corner (c, k) -- between slots k and k+1 -- to its face index."""
        corners = {}
        for fi, face in enumerate(self.faces()):
            for (tail, head), fwd in face:
                c, k = head if fwd else tail
                corners[(c, k)] = fi
        return corners

    # -- predicates -------------------------------------------------------

    def _end_is_over(self, end):
        _, k = end
        return k in (1, 3)

    def is_alternating(self):
        """True when every strand alternates over/under passes."""
        return all(
            self._end_is_over(tail) != self._end_is_over(head)
            for tail, head in self.succ.items()
        )

    def nugatory_crossings(self):
        """Crossings whose removal disconnects the diagram (cut vertices)."""
        corners = self.corner_faces()
        out = []
        for c in self.crossing_ids:
            if corners[(c, 0)] == corners[(c, 2)] or corners[(c, 1)] == corners[(c, 3)]:
                out.append(c)
        return out

    def is_reduced(self):
        return not self.nugatory_crossings()

    # -- surgery ----------------------------------------------------------

    def _splice_out(self, c, wiring):
        """Remove crossing c, rerouting strands through ``wiring`` (in->out).

        Returns (new_succ, new_free_loops).
        """
        new_succ = {}
        handled_ins = set()
        loops = 0
        for tail, head in self.succ.items():
            if tail[0] == c:
                continue
            if head[0] != c:
                new_succ[tail] = head
                continue
            # trace forward through c until we exit
            cur = head
            while cur[0] == c:
                handled_ins.add(cur)
                out = wiring[cur[1]]
                cur = self.succ[(c, out)]
            new_succ[tail] = cur
        # closed orbits living entirely at c become free loops
        for k in self.in_slots(c):
            start = (c, k)
            if start in handled_ins:
                continue
            cur = start
            while True:
                handled_ins.add(cur)
                cur = self.succ[(c, wiring[cur[1]])]
                if cur == start:
                    break
            loops += 1
        return new_succ, self.free_loops + loops

    def smooth(self, c):
        """Oriented (Seifert) smoothing of crossing ``c``."""
        if c not in self.signs:
            raise DiagramError("unknown crossing id %r" % (c,))
        succ, loops = self._splice_out(c, self.smooth_wiring(c))
        signs = {k: v for k, v in self.signs.items() if k != c}
        return LinkDiagram(signs, succ, loops, validate=False)

    def smooth_all(self, cids):
        d = self
        for c in cids:
            d = d.smooth(c)
        return d

    def _delete_crossing(self, c):
        """Remove a crossing keeping strand order (valid for nugatory c)."""
        succ, loops = self._splice_out(c, self.strand_wiring(c))
        signs = {k: v for k, v in self.signs.items() if k != c}
        return LinkDiagram(signs, succ, loops, validate=False)

    def mirror(self):
        """Mirror image: all signs flip, slots 1 and 3 swap."""

        def m(end):
            c, k = end
            return (c, k if k in (0, 2) else 4 - k)

        signs = {c: -s for c, s in self.signs.items()}
        succ = {m(t): m(h) for t, h in self.succ.items()}
        return LinkDiagram(signs, succ, self.free_loops, validate=False)

    def reverse_component(self, i):
        """Flip the orientation of component ``i`` (0-based)."""
        comps = self.components()
        if not 0 <= i < len(comps):
            raise DiagramError("component index %d out of range" % i)
        comp = set(comps[i])
        # which strands of each crossing reverse: under iff (c,0) on comp,
        # over iff (c, over_in) on comp
        under_rev = {c for c in self.signs if (c, 0) in comp}
        over_rev = {c for c in self.signs if (c, _over_in(self.signs[c])) in comp}

        def remap(end):
            c, k = end
            if c in under_rev:
                return (c, (k + 2) % 4)
            return end

        new_signs = {}
        for c, s in self.signs.items():
            u, o = c in under_rev, c in over_rev
            new_signs[c] = -s if u != o else s

        arc_on_comp = set()
        for tail, head in self.succ.items():
            c, k = head
            if head in comp:
                arc_on_comp.add((tail, head))

        succ = {}
        for tail, head in self.succ.items():
            t2, h2 = remap(tail), remap(head)
            if (tail, head) in arc_on_comp:
                succ[h2] = t2
            else:
                succ[t2] = h2
        return LinkDiagram(new_signs, succ, self.free_loops, validate=False)

    # -- canonical form ---------------------------------------------------

    def canonical_key(self):
        """A relabeling-invariant key; equal keys mean isomorphic diagrams."""
        if not self.signs:
            return ("loops", self.free_loops)
        comps = self.components()
        n = len(comps)
        all_starts = [(ci, j) for ci, comp in enumerate(comps) for j in range(len(comp))]

        def walk(order_starts):
            # order_starts: list of (component, offset) in visit order
            label = {}
            seq = []
            for ci, off in order_starts:
                comp = comps[ci]
                part = []
                for j in range(len(comp)):
                    c, k = comp[(off + j) % len(comp)]
                    if c not in label:
                        label[c] = len(label)
                    part.append((label[c], 1 if k == 0 else 0, self.signs[c]))
                seq.append(tuple(part))
            return tuple(seq)

        best = None
        # greedy: choose each successive component start minimizing the code
        def extend(chosen, remaining):
            nonlocal best
            if not remaining:
                key = walk(chosen)
                if best is None or key < best:
                    best = key
                return
            cands = []
            for ci in remaining:
                for off in range(len(comps[ci])):
                    cands.append(walk(chosen + [(ci, off)])[: len(chosen) + 1])
            target = min(cands)
            for ci in remaining:
                for off in range(len(comps[ci])):
                    if walk(chosen + [(ci, off)])[: len(chosen) + 1] == target:
                        extend(chosen + [(ci, off)], [x for x in remaining if x != ci])
                        return  # one representative suffices for determinism

        extend([], list(range(n)))
        return ("diag", self.free_loops, best)

    # -- serialization ----------------------------------------------------

    def _arc_labels(self):
        """1-based arc labels increasing along each component."""
        labels = {}
        nxt = 1
        for comp in self.components():
            for c, k in comp:
                out = self.strand_wiring(c)[k]
                labels[((c, out), self.succ[(c, out)])] = nxt
                nxt += 1
        return labels

    def to_pd(self):
        """PD code string, tuples ordered by crossing id."""
        labels = self._arc_labels()
        att = {}
        for arc, lab in labels.items():
            tail, head = arc
            att[tail] = lab
            att[head] = lab
        parts = []
        for c in self.crossing_ids:
            a, b, cc, d = (att[(c, k)] for k in range(4))
            parts.append("X[%d,%d,%d,%d]" % (a, b, cc, d))
        return " ".join(parts)

    def to_gauss(self):
        """Signed Gauss code, components separated by '/'."""
        label = {}
        parts = []
        for comp in self.components():
            toks = []
            for c, k in comp:
                if c not in label:
                    label[c] = len(label) + 1
                ou = "U" if k == 0 else "O"
                toks.append("%s%d%s" % (ou, label[c], "+" if self.signs[c] > 0 else "-"))
            parts.append(" ".join(toks))
        return " / ".join(parts)

    def __repr__(self):
        return "<LinkDiagram %d crossings, %d components>" % (
            self.n_crossings,
            self.component_count,
        )


# -- constructors ----------------------------------------------------------


def unlink(n=1):
    """Crossingless diagram of the n-component unlink."""
    if n < 0:
        raise DiagramError("component count must be nonnegative")
    return LinkDiagram({}, {}, free_loops=n)


def from_gauss_visits(visits, signs):
    """Build a diagram from per-component visit lists.

    ``visits`` is a list of components, each a list of (crossing, is_under)
    pairs; ``signs`` maps crossing id to +-1.  Raises ParseError when the
    code is not realizable in the plane.
    """
    seen = {}
    for comp in visits:
        for c, under in comp:
            key = (c, under)
            if key in seen:
                raise ParseError("crossing %r visited twice as %s" % (c, "under" if under else "over"))
            seen[key] = True
    for c in signs:
        if (c, True) not in seen or (c, False) not in seen:
            raise ParseError("crossing %r incomplete" % (c,))
    extra = {c for c, _ in seen} - set(signs)
    if extra:
        raise ParseError("crossings without signs: %r" % (sorted(extra),))

    succ = {}
    for comp in visits:
        if not comp:
            continue
        m = len(comp)
        for j in range(m):
            c, under = comp[j]
            c2, under2 = comp[(j + 1) % m]
            out = 2 if under else _over_out(signs[c])
            inn = 0 if under2 else _over_in(signs[c2])
            succ[(c, out)] = (c2, inn)
    try:
        return LinkDiagram(signs, succ)
    except DiagramError as e:
        raise ParseError("code is not realizable: %s" % e) from None


GAUSS_TOKEN = re.compile(r"^([OU])(\d+)([+-])$")


def parse_gauss(text, components=None):
    """Parse a signed Gauss code like ``O1+ U2+ O3+ U1+ O2+ U3+``.

    Components are separated by ``/``.  An empty code yields an unlink with
    ``components`` circles (default 1).
    """
    text = text.strip()
    if not text:
        return unlink(1 if components is None else components)
    visits = []
    signs = {}
    for chunk in text.split("/"):
        comp = []
        for tok in chunk.split():
            m = GAUSS_TOKEN.match(tok)
            if not m:
                raise ParseError("malformed token %r" % tok)
            ou, num, sg = m.groups()
            c = int(num)
            s = 1 if sg == "+" else -1
            if c in signs and signs[c] != s:
                raise ParseError("crossing %d has mismatched signs" % c)
            signs[c] = s
            comp.append((c, ou == "U"))
        visits.append(comp)
    d = from_gauss_visits(visits, signs)
    if components is not None and d.component_count != components:
        raise ParseError(
            "expected %d components, code has %d" % (components, d.component_count)
        )
    return d


PD_TUPLE = re.compile(r"X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")


def from_pd_tuples(tuples):
    """Build a diagram from PD 4-tuples (a, b, c, d).

    Labels enter counterclockwise from the incoming under-strand; label
    succession (wrapping per component) orients the over-strands.
    """
    if not tuples:
        return unlink(1)
    counts = {}
    for t in tuples:
        for lab in t:
            counts[lab] = counts.get(lab, 0) + 1
    bad = [lab for lab, k in counts.items() if k != 2]
    if bad:
        raise ParseError("unpaired arc label %r" % (sorted(bad)[0],))

    # status[(tuple_index, position)] = True for incoming, False for outgoing
    status = {}
    occ = {}
    for ti, t in enumerate(tuples):
        for pos, lab in enumerate(t):
            occ.setdefault(lab, []).append((ti, pos))
    for ti, t in enumerate(tuples):
        status[(ti, 0)] = True
        status[(ti, 2)] = False

    changed = True
    while changed:
        changed = False
        for lab, places in occ.items():
            (p1, p2) = places
            s1, s2 = status.get(p1), status.get(p2)
            if s1 is None and s2 is not None:
                status[p1] = not s2
                changed = True
            elif s2 is None and s1 is not None:
                status[p2] = not s1
                changed = True
        for ti, t in enumerate(tuples):
            s1, s3 = status.get((ti, 1)), status.get((ti, 3))
            if s1 is None and s3 is not None:
                status[(ti, 1)] = not s3
                changed = True
            elif s3 is None and s1 is not None:
                status[(ti, 3)] = not s1
                changed = True

    # any still-unresolved over strands: orient by label adjacency
    nmax = max(counts)
    for ti, t in enumerate(tuples):
        if status.get((ti, 1)) is None:
            b, d = t[1], t[3]
            if (b % nmax) + 1 == d:
                status[(ti, 1)], (status[(ti, 3)]) = True, False
            else:
                status[(ti, 1)], (status[(ti, 3)]) = False, True

    for lab, places in occ.items():
        p1, p2 = places
        if status[p1] == status[p2]:
            raise ParseError("orientation inconsistency at arc %d" % lab)

    signs = {}
    heads = {}
    tails = {}
    for ti, t in enumerate(tuples):
        over_in_pos = 1 if status[(ti, 1)] else 3
        signs[ti] = 1 if over_in_pos == 3 else -1
        for pos, lab in enumerate(t):
            if status[(ti, pos)]:
                heads[lab] = (ti, pos)
            else:
                tails[lab] = (ti, pos)
    succ = {}
    for lab in counts:
        succ[tails[lab]] = heads[lab]
    try:
        d = LinkDiagram(signs, succ)
    except DiagramError as e:
        raise ParseError("PD code is not realizable: %s" % e) from None
    # validate the label convention: successive labels along each component
    return d


def parse_pd(text, components=None):
    """Parse a PD code string of X[a,b,c,d] tuples."""
    text = text.strip()
    if not text:
        return unlink(1 if components is None else components)
    cleaned = text
    tuples = [tuple(int(x) for x in m) for m in PD_TUPLE.findall(cleaned)]
    leftover = PD_TUPLE.sub("", cleaned).replace(",", " ").split()
    if leftover:
        raise ParseError("malformed token near %r" % (leftover[0],))
    if not tuples:
        raise ParseError("no crossings found in nonempty PD code")
    d = from_pd_tuples(tuples)
    if components is not None and d.component_count != components:
        raise ParseError(
            "expected %d components, code has %d" % (components, d.component_count)
        )
    return d


def braid_closure(word, strands):
    """Closure of a braid word; generator i (1-based) crosses strands i, i+1.

    Positive letters give positive crossings.
    """
    if strands < 1:
        raise DiagramError("need at least one strand")
    for w in word:
        if w == 0 or abs(w) >= strands:
            raise DiagramError("letter %r out of range for %d strands" % (w, strands))
    # loose[p] = out-end currently dangling at strand position p, or anchor
    loose = {p: ("top", p) for p in range(strands)}
    succ = {}
    anchors = {}

    def connect(tail, head):
        if tail[0] == "top":
            anchors[tail[1]] = head
        else:
            succ[tail] = head

    signs = {}
    for ci, w in enumerate(word):
        i = abs(w) - 1
        s = 1 if w > 0 else -1
        signs[ci] = s
        # strands descend; positive letters put the right strand on top.
        # Positive slots: 0=NW(under-in) 1=SW 2=SE 3=NE, so over runs 3->1.
        # Negative slots: 0=NE(under-in) 1=NW 2=SW 3=SE, over runs 1->3.
        if s > 0:
            connect(loose[i], (ci, 0))
            connect(loose[i + 1], (ci, 3))
            loose[i] = (ci, 1)
            loose[i + 1] = (ci, 2)
        else:
            connect(loose[i + 1], (ci, 0))
            connect(loose[i], (ci, 1))
            loose[i] = (ci, 2)
            loose[i + 1] = (ci, 3)
    free = 0
    for p in range(strands):
        tail = loose[p]
        if tail[0] == "top":
            free += 1
            continue
        head = anchors.get(p)
        if head is None:
            # strand position never touched by a crossing but closed at top
            free += 1
            continue
        succ[tail] = head
    if not signs:
        return unlink(strands)
    return LinkDiagram(signs, succ, free_loops=free)


def torus_diagram(p, q):
    """Standard closed-braid diagram of the torus link T(p, q)."""
    if p < 2 or q < 2:
        raise DiagramError("torus parameters must be at least 2")
    word = [i for _ in range(q) for i in range(1, p)]
    return braid_closure(word, p)


def disjoint_union(d1, d2):
    """Split union of two diagrams (crossings of d2 relabeled)."""
    base = max(d1.signs, default=-1) + 1
    signs = dict(d1.signs)
    succ = dict(d1.succ)
    for c, s in d2.signs.items():
        signs[c + base] = s
    for (c, k), (c2, k2) in d2.succ.items():
        succ[(c + base, k)] = (c2 + base, k2)
    return LinkDiagram(signs, succ, d1.free_loops + d2.free_loops, validate=False)
