"""
Montesinos links K(b1/a1, ..., bt/at, e): construction, type I/II
classification, and the closed-form Seifert-circle count and diagram
nullification bound.

Every tangle fraction satisfies |b_i/a_i| < 1, so its twist vector has
the form (a_{i,1}, ..., a_{i,n_i}, 0) with entries all positive or all
negative; the final real box is always vertical.  Tangles are strung
west to east and followed by |e| horizontal half-twists before the
numerator closure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagram import DiagramError
from .tangles import (
    FourPlat,
    Tangle,
    _Shadow,
    cf_to_fraction,
    fraction_to_canonical_vector,
    numerator_close,
    orient_shadow,
    tangle_from_vector,
    tangle_sum,
)

TYPE_I = "I"
TYPE_II = "II"


@dataclass
class MontesinosParams:
    """Validated parameters: tangle vectors (with trailing 0) and e."""

    tangles: list
    e: int

    @classmethod
    def from_vectors(cls, vectors, e):
        if not vectors:
            raise DiagramError("a Montesinos link needs at least one tangle")
        tangles = []
        for v in vectors:
            v = list(v)
            if v and v[-1] == 0:
                v = v[:-1]
            if not v:
                raise DiagramError("empty tangle vector")
            if any(a == 0 for a in v):
                raise DiagramError("zero interior entry in tangle vector")
            pos, neg = all(a > 0 for a in v), all(a < 0 for a in v)
            if not (pos or neg):
                raise DiagramError("tangle entries must share one sign")
            frac = 1 / cf_to_fraction(v)
            if not abs(frac) < 1:
                raise DiagramError(
                    "tangle fraction %s is not < 1 in magnitude; "
                    "fold its integer part into e" % frac
                )
            tangles.append(tuple(v) + (0,))
        return cls(tangles, int(e))

    @classmethod
    def from_fractions(cls, fractions, e):
        vectors = []
        for f in fractions:
            f = Fraction(f)
            if f == 0 or not abs(f) < 1:
                raise DiagramError(
                    "tangle fractions must be nonzero with |b/a| < 1; "
                    "fold integer parts into e"
                )
            v = fraction_to_canonical_vector(1 / abs(f))
            if f < 0:
                v = tuple(-a for a in v)
            vectors.append(v)
        return cls.from_vectors(vectors, e)

    @property
    def fractions(self):
        return [1 / cf_to_fraction(v[:-1]) for v in self.tangles]


@dataclass
class Montesinos:
    """Built Montesinos diagram with box structure kept for the formulas."""

    params: MontesinosParams
    fourplat: FourPlat  # diagram plus box metadata
    tangle_boxes: list  # per tangle, list of box indices (1-based, 0 entries skipped)
    e_box: int | None  # box index of the e twists, or None when e == 0
    gap_ports: list  # per gap between consecutive tangles, (upper end, lower end)

    @property
    def diagram(self):
        return self.fourplat.diagram

    def _arc_eastbound(self, endpoint):
        """True when the strand exits the tangle through this endpoint."""
        c, pos = endpoint
        rot = self.fourplat.rotations[c]
        over_in = 3 if self.diagram.signs[c] > 0 else 1
        return (pos - rot) % 4 not in (0, over_in)

    def montesinos_type(self):
        """Type I when the arcs joining adjacent tangles are co-directed.

        With a single tangle the arcs reaching the closure on its east
        side play the same role.  Consistency across all gaps is checked.
        """
        verdicts = []
        for up, low in self.gap_ports:
            verdicts.append(self._arc_eastbound(up) == self._arc_eastbound(low))
        if len(set(verdicts)) > 1:
            raise DiagramError("montesinos type is not well defined on this diagram")
        return TYPE_I if verdicts[0] else TYPE_II

    def classification(self):
        """Per tangle, (P_i, A_i) as 1-based entry-index sets."""
        out = []
        for boxes in self.tangle_boxes:
            P, A = set(), set()
            for j, bi in enumerate(boxes, start=1):
                if self.fourplat.box_parallel(bi):
                    P.add(j)
                else:
                    A.add(j)
            out.append((P, A))
        return out

    def e_parallel(self):
        if self.e_box is None:
            return None
        return self.fourplat.box_parallel(self.e_box)

    def _all_end_antiparallel_vertical(self):
        """True when every tangle's last real (vertical) box is anti-parallel."""
        for boxes in self.tangle_boxes:
            if self.fourplat.box_parallel(boxes[-1]):
                return False
        return True

    def seifert_count_formula(self):
        """Seifert circles of the diagram from the type-split formula."""
        base = 0
        for (P, A), vec in zip(self.classification(), self.params.tangles):
            entries = [a for a in vec if a != 0]
            base += sum(abs(entries[j - 1]) - 1 for j in A) + len(P)
        if self.montesinos_type() == TYPE_I:
            return base + 2
        e = self.params.e
        c = 2 if e == 0 and self._all_end_antiparallel_vertical() else 0
        return base + abs(e) + c

    def nd_bound_formula(self):
        """Upper bound for n_d; exact when the diagram is alternating."""
        base = 0
        for (P, A), vec in zip(self.classification(), self.params.tangles):
            entries = [a for a in vec if a != 0]
            base += sum(abs(entries[j - 1]) - 1 for j in P) + len(A)
        e = self.params.e
        if self.montesinos_type() == TYPE_I:
            return base + abs(e) - 1
        c = 2 if e == 0 and self._all_end_antiparallel_vertical() else 0
        return base - c + 1

    def circle_census(self):
        """(small, medium, large) Seifert-circle counts on the diagram.

        Small circles live between consecutive anti-parallel half-twists
        of one box, medium circles stay inside one tangle, large circles
        span more than one tangle (closure arcs included).
        """
        d = self.diagram
        dec = d.seifert_circles()
        circle_boxes = {}
        box_of = {}
        for bi, (_axis, _val, cids) in enumerate(self.fourplat.boxes, start=1):
            for c in cids:
                box_of[c] = bi
        tangle_of_box = {}
        for ti, boxes in enumerate(self.tangle_boxes):
            for bi in boxes:
                tangle_of_box[bi] = ti
        for (c, _k), circ in dec.membership.items():
            circle_boxes.setdefault(circ, set()).add(box_of[c])
        small = medium = large = 0
        for circ, boxes in circle_boxes.items():
            tangles = {tangle_of_box.get(bi) for bi in boxes}
            if len(boxes) == 1 and None not in tangles:
                # within one box: small iff it touches only that box's
                # crossings twice (a bigon circle between two twists)
                small += 1
            elif len(tangles) == 1 and None not in tangles:
                medium += 1
            else:
                large += 1
        return small, medium, large


def montesinos_diagram(params):
    """Build the Montesinos diagram for validated parameters."""
    if isinstance(params, (list, tuple)):
        raise DiagramError("wrap tangle data in MontesinosParams first")
    shadow = _Shadow()
    built = []
    for v in params.tangles:
        built.append(tangle_from_vector(v, shadow))
    total = built[0]
    east_snapshots = []
    for t2 in built[1:]:
        east_snapshots.append((total.ends["NE"], total.ends["SE"]))
        total = tangle_sum(total, t2)
    final_gap = (total.ends["NE"], total.ends["SE"])
    if params.e:
        total.add_twists("h", params.e)
        e_box = len(total.boxes)
    else:
        e_box = None
    # adjacent-tangle gaps define the type; with one tangle the arcs
    # heading into the e twists / closure play that role
    fixed_gaps = east_snapshots if east_snapshots else [final_gap]
    shadow2, loops, top_pair = numerator_close(total)
    entry = top_pair[1] if top_pair else None
    d, rot = orient_shadow(shadow2, loops, entry=entry)
    fp = FourPlat(None, d, total.boxes, rot, shadow2.compass)
    # map boxes back to tangles (vector order, skipping zero boxes)
    tangle_boxes = []
    bi = 0
    for v in params.tangles:
        boxes = []
        for a in v:
            bi += 1
            if a != 0:
                boxes.append(bi)
        tangle_boxes.append(boxes)
    if e_box is not None:
        bi += 1
        e_box = bi
    return Montesinos(params, fp, tangle_boxes, e_box, fixed_gaps)


def montesinos_type(params):
    return montesinos_diagram(params).montesinos_type()


def montesinos_seifert_count(params):
    """Formula value; must equal the direct count on the built diagram."""
    return montesinos_diagram(params).seifert_count_formula()


def montesinos_nd_bound(params):
    """Upper bound for n_d (exact for alternating Montesinos diagrams)."""
    return montesinos_diagram(params).nd_bound_formula()
