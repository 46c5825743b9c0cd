"""
Diagram reductions: nugatory-crossing removal, Reidemeister II removal and
Reidemeister III slides, plus the greedy simplifier built from them.

All moves preserve the link type.  Crossing ids survive every move, so
witnesses computed elsewhere keep referring to the original crossings.
"""

from __future__ import annotations

from .diagram import DiagramError, LinkDiagram, from_gauss_visits


def remove_nugatory(d, c=None):
    """Undo a nugatory crossing by rotating one side half a turn.

    Strand order is unchanged, so combinatorially the crossing is simply
    deleted from the code.
    """
    cands = d.nugatory_crossings()
    if not cands:
        raise DiagramError("no nugatory crossing to remove")
    if c is None:
        c = cands[0]
    elif c not in cands:
        raise DiagramError("crossing %r is not nugatory" % (c,))
    out = d._delete_crossing(c)
    out._check_planarity()
    return out


def _bigon_faces(d):
    """Reidemeister-II removable bigons as sorted crossing pairs."""
    out = []
    for face in d.faces():
        if len(face) != 2:
            continue
        arcs = [arc for arc, _fwd in face]
        cids = {end[0] for arc in arcs for end in arc}
        if len(cids) != 2:
            continue
        kinds = []
        for tail, head in arcs:
            kinds.append((tail[1] in (1, 3), head[1] in (1, 3)))
        # one strand passes over at both crossings, the other under at both
        if ({kinds[0], kinds[1]} == {(True, True), (False, False)}):
            out.append(tuple(sorted(cids)))
    return sorted(set(out))


def remove_bigon(d, pair=None):
    """Undo a Reidemeister-II bigon, deleting both crossings."""
    cands = _bigon_faces(d)
    if not cands:
        raise DiagramError("no removable bigon")
    if pair is None:
        pair = cands[0]
    elif tuple(sorted(pair)) not in cands:
        raise DiagramError("pair %r is not a removable bigon" % (pair,))
    c1, c2 = pair
    out = d._delete_crossing(c1)._delete_crossing(c2)
    out._check_planarity()
    return out


def _visit_lists(d):
    """Per-component visit lists [(crossing, is_under), ...]."""
    return [[(c, k == 0) for c, k in comp] for comp in d.components()]


def _r3_triangles(d):
    """Triangular faces admitting a Reidemeister-III slide.

    Applicable when some edge of the triangle lies over at both of its
    crossings (then another lies under at both).
    """
    out = []
    for face in d.faces():
        if len(face) != 3:
            continue
        arcs = [arc for arc, _ in face]
        cids = {end[0] for arc in arcs for end in arc}
        if len(cids) != 3:
            continue
        if any(tail[1] in (1, 3) and head[1] in (1, 3) for tail, head in arcs):
            out.append(tuple(sorted(arcs)))
    return sorted(set(out))


def apply_r3(d, triangle):
    """Slide a strand across the triangle by swapping three adjacent visits."""
    visits = _visit_lists(d)
    for tail, head in triangle:
        ca, ko = tail
        cb, ki = head
        # the visit exiting through `tail` is an under-visit iff ko == 2
        va = (ca, ko == 2)
        vb = (cb, ki == 0)
        done = False
        for comp in visits:
            m = len(comp)
            for j in range(m):
                if comp[j] == va and comp[(j + 1) % m] == vb:
                    comp[j], comp[(j + 1) % m] = comp[(j + 1) % m], comp[j]
                    done = True
                    break
            if done:
                break
        if not done:
            raise DiagramError("triangle edge %r not adjacent in code" % ((tail, head),))
    return from_gauss_visits(visits, d.signs)


def greedy_reduce(d):
    """Apply nugatory and Reidemeister-II removals until none remain."""
    while True:
        nug = d.nugatory_crossings()
        if nug:
            d = remove_nugatory(d, nug[0])
            continue
        bigons = _bigon_faces(d)
        if bigons:
            d = remove_bigon(d, bigons[0])
            continue
        return d


def _r3_search(d, depth):
    """Breadth-first search over R3 slides for a diagram that reduces."""
    seen = {d.canonical_key()}
    frontier = [d]
    for _ in range(depth):
        nxt = []
        for cur in frontier:
            for tri in _r3_triangles(cur):
                try:
                    cand = apply_r3(cur, tri)
                except DiagramError:
                    continue
                key = cand.canonical_key()
                if key in seen:
                    continue
                seen.add(key)
                if cand.nugatory_crossings() or _bigon_faces(cand):
                    return cand
                nxt.append(cand)
        frontier = nxt
        if not frontier:
            break
    return None


def simplify(d, r3_depth=2):
    """Greedy crossing reduction with a bounded R3 lookahead.

    Never returns a diagram with more crossings than the input and never
    changes the link type.
    """
    d = greedy_reduce(d)
    while d.n_crossings and r3_depth > 0:
        better = _r3_search(d, r3_depth)
        if better is None:
            break
        d = greedy_reduce(better)
    return d


def reduce_alternating(d):
    """Remove nugatory crossings from an alternating diagram.

    Each step removes one crossing and one Seifert circle, so the quantity
    Cr - s + 1 is preserved.
    """
    if not d.is_alternating():
        raise DiagramError("input diagram is not alternating")
    while True:
        nug = d.nugatory_crossings()
        if not nug:
            return d
        before = d.seifert_circle_count()
        d = remove_nugatory(d, nug[0])
        if d.seifert_circle_count() != before - 1 or not d.is_alternating():
            raise DiagramError("nugatory removal failed to reduce Seifert circles")
