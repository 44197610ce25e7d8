"""Abstract-polytope checking for graded face posets.

Two independent checkers are provided.  ``verify_axioms`` tests the
four classical properties: a unique least and greatest face, uniform
flag length, strong connectedness of every section, and the diamond
condition.  ``verify_inductive`` instead rebuilds the poset bottom-up:
each face's down-set must arise from a closely connected, bivalent set
of one-rank-lower polytopes.  The two accept exactly the same posets;
the tests exercise that equivalence rather than assuming it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import MalformedPosetError
from .facelattice import FacePoset, face_label
from .hypergraph import bits_of


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one checker run.

    For the inductive checker the four flags hold the matching
    conditions: p1 bounds, p2 base cases and facet coverage, p3 close
    connectedness, p4 bivalence.
    """

    p1_ok: bool
    p2_ok: bool
    p3_ok: bool
    p4_ok: bool
    rank: int
    counterexamples: tuple[tuple[str, tuple[str, ...]], ...] = field(default=())
    flags_checked: int = 0
    sections_checked: int = 0

    @property
    def ok(self) -> bool:
        return self.p1_ok and self.p2_ok and self.p3_ok and self.p4_ok

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "p1_ok": self.p1_ok,
            "p2_ok": self.p2_ok,
            "p3_ok": self.p3_ok,
            "p4_ok": self.p4_ok,
            "rank": self.rank,
            "flags_checked": self.flags_checked,
            "sections_checked": self.sections_checked,
            "counterexamples": [
                {"property": prop, "witnesses": list(wit)}
                for prop, wit in self.counterexamples
            ],
        }


def _well_formed(p: FacePoset) -> None:
    """Order must be a partial order and ranks strictly monotone on it."""
    n = len(p.faces)
    for i in range(n):
        above = p._above[i]
        if not above >> i & 1:
            raise MalformedPosetError("order is not reflexive")
        for j in bits_of(above & ~(1 << i)):
            if p._above[j] >> i & 1:
                raise MalformedPosetError("order is not antisymmetric")
            if p._above[j] & ~above:
                raise MalformedPosetError("order is not transitive")
            if p.ranks[j] <= p.ranks[i]:
                raise MalformedPosetError(
                    f"rank does not increase from {face_label(p.faces[i])} "
                    f"to {face_label(p.faces[j])}")


def _bounds(p: FacePoset) -> tuple[list[int], list[int]]:
    n = len(p.faces)
    full = (1 << n) - 1
    bottoms = [i for i in range(n) if p._above[i] == full]
    tops = [i for i in range(n) if p._below[i] == full]
    return bottoms, tops


def _connected_mask(p: FacePoset, nodes: int) -> bool:
    """Connectivity of faces under comparability, restricted to ``nodes``."""
    if nodes == 0:
        return True
    start = nodes & -nodes
    reached = start
    while True:
        grow = reached
        for u in bits_of(reached):
            grow |= (p._above[u] | p._below[u]) & nodes
        if grow == reached:
            break
        reached = grow
    return reached == nodes


def verify_axioms(p: FacePoset) -> VerificationReport:
    """Check the least/greatest, flag-length, strong-connectedness and
    diamond properties, reporting witnesses for each failure."""
    _well_formed(p)
    n = len(p.faces)
    counter: list[tuple[str, tuple[str, ...]]] = []
    r = p.rank

    bottoms, tops = _bounds(p)
    p1 = len(bottoms) == 1 and len(tops) == 1
    if not p1:
        witness = tuple(face_label(p.faces[i]) for i in (bottoms + tops)[:4])
        counter.append(("P1", witness))

    # flags: maximal chains walked along covers from the minimal faces
    ups: list[list[int]] = [[] for _ in range(n)]
    for a, b in p.covers():
        ups[a].append(b)
    minimals = [i for i in range(n) if p._below[i] == 1 << i]
    expected = r + 2
    flags_checked = 0
    p2 = True
    stack = [(i, 1) for i in minimals]
    while stack:
        i, length = stack.pop()
        if not ups[i]:
            flags_checked += 1
            if length != expected:
                if p2:
                    counter.append(("P2", (face_label(p.faces[i]), f"length {length}")))
                p2 = False
        else:
            for j in ups[i]:
                stack.append((j, length + 1))

    # strong connectedness: only sections of rank >= 2 need the walk
    p3 = True
    sections_checked = 0
    for f in range(n):
        for g in bits_of(p._above[f] & ~(1 << f)):
            if p.ranks[g] - p.ranks[f] < 3:
                continue
            sections_checked += 1
            nodes = (p._above[f] & p._below[g]) & ~(1 << f) & ~(1 << g)
            if nodes.bit_count() <= 1:
                continue
            if not _connected_mask(p, nodes):
                p3 = False
                counter.append(("P3", (face_label(p.faces[f]),
                                       face_label(p.faces[g]))))

    # diamond: exactly two faces strictly between any rank-gap-2 pair
    p4 = True
    for f in range(n):
        for g in bits_of(p._above[f] & ~(1 << f)):
            if p.ranks[g] - p.ranks[f] != 2:
                continue
            mids = (p._above[f] & p._below[g]) & ~(1 << f) & ~(1 << g)
            if mids.bit_count() != 2:
                p4 = False
                counter.append(("P4", (face_label(p.faces[f]),
                                       face_label(p.faces[g]),
                                       f"{mids.bit_count()} between")))

    return VerificationReport(p1, p2, p3, p4, r, tuple(counter),
                              flags_checked, sections_checked)


def verify_inductive(p: FacePoset) -> VerificationReport:
    """Rebuild the poset rank by rank.

    The down-set of every face of rank k >= 1 must be assembled from its
    rank k-1 faces: those cover everything below (p2), share each rank
    k-2 face exactly twice (p4, bivalence) and hang together through
    shared rank k-2 faces (p3, close connectedness).  Rank -1 and 0
    down-sets must be the one- and two-face base posets.
    """
    _well_formed(p)
    n = len(p.faces)
    counter: list[tuple[str, tuple[str, ...]]] = []
    r = p.rank

    bottoms, tops = _bounds(p)
    p1 = len(bottoms) == 1 and len(tops) == 1
    if not p1:
        witness = tuple(face_label(p.faces[i]) for i in (bottoms + tops)[:4])
        counter.append(("bounds", witness))

    p2 = p3 = p4 = True
    sections_checked = 0
    rank_index: dict[int, list[int]] = {}
    for i, rk in enumerate(p.ranks):
        rank_index.setdefault(rk, []).append(i)

    for i in sorted(range(n), key=lambda i: p.ranks[i]):
        rk = p.ranks[i]
        bel = p._below[i]
        if rk == -1:
            if bel != 1 << i:
                p2 = False
                counter.append(("base-rank-minus-1", (face_label(p.faces[i]),)))
            continue
        if rk == 0:
            others = bel & ~(1 << i)
            ok = others.bit_count() == 1 and all(
                p.ranks[j] == -1 for j in bits_of(others))
            if not ok:
                p2 = False
                counter.append(("base-rank-0", (face_label(p.faces[i]),)))
            continue
        sections_checked += 1
        facets = [j for j in rank_index.get(rk - 1, []) if bel >> j & 1]
        if not facets:
            p2 = False
            counter.append(("facet-coverage", (face_label(p.faces[i]), "no facets")))
            continue
        # coverage: everything strictly below must sit inside a facet
        covered = 0
        for f in facets:
            covered |= p._below[f]
        missing = bel & ~covered & ~(1 << i)
        if missing:
            p2 = False
            wit = next(bits_of(missing))
            counter.append(("facet-coverage", (face_label(p.faces[i]),
                                               face_label(p.faces[wit]))))
        # bivalence: every rank k-2 face below i lies in exactly 2 facets
        smask = 0
        for f in facets:
            smask |= 1 << f
        for y in rank_index.get(rk - 2, []):
            if not bel >> y & 1:
                continue
            cnt = (p._above[y] & smask).bit_count()
            if cnt != 2:
                p4 = False
                counter.append(("bivalence", (face_label(p.faces[i]),
                                              face_label(p.faces[y]),
                                              f"in {cnt} facets")))
        # close connectedness through shared rank k-2 faces
        if len(facets) > 1:
            ridge_rank = rk - 2
            ridge_mask = 0
            for y in rank_index.get(ridge_rank, []):
                ridge_mask |= 1 << y
            rid = {f: p._below[f] & ridge_mask for f in facets}
            reached = {facets[0]}
            frontier = [facets[0]]
            while frontier:
                u = frontier.pop()
                for v in facets:
                    if v not in reached and rid[u] & rid[v]:
                        reached.add(v)
                        frontier.append(v)
            if len(reached) != len(facets):
                p3 = False
                counter.append(("close-connectedness", (face_label(p.faces[i]),)))

    return VerificationReport(p1, p2, p3, p4, r, tuple(counter),
                              0, sections_checked)
